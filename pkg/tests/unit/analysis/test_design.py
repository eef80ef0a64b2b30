"""Tests for campaign design by length matching."""

import math

import numpy as np
import pytest

from analysis import VariedBeam, design_campaign
from constitutive import HardeningLaw, MaterialModel
from machine_model import ActuatorSpec, BeamSpec, SpecimenSpec, solve_equilibrium
from utils.errors import DesignError

BOUNDS = (10e-6, 5e-3)


def test_ten_targets_give_ten_machines(actuator, specimen):
    targets = list(np.linspace(0.001, 0.01, 10))
    design = design_campaign(actuator, specimen, targets, BOUNDS)
    assert design.feasible
    assert [m.id for m in design.machines] == [f"m{i:02d}" for i in range(10)]
    for target, point in zip(targets, design.predicted_points):
        assert point.strain == pytest.approx(target, rel=1e-4)


def test_monotone_targets_give_monotone_lengths(actuator, specimen):
    design = design_campaign(actuator, specimen, [0.001, 0.003, 0.006, 0.009], BOUNDS)
    lengths = [m.actuator.beam.deposited_length for m in design.machines]
    assert lengths == sorted(lengths)
    assert len(set(lengths)) == 4


def test_predicted_points_match_solver(actuator, specimen):
    design = design_campaign(actuator, specimen, [0.002, 0.008], BOUNDS)
    for machine, point in zip(design.machines, design.predicted_points):
        state = solve_equilibrium(machine)
        assert point.strain == state.specimen_log_strain
        assert point.stress == state.specimen_stress


def test_zero_target_gives_shortest_actuator(actuator, specimen):
    design = design_campaign(actuator, specimen, [0.0, 0.004], BOUNDS)
    assert design.feasible
    assert design.machines[0].actuator.beam.deposited_length == BOUNDS[0]
    assert design.target_strains == [0.0, 0.004]


def test_unreachable_target_is_reported(actuator, specimen):
    design = design_campaign(actuator, specimen, [0.004, 0.5], BOUNDS)
    assert not design.feasible
    assert len(design.machines) == 1
    infeasible = design.infeasible[0]
    assert infeasible.target_strain == 0.5
    assert infeasible.achievable_max < 0.5
    assert "max strain" in infeasible.message


@pytest.mark.parametrize(
    "targets, bounds, message",
    [
        ([], BOUNDS, "no targets"),
        ([0.002, 0.001], BOUNDS, "sorted"),
        ([-0.001, 0.001], BOUNDS, "non-negative"),
        ([0.001], (5e-3, 10e-6), "Length bounds"),
    ],
)
def test_malformed_requests(actuator, specimen, targets, bounds, message):
    with pytest.raises(DesignError, match=message):
        design_campaign(actuator, specimen, targets, bounds)


def test_elastic_design_inverts_two_spring_form():
    alpha = 5e-6
    e_ac, s_ac = 220e9, 8e-6 * 500e-9
    e_al, s_al, l_al = 70e9, 4e-6 * 250e-9, 200e-6
    actuator = ActuatorSpec(BeamSpec(1e-3, 8e-6, 500e-9), e_ac, alpha)
    specimen = SpecimenSpec(
        BeamSpec(l_al, 4e-6, 250e-9), MaterialModel(e_al, HardeningLaw.LINEAR_ELASTIC)
    )
    target = 2e-5
    design = design_campaign(actuator, specimen, [target], BOUNDS)

    u = l_al * math.expm1(target)
    stiffness_ratio = e_al * s_al / (e_ac * s_ac * l_al)
    expected_length = u / (alpha - u * stiffness_ratio)
    designed = design.machines[0].actuator.beam.deposited_length
    assert designed == pytest.approx(expected_length, rel=1e-4)


def test_varying_the_specimen(actuator, specimen):
    design = design_campaign(
        actuator,
        specimen,
        [0.002, 0.005, 0.01],
        (50e-6, 2e-3),
        vary=VariedBeam.SPECIMEN,
        id_prefix="s",
    )
    assert design.feasible
    assert design.varied is VariedBeam.SPECIMEN
    lengths = [m.specimen.beam.deposited_length for m in design.machines]
    assert lengths == sorted(lengths, reverse=True)
    assert all(m.actuator == actuator for m in design.machines)
    assert design.machines[0].id == "s00"
