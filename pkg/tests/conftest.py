"""Shared fixtures: the reference Al film geometry and campaign configs."""

import json
from pathlib import Path

import pytest

from constitutive import HardeningLaw, MaterialModel
from machine_model import ActuatorSpec, BeamSpec, Machine, SpecimenSpec
from reduction import Calibration

FIXTURES_DIR = Path(__file__).parent / "fixtures"

E_AL = 70e9
E_AC = 220e9
ALPHA_AC = 2.0e-3
ALPHA_AL = 3.25e-4


@pytest.fixture(autouse=True)
def clean_settings_env(monkeypatch):
    """Keep MTM_* variables from the developer's shell out of the tests."""
    for name in (
        "MTM_LOG_LEVEL",
        "MTM_LOG_FILE",
        "MTM_LOG_ROTATION",
        "MTM_SOLVER_MAX_ITERATIONS",
        "MTM_SOLVER_WORKERS",
        "MTM_DESIGN_REL_TOL",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def al_400():
    return MaterialModel(E_AL, HardeningLaw.PERFECTLY_PLASTIC, 400e6, label="Al 250 nm")


@pytest.fixture
def actuator():
    """500 nm x 8 um nitride actuator, 1.5 mm long."""
    return ActuatorSpec(BeamSpec(1.5e-3, 8e-6, 500e-9), E_AC, ALPHA_AC)


@pytest.fixture
def specimen(al_400):
    """250 nm x 4 um Al specimen, 200 um long."""
    return SpecimenSpec(BeamSpec(200e-6, 4e-6, 250e-9), al_400, ALPHA_AL)


@pytest.fixture
def machine(actuator, specimen):
    return Machine("m00", actuator, specimen)


@pytest.fixture
def calibration():
    return Calibration(alpha_dt_al=ALPHA_AL, alpha_dt_ac=ALPHA_AC, source="test")


@pytest.fixture
def campaign_250nm():
    return json.loads((FIXTURES_DIR / "campaign_250nm.json").read_text())


@pytest.fixture
def campaign_500nm():
    return json.loads((FIXTURES_DIR / "campaign_500nm.json").read_text())


@pytest.fixture
def write_config(tmp_path):
    """Write a config mapping to ``tmp_path`` and return its path."""

    def _write(data, name="campaign.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path

    return _write
