"""Machine geometry, equilibrium solver and synthetic measurements."""

from .equilibrium import (
    EquilibriumState,
    actuator_strain_at,
    force_residual,
    linear_displacement_estimate,
    solve_equilibrium,
    solve_many,
    specimen_strain_at,
)
from .geometry import (
    MAX_MISMATCH,
    ActuatorSpec,
    BeamSpec,
    Machine,
    SpecimenSpec,
    check_mismatch,
    free_contraction,
)
from .measurement import MeasurementRecord, machine_seeds, synthesize_measurement

__all__ = [
    "MAX_MISMATCH",
    "ActuatorSpec",
    "BeamSpec",
    "EquilibriumState",
    "Machine",
    "MeasurementRecord",
    "SpecimenSpec",
    "actuator_strain_at",
    "check_mismatch",
    "force_residual",
    "free_contraction",
    "linear_displacement_estimate",
    "machine_seeds",
    "solve_equilibrium",
    "solve_many",
    "specimen_strain_at",
    "synthesize_measurement",
]
