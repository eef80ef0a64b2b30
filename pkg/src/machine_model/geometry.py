"""
Geometry of an elementary tensile stage.

Lengths are in metres, moduli in Pa. Mismatch terms ``alpha_dt`` are the
dimensionless thermal-strain products calibrated on free-standing beams.
"""

import math
from dataclasses import dataclass, replace
from typing import Type

from constitutive import MaterialModel
from utils.errors import GeometryError, MicrotensileError

# Sanity bound on any calibrated mismatch term.
MAX_MISMATCH = 0.05


def check_mismatch(
    value: float,
    name: str,
    allow_zero: bool = True,
    error: Type[MicrotensileError] = GeometryError,
) -> None:
    """Reject a mismatch term outside ``[0, MAX_MISMATCH)``; zero too unless ``allow_zero``."""
    lower_ok = value >= 0.0 if allow_zero else value > 0.0
    if not (math.isfinite(value) and lower_ok and value < MAX_MISMATCH):
        bound = f"[0, {MAX_MISMATCH})" if allow_zero else f"(0, {MAX_MISMATCH})"
        raise error(f"{name} must lie in {bound}, got {value}")


@dataclass(frozen=True)
class BeamSpec:
    """Deposited beam geometry."""

    deposited_length: float
    width: float
    thickness: float

    def __post_init__(self) -> None:
        for name in ("deposited_length", "width", "thickness"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise GeometryError(f"Beam {name} must be positive, got {value}")

    @property
    def cross_section(self) -> float:
        """Cross-sectional area S = width * thickness, in m^2."""
        return self.width * self.thickness

    def with_length(self, deposited_length: float) -> "BeamSpec":
        return replace(self, deposited_length=deposited_length)


@dataclass(frozen=True)
class ActuatorSpec:
    """Strictly elastic nitride actuator beam."""

    beam: BeamSpec
    youngs_modulus: float
    alpha_dt: float

    def __post_init__(self) -> None:
        if not self.youngs_modulus > 0.0:
            raise GeometryError(
                f"Actuator Young's modulus must be positive, got {self.youngs_modulus}"
            )
        check_mismatch(self.alpha_dt, "Actuator alpha_dt", allow_zero=False)

    @property
    def free_contraction(self) -> float:
        return free_contraction(self.beam, self.alpha_dt)

    def with_length(self, deposited_length: float) -> "ActuatorSpec":
        return replace(self, beam=self.beam.with_length(deposited_length))


@dataclass(frozen=True)
class SpecimenSpec:
    """Tested film beam, attached to the actuator and the substrate."""

    beam: BeamSpec
    material: MaterialModel
    alpha_dt: float = 0.0

    def __post_init__(self) -> None:
        check_mismatch(self.alpha_dt, "Specimen alpha_dt", allow_zero=True)

    @property
    def free_contraction(self) -> float:
        return free_contraction(self.beam, self.alpha_dt)

    @property
    def initial_length(self) -> float:
        """Stress-free length at room temperature, l0 = l_d * (1 - alpha_dt)."""
        length = self.beam.deposited_length
        return length - length * self.alpha_dt

    def with_length(self, deposited_length: float) -> "SpecimenSpec":
        return replace(self, beam=self.beam.with_length(deposited_length))


@dataclass(frozen=True)
class Machine:
    """One actuator-specimen couple."""

    id: str
    actuator: ActuatorSpec
    specimen: SpecimenSpec

    def __post_init__(self) -> None:
        if not self.id:
            raise GeometryError("Machine id must be a non-empty string")

    @property
    def area_ratio(self) -> float:
        """S_ac / S_al, held at deposited values."""
        return self.actuator.beam.cross_section / self.specimen.beam.cross_section


def free_contraction(beam: BeamSpec, alpha_dt: float) -> float:
    """Displacement of a released, unattached beam: ``l_d * alpha_dt``."""
    check_mismatch(alpha_dt, "alpha_dt", allow_zero=True)
    return beam.deposited_length * alpha_dt
