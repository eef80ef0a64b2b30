"""
One-dimensional monotone constitutive laws.

The tested film is described by a uniaxial law evaluated on logarithmic
strain. Three laws are supported: linear elastic, elastic-perfectly-plastic
and elastic-power-law hardening (``sigma = K * eps**n`` above yield).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from utils.errors import DomainError, InvalidModelError

ArrayLike = Union[float, np.ndarray]

# Relative tolerance on the power-law branch meeting the elastic line at yield.
CONTINUITY_TOLERANCE = 1e-9


class HardeningLaw(str, Enum):
    """Post-yield branch of a material model."""

    LINEAR_ELASTIC = "linear-elastic"
    PERFECTLY_PLASTIC = "perfectly-plastic"
    POWER_LAW = "power-law"


@dataclass(frozen=True)
class MaterialModel:
    """Uniaxial constitutive law of a film.

    Attributes:
        youngs_modulus: Elastic modulus E in Pa.
        law: Post-yield branch.
        yield_strength: sigma_y in Pa; required unless the law is linear elastic.
        hardening_coefficient: K in Pa; derived from continuity when omitted.
        hardening_exponent: n, with 0 < n < 1; power law only.
        label: Free text such as "Al 250 nm".
    """

    youngs_modulus: float
    law: HardeningLaw = HardeningLaw.PERFECTLY_PLASTIC
    yield_strength: Optional[float] = None
    hardening_coefficient: Optional[float] = None
    hardening_exponent: Optional[float] = None
    label: str = ""

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "law", HardeningLaw(self.law))
        except ValueError as exc:
            known = ", ".join(law.value for law in HardeningLaw)
            raise InvalidModelError(
                f"Unknown hardening law {self.law!r}; expected one of {known}"
            ) from exc
        if not self.youngs_modulus > 0:
            raise InvalidModelError(
                f"Young's modulus must be positive, got {self.youngs_modulus}"
            )
        if self.law is HardeningLaw.LINEAR_ELASTIC:
            return
        if self.yield_strength is None or not self.yield_strength > 0:
            raise InvalidModelError(
                f"{self.law.value} law needs a positive yield strength, "
                f"got {self.yield_strength}"
            )
        if self.law is HardeningLaw.POWER_LAW:
            self._validate_power_law()

    def _validate_power_law(self) -> None:
        n = self.hardening_exponent
        if n is None or not 0.0 < n < 1.0:
            raise InvalidModelError(f"Hardening exponent must lie in (0, 1), got {n}")
        derived = self.yield_strength / self.yield_strain**n
        if self.hardening_coefficient is None:
            object.__setattr__(self, "hardening_coefficient", derived)
            return
        mismatch = abs(self.hardening_coefficient * self.yield_strain**n - self.yield_strength)
        if mismatch > CONTINUITY_TOLERANCE * self.yield_strength:
            raise InvalidModelError(
                f"Power-law branch misses the yield point by {mismatch:.3e} Pa; "
                f"K must be {derived:.9e} Pa for continuity"
            )

    @property
    def yield_strain(self) -> float:
        """Strain at which the elastic line reaches yield (inf when elastic)."""
        if self.yield_strength is None or self.law is HardeningLaw.LINEAR_ELASTIC:
            return float("inf")
        return self.yield_strength / self.youngs_modulus

    def describe(self) -> str:
        """Short human-readable summary."""
        parts = [f"E={self.youngs_modulus:.4g} Pa", self.law.value]
        if self.law is not HardeningLaw.LINEAR_ELASTIC:
            parts.append(f"sigma_y={self.yield_strength:.4g} Pa")
        if self.law is HardeningLaw.POWER_LAW:
            parts.append(f"K={self.hardening_coefficient:.4g} Pa n={self.hardening_exponent:.4g}")
        prefix = f"{self.label}: " if self.label else ""
        return prefix + ", ".join(parts)


def _as_strain_array(strain: ArrayLike) -> np.ndarray:
    eps = np.asarray(strain, dtype=float)
    if np.any(np.isnan(eps)):
        raise DomainError("Strain must not be NaN")
    if np.any(eps < 0.0):
        raise DomainError(
            f"Constitutive laws are tensile-only; got strain {float(np.min(eps)):.6g}"
        )
    return eps


def _unwrap(result: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(result) if np.ndim(like) == 0 else result


def stress_at_strain(model: MaterialModel, strain: ArrayLike) -> ArrayLike:
    """Evaluate the uniaxial stress of ``model`` at logarithmic ``strain``.

    Args:
        model: Constitutive law.
        strain: Non-negative strain, scalar or array.

    Returns:
        Stress in Pa, with the same shape as ``strain``.

    Raises:
        DomainError: If any strain is negative.
    """
    eps = _as_strain_array(strain)
    elastic = model.youngs_modulus * eps
    if model.law is HardeningLaw.LINEAR_ELASTIC:
        return _unwrap(elastic, strain)

    plastic_region = eps > model.yield_strain
    if model.law is HardeningLaw.PERFECTLY_PLASTIC:
        plastic = np.full_like(eps, model.yield_strength)
    else:
        # Elastic points are evaluated too; np.where discards them.
        plastic = model.hardening_coefficient * np.power(eps, model.hardening_exponent)
    return _unwrap(np.where(plastic_region, plastic, elastic), strain)


def tangent_modulus(model: MaterialModel, strain: ArrayLike) -> ArrayLike:
    """Derivative of :func:`stress_at_strain`; the plastic slope at the kink."""
    eps = _as_strain_array(strain)
    E = model.youngs_modulus
    if model.law is HardeningLaw.LINEAR_ELASTIC:
        return _unwrap(np.full_like(eps, E), strain)

    plastic_region = eps >= model.yield_strain
    if model.law is HardeningLaw.PERFECTLY_PLASTIC:
        plastic = np.zeros_like(eps)
    else:
        n = model.hardening_exponent
        with np.errstate(divide="ignore"):
            plastic = n * model.hardening_coefficient * np.power(eps, n - 1.0)
    return _unwrap(np.where(plastic_region, plastic, E), strain)


def power_law_coefficient(yield_strength: float, youngs_modulus: float, exponent: float) -> float:
    """Coefficient K making ``K * eps**n`` pass through the yield point."""
    return yield_strength ** (1.0 - exponent) * youngs_modulus**exponent


def engineering_strain(log_strain: ArrayLike) -> ArrayLike:
    """Convert logarithmic strain to engineering strain, ``exp(eps) - 1``."""
    return _unwrap(np.expm1(np.asarray(log_strain, dtype=float)), log_strain)
