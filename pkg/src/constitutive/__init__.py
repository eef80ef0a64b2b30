"""Constitutive laws for the tested film."""

from .material import (
    HardeningLaw,
    MaterialModel,
    engineering_strain,
    power_law_coefficient,
    stress_at_strain,
    tangent_modulus,
)

__all__ = [
    "HardeningLaw",
    "MaterialModel",
    "engineering_strain",
    "power_law_coefficient",
    "stress_at_strain",
    "tangent_modulus",
]
