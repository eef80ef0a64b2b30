"""Shared utilities for the micro-tensile toolkit."""

from .errors import (
    CalibrationError,
    ConfigError,
    DegenerateFitError,
    DesignError,
    DomainError,
    FitError,
    GeometryError,
    InsufficientDataError,
    InvalidModelError,
    MicrotensileError,
    NonIdentifiableError,
    ReductionError,
    SolverError,
    UnknownMachineError,
)

__all__ = [
    "CalibrationError",
    "ConfigError",
    "DegenerateFitError",
    "DesignError",
    "DomainError",
    "FitError",
    "GeometryError",
    "InsufficientDataError",
    "InvalidModelError",
    "MicrotensileError",
    "NonIdentifiableError",
    "ReductionError",
    "SolverError",
    "UnknownMachineError",
]
