"""
Exception hierarchy for the micro-tensile toolkit.

Validation problems derive from ``ValueError``, numerical failures from
``RuntimeError``; the CLI maps the two families onto exit codes 2 and 3.
"""

from typing import Any, Optional, Sequence, Tuple


class MicrotensileError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MicrotensileError, ValueError):
    """An argument lies outside the domain of a physical law."""


class InvalidModelError(MicrotensileError, ValueError):
    """A material model is internally inconsistent."""


class GeometryError(MicrotensileError, ValueError):
    """A beam, actuator or specimen declaration violates its invariants."""


class CalibrationError(MicrotensileError, ValueError):
    """A free-beam calibration cannot be computed."""


class ReductionError(MicrotensileError, ValueError):
    """A measurement record cannot be reduced to a stress-strain point."""


class DesignError(MicrotensileError, ValueError):
    """A campaign design request is malformed."""


class ConfigError(MicrotensileError, ValueError):
    """A campaign configuration document is invalid."""


class UnknownMachineError(MicrotensileError, LookupError):
    """One or more measurement records reference undeclared machines."""

    def __init__(self, machine_ids: Sequence[str]) -> None:
        self.machine_ids = list(machine_ids)
        super().__init__(f"Unknown machine id(s): {', '.join(self.machine_ids)}")


class SolverError(MicrotensileError, RuntimeError):
    """The equilibrium root finder did not converge."""

    def __init__(
        self,
        message: str,
        bracket: Tuple[float, float],
        last_iterate: Optional[float] = None,
    ) -> None:
        self.bracket = bracket
        self.last_iterate = last_iterate
        super().__init__(f"{message} (bracket={bracket}, last={last_iterate})")


class FitError(MicrotensileError, RuntimeError):
    """A material-parameter fit failed."""

    def __init__(self, message: str, best_iterate: Any = None) -> None:
        self.best_iterate = best_iterate
        super().__init__(message)


class InsufficientDataError(FitError):
    """Too few points fall in the plastic regime."""


class DegenerateFitError(FitError):
    """The plastic line is parallel to the elastic line."""


class NonIdentifiableError(FitError):
    """The point cloud cannot constrain the requested parameters."""
