"""Tests for the exception hierarchy."""

import pytest

from utils.errors import (
    ConfigError,
    DegenerateFitError,
    DesignError,
    DomainError,
    FitError,
    InsufficientDataError,
    MicrotensileError,
    NonIdentifiableError,
    SolverError,
    UnknownMachineError,
)


@pytest.mark.parametrize("error", [DomainError, DesignError, ConfigError])
def test_validation_errors_are_value_errors(error):
    assert issubclass(error, ValueError)
    assert issubclass(error, MicrotensileError)


@pytest.mark.parametrize("error", [InsufficientDataError, DegenerateFitError, NonIdentifiableError])
def test_fit_family(error):
    assert issubclass(error, FitError)
    assert issubclass(error, RuntimeError)


def test_solver_error_carries_bracket():
    error = SolverError("no root", (0.0, 1e-6), last_iterate=5e-7)
    assert error.bracket == (0.0, 1e-6)
    assert error.last_iterate == 5e-7
    assert "bracket=(0.0, 1e-06)" in str(error)


def test_unknown_machine_lists_ids():
    error = UnknownMachineError(["m07", "m09"])
    assert isinstance(error, LookupError)
    assert str(error) == "Unknown machine id(s): m07, m09"


def test_fit_error_best_iterate():
    assert FitError("diverged", best_iterate={"n": 0.1}).best_iterate == {"n": 0.1}
