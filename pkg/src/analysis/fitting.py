"""
Material-parameter extraction from reduced stress-strain points.

``fit_yield`` reads the yield strength where a straight line through the
plastic points meets the elastic line ``sigma = E * eps`` (optionally shifted
by a strain offset). ``fit_hardening`` fits an elastic-power-law model by
least squares on the plastic points.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from scipy import stats
from scipy.optimize import minimize_scalar

from constitutive import HardeningLaw, MaterialModel
from reduction import StressStrainPoint
from utils.errors import (
    DegenerateFitError,
    DomainError,
    FitError,
    InsufficientDataError,
    NonIdentifiableError,
)

PLASTIC_PERCENTILE = 0.6
GUESS_THRESHOLD_FACTOR = 1.5
EXPONENT_GRID = tuple(round(0.05 * k, 2) for k in range(1, 11))
EXPONENT_BOUNDS = (1e-6, 0.95)
TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PlasticLine:
    """Least-squares line ``sigma = slope * eps + intercept`` through plastic points."""

    slope: float
    intercept: float


@dataclass(frozen=True)
class FitResult:
    """Fitted material parameters and fit diagnostics."""

    yield_strength: float
    elastic_modulus_used: float
    plastic_line: PlasticLine
    residual_rms: float
    points_used: int
    model_fit: Optional[MaterialModel] = None
    method: str = "linear-extrapolation"
    plastic_threshold: float = 0.0
    offset: float = 0.0
    plateau_like: bool = False


def default_plastic_threshold(
    strains: np.ndarray, elastic_modulus: float, yield_guess: Optional[float] = None
) -> float:
    """1.5 * guess / E when a yield guess exists, else the 60th-percentile strain."""
    if yield_guess is not None:
        return GUESS_THRESHOLD_FACTOR * yield_guess / elastic_modulus
    return float(np.quantile(strains, PLASTIC_PERCENTILE, method="lower"))


def _sorted_arrays(points: Sequence[StressStrainPoint]) -> Tuple[np.ndarray, np.ndarray]:
    ordered = sorted((p.strain, p.stress) for p in points)
    if not ordered:
        return np.empty(0), np.empty(0)
    data = np.asarray(ordered, dtype=float)
    return data[:, 0], data[:, 1]


def _plastic_subset(
    points: Sequence[StressStrainPoint],
    elastic_modulus: float,
    plastic_threshold: Optional[float],
    yield_guess: Optional[float],
    minimum: int,
) -> Tuple[np.ndarray, np.ndarray, float]:
    if not elastic_modulus > 0.0:
        raise DomainError(f"Elastic modulus must be positive, got {elastic_modulus}")
    strains, stresses = _sorted_arrays(points)
    if strains.size == 0:
        raise InsufficientDataError("No points to fit")
    threshold = (
        plastic_threshold
        if plastic_threshold is not None
        else default_plastic_threshold(strains, elastic_modulus, yield_guess)
    )
    mask = strains > threshold
    if mask.sum() < minimum:
        raise InsufficientDataError(
            f"Need at least {minimum} points above plastic threshold {threshold:.6g}, "
            f"got {int(mask.sum())} of {strains.size}"
        )
    return strains[mask], stresses[mask], threshold


def _fit_line(strains: np.ndarray, stresses: np.ndarray) -> Tuple[PlasticLine, float]:
    if np.ptp(strains) == 0.0:
        line = PlasticLine(0.0, float(np.mean(stresses)))
    else:
        regression = stats.linregress(strains, stresses)
        line = PlasticLine(float(regression.slope), float(regression.intercept))
    residuals = stresses - (line.slope * strains + line.intercept)
    return line, float(np.sqrt(np.mean(residuals**2)))


def _intersect_elastic(line: PlasticLine, elastic_modulus: float, offset: float) -> float:
    denominator = elastic_modulus - line.slope
    if abs(denominator) <= TIE_TOLERANCE * elastic_modulus:
        raise DegenerateFitError(
            f"Plastic slope {line.slope:.6g} Pa is parallel to the elastic line",
            best_iterate=line,
        )
    yield_strain = (line.intercept + elastic_modulus * offset) / denominator
    return elastic_modulus * (yield_strain - offset)


def fit_yield(
    points: Sequence[StressStrainPoint],
    elastic_modulus: float,
    plastic_threshold: Optional[float] = None,
    yield_guess: Optional[float] = None,
    offset: float = 0.0,
) -> FitResult:
    """Linear-extrapolation yield strength.

    Args:
        points: Reduced points; order does not matter.
        elastic_modulus: Modulus of the elastic line, in Pa.
        plastic_threshold: Only points with a larger strain enter the line
            fit; defaults per :func:`default_plastic_threshold`.
        yield_guess: Optional yield strength guess used for the default threshold.
        offset: Strain offset of the elastic line (0 for the intersection
            reading, 0.002 for a 0.2 % offset yield).

    Raises:
        InsufficientDataError: Fewer than two plastic points.
        DegenerateFitError: Plastic line parallel to the elastic line.
        FitError: Non-positive extrapolated yield strength.
    """
    strains, stresses, threshold = _plastic_subset(
        points, elastic_modulus, plastic_threshold, yield_guess, minimum=2
    )
    line, rms = _fit_line(strains, stresses)
    yield_strength = _intersect_elastic(line, elastic_modulus, offset)
    if not yield_strength > 0.0:
        raise FitError(
            f"Extrapolated yield strength {yield_strength:.6g} Pa is not positive",
            best_iterate=line,
        )
    logger.info(
        f"Yield fit on {strains.size} points: sigma_y={yield_strength:.6e} Pa, "
        f"slope={line.slope:.4e} Pa, rms={rms:.3e} Pa"
    )
    return FitResult(
        yield_strength=yield_strength,
        elastic_modulus_used=elastic_modulus,
        plastic_line=line,
        residual_rms=rms,
        points_used=int(strains.size),
        method="offset-yield" if offset else "linear-extrapolation",
        plastic_threshold=threshold,
        offset=offset,
    )


def _power_law_objective(strains: np.ndarray, stresses: np.ndarray, exponent: float) -> Tuple[float, float]:
    """Sum of squared residuals with the optimal coefficient K at this exponent."""
    basis = np.power(strains, exponent)
    coefficient = float(np.dot(stresses, basis) / np.dot(basis, basis))
    residuals = stresses - coefficient * basis
    return float(np.dot(residuals, residuals)), coefficient


def fit_hardening(
    points: Sequence[StressStrainPoint],
    elastic_modulus: float,
    plastic_threshold: Optional[float] = None,
    yield_guess: Optional[float] = None,
) -> FitResult:
    """Fit ``(sigma_y, n)`` of an elastic-power-law model to the plastic points.

    A fixed exponent grid 0.05..0.5 is scanned (ties go to the smallest
    exponent), then the best cell is refined by bounded golden-section/Brent
    search; K follows in closed form at each exponent.

    Raises:
        NonIdentifiableError: All points sit at one strain.
        InsufficientDataError: Fewer than three plastic points.
        FitError: Refinement did not converge.
    """
    all_strains = np.asarray([p.strain for p in points], dtype=float)
    if all_strains.size and np.ptp(all_strains) <= TIE_TOLERANCE * np.max(np.abs(all_strains)):
        raise NonIdentifiableError("All points share one strain; hardening is not identifiable")
    strains, stresses, threshold = _plastic_subset(
        points, elastic_modulus, plastic_threshold, yield_guess, minimum=3
    )
    if np.any(strains <= 0.0) or np.ptp(strains) <= TIE_TOLERANCE * np.max(strains):
        raise NonIdentifiableError("Plastic points must span distinct positive strains")

    def objective(exponent: float) -> float:
        return _power_law_objective(strains, stresses, exponent)[0]

    grid_values = np.array([objective(n) for n in EXPONENT_GRID])
    best_value = grid_values.min()
    best_index = int(np.flatnonzero(grid_values <= best_value * (1.0 + TIE_TOLERANCE))[0])
    grid_best = EXPONENT_GRID[best_index]
    step = EXPONENT_GRID[1] - EXPONENT_GRID[0]
    bounds = (max(EXPONENT_BOUNDS[0], grid_best - step), min(EXPONENT_BOUNDS[1], grid_best + step))

    refined = minimize_scalar(
        objective, bounds=bounds, method="bounded", options={"xatol": 1e-12, "maxiter": 500}
    )
    if not refined.success:
        raise FitError(
            f"Exponent refinement did not converge: {refined.message}",
            best_iterate={"n": grid_best, "objective": float(best_value)},
        )
    exponent = float(refined.x) if refined.fun <= best_value else grid_best
    sse, coefficient = _power_law_objective(strains, stresses, exponent)
    yield_strength = (coefficient / elastic_modulus**exponent) ** (1.0 / (1.0 - exponent))
    model = MaterialModel(
        youngs_modulus=elastic_modulus,
        law=HardeningLaw.POWER_LAW,
        yield_strength=yield_strength,
        hardening_exponent=exponent,
        label="power-law fit",
    )
    line, _ = _fit_line(strains, stresses)
    plateau_like = exponent <= EXPONENT_GRID[0]
    logger.info(
        f"Hardening fit on {strains.size} points: sigma_y={yield_strength:.6e} Pa, "
        f"n={exponent:.5f}{' (plateau-like)' if plateau_like else ''}"
    )
    return FitResult(
        yield_strength=yield_strength,
        elastic_modulus_used=elastic_modulus,
        plastic_line=line,
        residual_rms=float(np.sqrt(sse / strains.size)),
        points_used=int(strains.size),
        model_fit=model,
        method="power-law",
        plastic_threshold=threshold,
        plateau_like=plateau_like,
    )
