"""Comparison of fitted yield strengths across film thicknesses."""

from dataclasses import dataclass
from typing import List, Mapping, Optional

import pandas as pd

from utils.errors import InsufficientDataError

from .fitting import FitResult

# Room-temperature yield strength of pure bulk aluminium, in Pa.
BULK_ALUMINIUM_YIELD = 70e6


@dataclass(frozen=True)
class ThicknessRow:
    thickness: float
    yield_strength: float
    ratio_to_thickest: float
    ratio_to_bulk: Optional[float] = None


@dataclass(frozen=True)
class ThicknessComparison:
    """Rows sorted by thickness, with the size-effect observation.

    ``monotone_decreasing`` is true when yield strength strictly drops as the
    film gets thicker; it is reported, never enforced.
    """

    rows: List[ThicknessRow]
    monotone_decreasing: bool
    strength_ratio: float

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            {
                "thickness_m": [r.thickness for r in self.rows],
                "yield_strength_pa": [r.yield_strength for r in self.rows],
                "ratio_to_thickest": [r.ratio_to_thickest for r in self.rows],
            }
        )
        if any(r.ratio_to_bulk is not None for r in self.rows):
            frame["ratio_to_bulk"] = [r.ratio_to_bulk for r in self.rows]
        return frame

    def render(self) -> str:
        """Human-readable table followed by the size-effect flag."""
        table = self.to_frame().to_string(
            index=False,
            formatters={
                "thickness_m": "{:.4g}".format,
                "yield_strength_pa": "{:.6g}".format,
                "ratio_to_thickest": "{:.3f}".format,
                "ratio_to_bulk": "{:.3f}".format,
            },
        )
        return (
            f"{table}\n"
            f"monotone_decreasing: {str(self.monotone_decreasing).lower()}\n"
            f"strength_ratio (thinnest/thickest): {self.strength_ratio:.3f}"
        )


def compare_thicknesses(
    fits: Mapping[float, FitResult],
    bulk_yield_strength: Optional[float] = None,
) -> ThicknessComparison:
    """Tabulate yield strength against film thickness.

    Args:
        fits: Film thickness in m mapped to its fit.
        bulk_yield_strength: Optional bulk reference for a strengthening ratio.

    Raises:
        InsufficientDataError: Fewer than two thicknesses.
    """
    if len(fits) < 2:
        raise InsufficientDataError(
            f"Thickness comparison needs at least 2 fits, got {len(fits)}"
        )
    ordered = sorted(fits.items())
    strengths = [fit.yield_strength for _, fit in ordered]
    thickest = strengths[-1]
    rows = [
        ThicknessRow(
            thickness=thickness,
            yield_strength=fit.yield_strength,
            ratio_to_thickest=fit.yield_strength / thickest,
            ratio_to_bulk=(
                fit.yield_strength / bulk_yield_strength if bulk_yield_strength else None
            ),
        )
        for thickness, fit in ordered
    ]
    monotone = all(later < earlier for earlier, later in zip(strengths, strengths[1:]))
    return ThicknessComparison(rows, monotone, strengths[0] / thickest)
