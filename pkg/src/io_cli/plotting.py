"""Static SVG stress-strain plot of one or more fit reports."""

from pathlib import Path
from typing import Sequence, Tuple, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from loguru import logger  # noqa: E402

from .files import FitReport  # noqa: E402

AXIS_MARGIN = 0.10
MPA = 1e6

# Fixed salt and no timestamp keep the SVG byte-identical between runs.
plt.rcParams["svg.hashsalt"] = "microtensile"


def padded_limits(values: np.ndarray, margin: float = AXIS_MARGIN) -> Tuple[float, float]:
    """Data extent widened by ``margin`` of the span on each side."""
    low, high = float(np.min(values)), float(np.max(values))
    span = high - low
    if span == 0.0:
        span = abs(high) or 1.0
    return low - margin * span, high + margin * span


def plot_stress_strain(reports: Sequence[FitReport], path: Union[str, Path]) -> Path:
    """Scatter reduced points per report with the fitted plastic and elastic lines."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fig, ax = plt.subplots(figsize=(8, 5))
    all_strains, all_stresses = [], []
    for index, report in enumerate(sorted(reports, key=lambda r: r.thickness)):
        color = f"C{index}"
        name = report.label or f"{report.thickness * 1e9:.0f} nm"
        strains = np.array([p.strain for p in report.points])
        stresses = np.array([p.stress for p in report.points]) / MPA
        if strains.size:
            ax.plot(strains, stresses, "o", color=color, label=f"{name} points")
            all_strains.append(strains)
            all_stresses.append(stresses)

        fit = report.fit
        yield_strain = fit.yield_strength / fit.elastic_modulus_used + fit.offset
        end = max(float(strains.max()) if strains.size else yield_strain, yield_strain)
        ax.plot(
            [fit.offset, yield_strain],
            [0.0, fit.yield_strength / MPA],
            "--",
            color=color,
            linewidth=1,
        )
        line_strains = np.array([yield_strain, end])
        ax.plot(
            line_strains,
            (fit.plastic_line.slope * line_strains + fit.plastic_line.intercept) / MPA,
            "-",
            color=color,
            label=f"{name} fit, yield {fit.yield_strength / MPA:.0f} MPa",
        )
        all_strains.append(np.array([fit.offset, yield_strain]))
        all_stresses.append(np.array([0.0, fit.yield_strength / MPA]))

    ax.set_xlim(*padded_limits(np.concatenate(all_strains)))
    ax.set_ylim(*padded_limits(np.concatenate(all_stresses)))
    ax.set_xlabel("True strain")
    ax.set_ylabel("Stress (MPa)")
    ax.set_title("Stress-strain")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="lower right")

    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info(f"Wrote plot {path}")
    return path
