"""Campaign design and material-parameter extraction."""

from .design import CampaignDesign, InfeasibleTarget, VariedBeam, design_campaign
from .fitting import (
    FitResult,
    PlasticLine,
    default_plastic_threshold,
    fit_hardening,
    fit_yield,
)
from .thickness import (
    BULK_ALUMINIUM_YIELD,
    ThicknessComparison,
    ThicknessRow,
    compare_thicknesses,
)

__all__ = [
    "BULK_ALUMINIUM_YIELD",
    "CampaignDesign",
    "FitResult",
    "InfeasibleTarget",
    "PlasticLine",
    "ThicknessComparison",
    "ThicknessRow",
    "VariedBeam",
    "compare_thicknesses",
    "default_plastic_threshold",
    "design_campaign",
    "fit_hardening",
    "fit_yield",
]
