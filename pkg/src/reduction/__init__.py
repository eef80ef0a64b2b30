"""Reduction of measured displacements to stress-strain points."""

from .calibration import (
    Calibration,
    calibrate_alpha_dt,
    calibrate_from_free_beams,
    mismatch_from_temperatures,
)
from .pipeline import (
    CampaignReduction,
    ReductionFailure,
    StressStrainPoint,
    actuator_elastic_strain,
    actuator_stress,
    index_machines,
    reduce_campaign,
    reduce_record,
    specimen_strain,
    specimen_stress,
)

__all__ = [
    "Calibration",
    "CampaignReduction",
    "ReductionFailure",
    "StressStrainPoint",
    "actuator_elastic_strain",
    "actuator_stress",
    "calibrate_alpha_dt",
    "calibrate_from_free_beams",
    "index_machines",
    "mismatch_from_temperatures",
    "reduce_campaign",
    "reduce_record",
    "specimen_strain",
    "specimen_stress",
]
