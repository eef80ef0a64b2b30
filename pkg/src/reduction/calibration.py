"""
Free-beam calibration of the thermal mismatch terms.

A released beam without a link to the actuator contracts by
``l_d * alpha * dT``; the ratio of that contraction to the deposited length
is the mismatch term used by the strain reduction.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from machine_model import check_mismatch
from utils.errors import CalibrationError


@dataclass(frozen=True)
class Calibration:
    """Mismatch terms of the specimen film and the actuator."""

    alpha_dt_al: float
    alpha_dt_ac: float
    source: str = ""

    def __post_init__(self) -> None:
        check_mismatch(self.alpha_dt_al, "alpha_dt_al", error=CalibrationError)
        check_mismatch(self.alpha_dt_ac, "alpha_dt_ac", error=CalibrationError)


def calibrate_alpha_dt(l_deposited: float, dl_free: float) -> float:
    """Mismatch term from one free beam: ``dl_free / l_deposited``.

    Raises:
        CalibrationError: If the length is not positive, the contraction is
            negative (free beams only contract on cooling) or not shorter
            than the beam.
    """
    if not l_deposited > 0.0:
        raise CalibrationError(f"Deposited length must be positive, got {l_deposited}")
    if dl_free < 0.0:
        raise CalibrationError(f"Free contraction must be non-negative, got {dl_free}")
    if not dl_free < l_deposited:
        raise CalibrationError(
            f"Free contraction {dl_free} must be shorter than the beam {l_deposited}"
        )
    return dl_free / l_deposited


def calibrate_from_free_beams(beams: Iterable[Tuple[float, float]]) -> float:
    """Mean of per-beam ratios over ``(l_deposited, dl_free)`` pairs."""
    ratios = [calibrate_alpha_dt(length, dl) for length, dl in beams]
    if not ratios:
        raise CalibrationError("At least one free beam is needed for calibration")
    alpha_dt = float(np.mean(ratios))
    check_mismatch(alpha_dt, "alpha_dt", error=CalibrationError)
    return alpha_dt


def mismatch_from_temperatures(
    cte_mismatch: float,
    deposition_temperature: float,
    room_temperature: float = 20.0,
) -> float:
    """Thermal strain ``alpha * dT`` accumulated while cooling from deposition.

    Args:
        cte_mismatch: Thermal expansion coefficient (or mismatch) in 1/K.
        deposition_temperature: Deposition temperature in degrees C
            (about 150 for evaporated Al, 800 for LPCVD nitride).
        room_temperature: Observation temperature in degrees C.
    """
    if deposition_temperature < room_temperature:
        raise CalibrationError(
            f"Deposition temperature {deposition_temperature} C is below room "
            f"temperature {room_temperature} C"
        )
    alpha_dt = cte_mismatch * (deposition_temperature - room_temperature)
    check_mismatch(alpha_dt, "alpha_dt", error=CalibrationError)
    return alpha_dt
