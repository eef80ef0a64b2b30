"""
Data reduction: displacements to stress-strain points.

Per machine: the specimen strain follows from its measured displacement
corrected by the free-beam contraction, the actuator strain the same way,
the actuator stress from Hooke's law, and the specimen stress from the
force balance through the area ratio.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence

from loguru import logger

from machine_model import ActuatorSpec, Machine, MeasurementRecord, SpecimenSpec
from utils.errors import DomainError, GeometryError, ReductionError, UnknownMachineError

from .calibration import Calibration

# Strains below this are treated as sign errors rather than measurements.
MIN_STRAIN = -0.05
MAX_ACTUATOR_STRAIN = 0.05


@dataclass(frozen=True)
class StressStrainPoint:
    """Reduced sample of the specimen's stress-strain response."""

    machine_id: str
    strain: float
    stress: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.strain) and math.isfinite(self.stress)):
            raise ReductionError(f"Point {self.machine_id}: non-finite strain or stress")
        if not self.strain > MIN_STRAIN:
            raise ReductionError(
                f"Point {self.machine_id}: strain {self.strain:.6g} below {MIN_STRAIN}; "
                "check displacement signs"
            )


@dataclass(frozen=True)
class ReductionFailure:
    """Structured diagnostic for a record that could not be reduced."""

    machine_id: str
    reason: str


@dataclass
class CampaignReduction:
    """Points sorted by strain, plus one failure entry per rejected record."""

    points: List[StressStrainPoint] = field(default_factory=list)
    failures: List[ReductionFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _log_ratio(length: float, displacement: float, alpha_dt: float, beam: str) -> float:
    """``ln((l - dl) / (l - l * alpha))`` evaluated as a log1p of the excess."""
    if not abs(displacement) < length:
        raise ReductionError(
            f"{beam} displacement {displacement:.6g} m is not smaller than "
            f"the deposited length {length:.6g} m"
        )
    current = length - displacement
    reference = length - length * alpha_dt
    if not (current > 0.0 and reference > 0.0):
        raise ReductionError(
            f"{beam}: non-positive length in strain ratio ({current:.6g} / {reference:.6g})"
        )
    return math.log1p((length * alpha_dt - displacement) / reference)


def specimen_strain(record: MeasurementRecord, spec: SpecimenSpec, cal: Calibration) -> float:
    """Logarithmic specimen strain ``ln((l_d - dl_al) / (l_d * (1 - alpha_al)))``."""
    return _log_ratio(spec.beam.deposited_length, record.dl_al, cal.alpha_dt_al, "Specimen")


def actuator_elastic_strain(
    record: MeasurementRecord, actuator: ActuatorSpec, cal: Calibration
) -> float:
    """Residual elastic strain of the actuator, positive while it stays in tension."""
    return _log_ratio(actuator.beam.deposited_length, record.dl_ac, cal.alpha_dt_ac, "Actuator")


def actuator_stress(eps_ac_el: float, youngs_modulus: float) -> float:
    """Hooke's law for the elastic actuator."""
    if not abs(eps_ac_el) < MAX_ACTUATOR_STRAIN:
        raise ReductionError(
            f"Actuator elastic strain {eps_ac_el:.6g} is outside |eps| < {MAX_ACTUATOR_STRAIN}"
        )
    return youngs_modulus * eps_ac_el


def specimen_stress(sigma_ac: float, s_ac: float, s_al: float) -> float:
    """Force balance: ``sigma_al = sigma_ac * S_ac / S_al``."""
    if not s_al > 0.0:
        raise DomainError(f"Specimen cross-section must be positive, got {s_al}")
    return sigma_ac * s_ac / s_al


def reduce_record(record: MeasurementRecord, machine: Machine, cal: Calibration) -> StressStrainPoint:
    """Apply the full reduction chain to one record."""
    strain = specimen_strain(record, machine.specimen, cal)
    eps_ac = actuator_elastic_strain(record, machine.actuator, cal)
    sigma_ac = actuator_stress(eps_ac, machine.actuator.youngs_modulus)
    stress = specimen_stress(
        sigma_ac, machine.actuator.beam.cross_section, machine.specimen.beam.cross_section
    )
    return StressStrainPoint(machine.id, strain, stress)


def index_machines(machines: Iterable[Machine]) -> Dict[str, Machine]:
    """Map machine ids to machines, rejecting duplicates."""
    index: Dict[str, Machine] = {}
    for machine in machines:
        if machine.id in index:
            raise GeometryError(f"Duplicate machine id {machine.id!r} in campaign")
        index[machine.id] = machine
    return index


def reduce_campaign(
    records: Sequence[MeasurementRecord],
    machines: Sequence[Machine],
    cal: Calibration,
) -> CampaignReduction:
    """Reduce every record of a campaign.

    Records that fail reduction become :class:`ReductionFailure` entries
    instead of aborting the campaign.

    Raises:
        UnknownMachineError: If any record references an undeclared machine.
    """
    index = index_machines(machines)
    unknown = sorted({r.machine_id for r in records if r.machine_id not in index})
    if unknown:
        raise UnknownMachineError(unknown)

    result = CampaignReduction()
    for record in records:
        try:
            result.points.append(reduce_record(record, index[record.machine_id], cal))
        except (ReductionError, DomainError) as exc:
            logger.warning(f"Record {record.machine_id} not reduced: {exc}")
            result.failures.append(ReductionFailure(record.machine_id, str(exc)))

    result.points.sort(key=lambda p: (p.strain, p.machine_id))
    logger.info(
        f"Reduced {len(result.points)} of {len(records)} records "
        f"({len(result.failures)} failures)"
    )
    return result
