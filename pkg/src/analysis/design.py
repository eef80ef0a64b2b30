"""
Campaign design: choose beam lengths so each machine lands on a target strain.

The equilibrium specimen strain is monotone in the actuator length (and in
the specimen length, in the other direction), so each target is matched by
bisection over the allowed length interval.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Sequence, Tuple

from loguru import logger
from scipy.optimize import bisect

from machine_model import ActuatorSpec, Machine, SpecimenSpec, solve_equilibrium
from machine_model.equilibrium import DEFAULT_MAX_ITERATIONS
from reduction import StressStrainPoint
from utils.errors import DesignError, SolverError

DEFAULT_REL_TOL = 1e-4


class VariedBeam(str, Enum):
    """Beam whose deposited length is the design lever."""

    ACTUATOR = "actuator"
    SPECIMEN = "specimen"


@dataclass(frozen=True)
class InfeasibleTarget:
    """A target strain no length within the bounds can reach."""

    target_strain: float
    achievable_min: float
    achievable_max: float
    reason: str = "outside achievable range"

    @property
    def message(self) -> str:
        return (
            f"target strain {self.target_strain:.6g} {self.reason}; achievable range "
            f"[{self.achievable_min:.6g}, {self.achievable_max:.6g}], "
            f"max strain {self.achievable_max:.6g}"
        )


@dataclass
class CampaignDesign:
    """Designed machines with their forward-predicted points.

    ``machines``, ``predicted_points`` and ``target_strains`` are aligned;
    unreachable targets are listed in ``infeasible`` instead.
    """

    machines: List[Machine] = field(default_factory=list)
    predicted_points: List[StressStrainPoint] = field(default_factory=list)
    target_strains: List[float] = field(default_factory=list)
    infeasible: List[InfeasibleTarget] = field(default_factory=list)
    varied: VariedBeam = VariedBeam.ACTUATOR

    @property
    def feasible(self) -> bool:
        return not self.infeasible


def _validate_request(targets: Sequence[float], bounds: Tuple[float, float]) -> None:
    if len(targets) == 0:
        raise DesignError("no targets")
    if any(t < 0.0 for t in targets):
        raise DesignError("Target strains must be non-negative")
    if any(b < a for a, b in zip(targets, targets[1:])):
        raise DesignError("Target strains must be sorted ascending")
    low, high = bounds
    if not 0.0 < low < high:
        raise DesignError(f"Length bounds must satisfy 0 < min < max, got {bounds}")


def design_campaign(
    actuator_template: ActuatorSpec,
    specimen_template: SpecimenSpec,
    target_strains: Sequence[float],
    length_bounds: Tuple[float, float],
    vary: VariedBeam = VariedBeam.ACTUATOR,
    rel_tol: float = DEFAULT_REL_TOL,
    id_prefix: str = "m",
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> CampaignDesign:
    """Design one machine per target strain.

    Args:
        actuator_template: Actuator geometry and mismatch; its length is
            replaced when the actuator is the varied beam.
        specimen_template: Specimen geometry, material and mismatch.
        target_strains: Ascending, non-negative logarithmic strains.
        length_bounds: ``(min, max)`` deposited length of the varied beam, in m.
        vary: Which beam length is the design lever.
        rel_tol: Relative tolerance on the predicted strain.
        id_prefix: Machine ids are ``<prefix><target index>``.

    Returns:
        The design; a zero target yields the minimum-strain machine.

    Raises:
        DesignError: On an empty, unsorted or negative target list or bad bounds.
    """
    vary = VariedBeam(vary)
    _validate_request(target_strains, length_bounds)
    width = max(2, len(str(len(target_strains) - 1)))

    def build(machine_id: str, length: float) -> Machine:
        if vary is VariedBeam.ACTUATOR:
            return Machine(machine_id, actuator_template.with_length(length), specimen_template)
        return Machine(machine_id, actuator_template, specimen_template.with_length(length))

    def strain_at(length: float) -> float:
        return solve_equilibrium(build("trial", length), max_iterations).specimen_log_strain

    low, high = length_bounds
    strain_low, strain_high = strain_at(low), strain_at(high)
    # Longer actuators pull harder; longer specimens stretch less.
    weakest = low if strain_low <= strain_high else high
    achievable = (min(strain_low, strain_high), max(strain_low, strain_high))
    logger.info(
        f"Designing {len(target_strains)} machines varying the {vary.value} length in "
        f"[{low:.4g}, {high:.4g}] m; achievable strain [{achievable[0]:.4g}, {achievable[1]:.4g}]"
    )

    design = CampaignDesign(varied=vary)
    for index, target in enumerate(target_strains):
        machine_id = f"{id_prefix}{index:0{width}d}"
        if target == 0.0:
            length = weakest
        elif not achievable[0] <= target <= achievable[1]:
            design.infeasible.append(InfeasibleTarget(target, *achievable))
            logger.warning(f"Infeasible design target: {design.infeasible[-1].message}")
            continue
        else:
            length = _match_length(strain_at, target, low, high, max_iterations)

        machine = build(machine_id, length)
        state = solve_equilibrium(machine, max_iterations)
        predicted = state.specimen_log_strain
        if target > 0.0 and abs(predicted - target) > rel_tol * target:
            design.infeasible.append(
                InfeasibleTarget(target, *achievable, reason=f"matched only to {predicted:.6g}")
            )
            logger.warning(f"Infeasible design target: {design.infeasible[-1].message}")
            continue

        design.machines.append(machine)
        design.predicted_points.append(
            StressStrainPoint(machine_id, predicted, state.specimen_stress)
        )
        design.target_strains.append(target)
        logger.debug(f"{machine_id}: {vary.value} length {length:.6e} m -> strain {predicted:.6e}")
    return design


def _match_length(
    strain_at: Callable[[float], float],
    target: float,
    low: float,
    high: float,
    max_iterations: int,
) -> float:
    try:
        return bisect(
            lambda length: strain_at(length) - target,
            low,
            high,
            xtol=high * 1e-15,
            rtol=1e-12,
            maxiter=max_iterations,
        )
    except RuntimeError as exc:
        raise SolverError(
            f"Length search for strain {target:.6g} failed: {exc}", (low, high)
        ) from exc
