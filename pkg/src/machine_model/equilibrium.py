"""
Post-release equilibrium of an actuator-specimen couple.

The junction displacement ``u`` (positive when the actuator contracts) is the
single unknown. The specimen first shrinks thermally by ``l_al * alpha_al``
and is then stretched by ``u``; the actuator is held ``u`` short of its free
contraction. Both strains are logarithmic, the same measures used when
measurements are reduced, so a noiseless round trip is exact.

The root is searched in whichever of ``u`` and the remaining contraction
``alpha_ac * l_ac - u`` is the smaller one, so neither strain is computed
from a difference of two nearly equal lengths.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from loguru import logger
from scipy.optimize import brentq

from constitutive import stress_at_strain
from utils.errors import DomainError, SolverError

from .geometry import ActuatorSpec, Machine, SpecimenSpec

DEFAULT_MAX_ITERATIONS = 200
FORCE_TOLERANCE = 1e-12
RELATIVE_FORCE_TOLERANCE = 1e-9
STEP_TOLERANCE = 1e-30


@dataclass(frozen=True)
class EquilibriumState:
    """Solved state of one machine; stresses in Pa, displacement in m."""

    machine_id: str
    junction_displacement: float
    specimen_log_strain: float
    specimen_stress: float
    actuator_elastic_strain: float
    actuator_stress: float
    force_residual: float
    iterations: int = 0


def specimen_strain_at(specimen: SpecimenSpec, u: float) -> float:
    """Logarithmic specimen strain ``ln((l0 + u) / l0)`` for a junction displacement."""
    return math.log1p(u / specimen.initial_length)


def actuator_strain_remaining(actuator: ActuatorSpec, remaining: float) -> float:
    """Residual elastic strain of an actuator still ``remaining`` short of free contraction."""
    length = actuator.beam.deposited_length
    return math.log1p(remaining / (length - length * actuator.alpha_dt))


def actuator_strain_at(actuator: ActuatorSpec, u: float) -> float:
    """Residual elastic strain of an actuator that contracted by ``u``."""
    return actuator_strain_remaining(actuator, actuator.free_contraction - u)


def _forces(machine: Machine, u: float, remaining: float) -> Tuple[float, float]:
    actuator, specimen = machine.actuator, machine.specimen
    actuator_force = (
        actuator.youngs_modulus
        * actuator_strain_remaining(actuator, remaining)
        * actuator.beam.cross_section
    )
    specimen_stress = stress_at_strain(specimen.material, specimen_strain_at(specimen, u))
    return actuator_force, specimen_stress * specimen.beam.cross_section


def force_residual(machine: Machine, u: float) -> float:
    """Axial force imbalance ``sigma_ac * S_ac - sigma_al * S_al`` in N."""
    actuator_force, specimen_force = _forces(
        machine, u, machine.actuator.free_contraction - u
    )
    return actuator_force - specimen_force


def solve_equilibrium(
    machine: Machine, max_iterations: int = DEFAULT_MAX_ITERATIONS
) -> EquilibriumState:
    """Find the junction displacement balancing actuator and specimen forces.

    The residual is strictly decreasing on ``[0, alpha_ac * l_ac]``: positive
    at 0 (blocked actuator, unloaded specimen) and non-positive at the free
    contraction. Brent's bracketed method handles the derivative jump of
    perfectly-plastic specimens. The imbalance at the root must be within
    both ``1e-12 * E * alpha * S_ac`` and ``1e-9`` of the actuator force.

    Raises:
        DomainError: If the actuator has no mismatch to drive it.
        SolverError: If the root is not found within ``max_iterations``.
    """
    actuator = machine.actuator
    if not actuator.alpha_dt > 0.0:
        raise DomainError(f"Machine {machine.id}: actuator alpha_dt must be positive")

    upper = actuator.free_contraction
    bracket = (0.0, upper)
    half = 0.5 * upper

    # (u, remaining) pair for the unknown x on [0, width]
    if force_residual(machine, half) > 0.0:
        width = upper - half

        def split(x: float) -> Tuple[float, float]:
            return upper - x, x

    else:
        width = half

        def split(x: float) -> Tuple[float, float]:
            return x, upper - x

    def residual(x: float) -> float:
        actuator_force, specimen_force = _forces(machine, *split(x))
        return actuator_force - specimen_force

    try:
        x, info = brentq(
            residual,
            0.0,
            width,
            xtol=width * STEP_TOLERANCE,
            maxiter=max_iterations,
            full_output=True,
            disp=False,
        )
    except ValueError as exc:
        raise SolverError(f"Machine {machine.id}: invalid bracket: {exc}", bracket) from exc

    u, remaining = split(x)
    actuator_force, specimen_force = _forces(machine, u, remaining)
    imbalance = actuator_force - specimen_force
    tolerance = min(
        FORCE_TOLERANCE * actuator.youngs_modulus * actuator.alpha_dt * actuator.beam.cross_section,
        RELATIVE_FORCE_TOLERANCE * abs(actuator_force),
    )
    if not info.converged or abs(imbalance) > tolerance:
        raise SolverError(
            f"Machine {machine.id}: no equilibrium after {info.iterations} iterations "
            f"(|f|={abs(imbalance):.3e} N, tolerance {tolerance:.3e} N)",
            bracket,
            last_iterate=u,
        )

    eps_al = specimen_strain_at(machine.specimen, u)
    eps_ac = actuator_strain_remaining(actuator, remaining)
    state = EquilibriumState(
        machine_id=machine.id,
        junction_displacement=u,
        specimen_log_strain=eps_al,
        specimen_stress=stress_at_strain(machine.specimen.material, eps_al),
        actuator_elastic_strain=eps_ac,
        actuator_stress=actuator.youngs_modulus * eps_ac,
        force_residual=imbalance,
        iterations=info.iterations,
    )
    logger.debug(
        f"Machine {machine.id}: u={u:.6e} m eps_al={eps_al:.6e} "
        f"sigma_al={state.specimen_stress:.6e} Pa in {info.iterations} iterations"
    )
    return state


def solve_many(
    machines: Sequence[Machine],
    max_workers: int = 1,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> List[EquilibriumState]:
    """Solve every machine; results keep the input order for any worker count."""
    if max_workers <= 1 or len(machines) <= 1:
        return [solve_equilibrium(m, max_iterations) for m in machines]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda m: solve_equilibrium(m, max_iterations), machines))


def linear_displacement_estimate(machine: Machine) -> float:
    """Two-spring small-strain prediction of the junction displacement.

    Treats both beams as linear springs ``k = E * S / l`` in series; only the
    specimen's elastic modulus is used, so the estimate is meaningful below
    yield.
    """
    actuator, specimen = machine.actuator, machine.specimen
    actuator_stiffness = (
        actuator.youngs_modulus * actuator.beam.cross_section / actuator.beam.deposited_length
    )
    specimen_stiffness = (
        specimen.material.youngs_modulus * specimen.beam.cross_section / specimen.initial_length
    )
    return actuator.free_contraction / (1.0 + specimen_stiffness / actuator_stiffness)
