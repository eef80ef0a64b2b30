"""
Synthetic SEM readout of a released machine.

Displacements are signed and positive in contraction: the specimen shows its
free thermal contraction minus the stretch imposed by the actuator, the
actuator shows its own contraction.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from utils.errors import DomainError

from .equilibrium import EquilibriumState
from .geometry import Machine


@dataclass(frozen=True)
class MeasurementRecord:
    """Displacements read on one machine, in metres."""

    machine_id: str
    dl_al: float
    dl_ac: float
    noise_seed: Optional[int] = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.dl_al) and math.isfinite(self.dl_ac)):
            raise DomainError(
                f"Record {self.machine_id}: displacements must be finite, "
                f"got dl_al={self.dl_al}, dl_ac={self.dl_ac}"
            )


def synthesize_measurement(
    machine: Machine,
    state: EquilibriumState,
    noise_sd: float = 0.0,
    seed: Optional[int] = None,
) -> MeasurementRecord:
    """Turn a solved state into a (possibly noisy) displacement record.

    Args:
        machine: Machine the state belongs to.
        state: Output of :func:`solve_equilibrium`.
        noise_sd: Standard deviation of the Gaussian readout error, in m.
        seed: Seed of the noise generator; identical seeds give identical records.

    Raises:
        DomainError: If ``noise_sd`` is negative.
    """
    if not noise_sd >= 0.0:
        raise DomainError(f"noise_sd must be non-negative, got {noise_sd}")

    u = state.junction_displacement
    dl_al = machine.specimen.free_contraction - u
    dl_ac = u
    if noise_sd > 0.0:
        noise = np.random.default_rng(seed).normal(0.0, noise_sd, size=2)
        dl_al += float(noise[0])
        dl_ac += float(noise[1])
    return MeasurementRecord(machine.id, dl_al, dl_ac, noise_seed=seed)


def machine_seeds(seed: int, count: int) -> List[int]:
    """Independent per-machine seeds derived deterministically from one campaign seed."""
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(count)]
