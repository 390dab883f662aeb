"""Oraculo exacto de la distribucion de estados finales.

Dada una politica factorizada (una distribucion por ranura), calcula la
probabilidad exacta de cada estado final propagando hacia adelante la
distribucion de ocupacion a traves de las 7 transiciones
deterministicas. Por independencia entre ranuras el resultado coincide
con la enumeracion exhaustiva de las 4^7 = 16384 secuencias, que
tambien se provee como verificacion.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.e3d.domain.exceptions import InvalidDistributionError, InvalidSequenceError
from src.e3d.domain.models.action import N_ACTIONS
from src.e3d.domain.models.action_sequence import SEQUENCE_LENGTH
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.grid_world import TwoRoomWorld

_SLOT_TOLERANCE = 1e-9


def _as_slot_matrix(slot_probs: Sequence[ArrayLike]) -> NDArray[np.float64]:
    """Valida las distribuciones por ranura y las apila en ``(7, 4)``."""
    if len(slot_probs) != SEQUENCE_LENGTH:
        raise InvalidSequenceError(len(slot_probs), SEQUENCE_LENGTH)
    matrix = np.array([np.asarray(s, dtype=np.float64) for s in slot_probs])
    if matrix.shape != (SEQUENCE_LENGTH, N_ACTIONS):
        raise InvalidDistributionError(
            f"Cada ranura debe tener {N_ACTIONS} probabilidades."
        )
    if np.any(matrix < 0) or np.any(
        np.abs(matrix.sum(axis=1) - 1.0) > _SLOT_TOLERANCE
    ):
        raise InvalidDistributionError(
            "Cada ranura debe ser un simplex sobre las 4 acciones."
        )
    return matrix


def exact_final_distribution(
    world: TwoRoomWorld, slot_probs: Sequence[ArrayLike]
) -> EffectDistribution:
    """Distribucion exacta de estados finales por propagacion hacia adelante.

    Args:
        world: Entorno.
        slot_probs: 7 vectores de 4 probabilidades (uno por ranura).

    Returns:
        Distribucion sobre los 18 estados finales.

    Raises:
        InvalidSequenceError: Si no se reciben exactamente 7 ranuras.
        InvalidDistributionError: Si alguna ranura no es un simplex.
    """
    matrix = _as_slot_matrix(slot_probs)
    table = world.transition_table()
    occupancy = np.zeros(world.n_states)
    occupancy[world.start] = 1.0
    for slot_dist in matrix:
        nxt = np.zeros(world.n_states)
        for action_index in range(N_ACTIONS):
            np.add.at(nxt, table[:, action_index], occupancy * slot_dist[action_index])
        occupancy = nxt
    return EffectDistribution(occupancy)


def enumerate_final_distribution(
    world: TwoRoomWorld, slot_probs: Sequence[ArrayLike]
) -> EffectDistribution:
    """Misma distribucion calculada por enumeracion literal de las 4^7 secuencias."""
    matrix = _as_slot_matrix(slot_probs)
    moves = np.array(list(product(range(N_ACTIONS), repeat=SEQUENCE_LENGTH)))
    weights = matrix[np.arange(SEQUENCE_LENGTH), moves].prod(axis=1)
    finals = world.rollout_batch(moves)
    return EffectDistribution(
        np.bincount(finals, weights=weights, minlength=world.n_states)
    )


def uniform_final_distribution(world: TwoRoomWorld) -> EffectDistribution:
    """Distribucion de estados finales bajo la politica uniforme."""
    uniform = np.full(N_ACTIONS, 1.0 / N_ACTIONS)
    return exact_final_distribution(world, [uniform] * SEQUENCE_LENGTH)
