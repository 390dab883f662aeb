"""Politica softmax factorizada y regla de seleccion epsilon-greedy.

La politica sobre secuencias completas se factoriza por ranuras:

    pi(a_1, ..., a_7) = pi_1(a_1) x ... x pi_7(a_7)

con ``pi_i(a) ~ exp(beta * Q(a, i))``. Todas las funciones son puras y
reciben explicitamente el generador aleatorio; quien llama es dueno del
flujo de numeros.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray
from scipy.special import log_softmax, softmax
from scipy.stats import entropy as _entropy

from src.e3d.domain.exceptions import (
    InvalidConfigError,
    InvalidTemperatureError,
    NonFiniteValueError,
)
from src.e3d.domain.models.action import N_ACTIONS
from src.e3d.domain.models.action_sequence import SEQUENCE_LENGTH, ActionSequence
from src.e3d.domain.models.q_table import QTable

# Vector de 4 probabilidades de una ranura.
SlotDistribution = NDArray[np.float64]

_SLOTS = np.arange(SEQUENCE_LENGTH)


def _scaled_values(values: NDArray[np.float64], beta: float) -> NDArray[np.float64]:
    if not (math.isfinite(beta) and beta >= 0):
        raise InvalidTemperatureError(beta)
    scaled = beta * values
    if not np.all(np.isfinite(scaled)):
        raise NonFiniteValueError(
            f"beta * Q produce valores no finitos (beta={beta})."
        )
    return scaled


def policy_matrix(q: QTable, beta: float) -> NDArray[np.float64]:
    """Probabilidades de todas las ranuras como matriz ``(4, 7)``.

    La columna ``i`` es ``slot_probs(q, i, beta)``. ``softmax`` resta el
    maximo de cada columna antes de exponenciar.
    """
    probs = softmax(_scaled_values(q.values, beta), axis=0)
    return probs / probs.sum(axis=0, keepdims=True)


def slot_probs(q: QTable, slot: int, beta: float) -> SlotDistribution:
    """Distribucion softmax de la ranura ``slot``.

    Args:
        q: Tabla de valores.
        slot: Ranura (0..6).
        beta: Temperatura inversa (>= 0).

    Returns:
        Vector de 4 probabilidades proporcional a ``exp(beta * Q[:, slot])``.

    Raises:
        InvalidTemperatureError: Si ``beta`` es negativo o no finito.
        NonFiniteValueError: Si ``beta * Q`` desborda.
        IndexError: Si ``slot`` esta fuera de rango.
    """
    probs = softmax(_scaled_values(q.column(slot), beta))
    return probs / probs.sum()


def sample_sequence(
    q: QTable, beta: float, rng: np.random.Generator
) -> ActionSequence:
    """Muestrea una secuencia completa de la politica softmax.

    Consume exactamente ``SEQUENCE_LENGTH`` numeros uniformes del flujo
    (uno por ranura) y los invierte contra la CDF sin normalizar de cada
    ranura, escalando cada numero por el total de su columna.
    """
    scaled = _scaled_values(q.values, beta)
    cdf = np.cumsum(np.exp(scaled - scaled.max(axis=0)), axis=0)
    draws = rng.random(SEQUENCE_LENGTH) * cdf[-1]
    indices = np.minimum((cdf <= draws).sum(axis=0), N_ACTIONS - 1)
    return ActionSequence.from_indices(indices)


def seq_log_prob(q: QTable, beta: float, seq: ActionSequence) -> float:
    """Log-probabilidad de una secuencia bajo la politica factorizada."""
    log_probs = log_softmax(_scaled_values(q.values, beta), axis=0)
    return float(log_probs[list(seq.indices()), _SLOTS].sum())


def egreedy_sample(
    q: QTable, epsilon: float, rng: np.random.Generator
) -> ActionSequence:
    """Seleccion epsilon-greedy independiente por ranura.

    Con probabilidad ``epsilon`` la ranura elige una accion uniforme; en
    caso contrario toma el argmax de su columna, desempatando de forma
    uniforme entre los maximos.

    Raises:
        InvalidConfigError: Si ``epsilon`` no esta en [0, 1].
    """
    if not 0 <= epsilon <= 1:
        raise InvalidConfigError("epsilon", epsilon, "debe estar en [0, 1]")
    explore = rng.random(SEQUENCE_LENGTH) < epsilon
    random_actions = rng.integers(0, N_ACTIONS, size=SEQUENCE_LENGTH)
    tie_noise = rng.random((N_ACTIONS, SEQUENCE_LENGTH))
    values = q.values
    is_max = values == values.max(axis=0, keepdims=True)
    greedy = np.argmax(np.where(is_max, tie_noise, -1.0), axis=0)
    return ActionSequence.from_indices(np.where(explore, random_actions, greedy))


def greedy_sequence(q: QTable) -> ActionSequence:
    """Moda de la politica: argmax por ranura (primer maximo en empate)."""
    return ActionSequence.from_indices(np.argmax(q.values, axis=0))


def policy_entropy(q: QTable, beta: float) -> float:
    """Entropia (nats) de la politica sobre secuencias completas.

    Por la factorizacion es la suma de las entropias de cada ranura.
    """
    return float(_entropy(policy_matrix(q, beta), axis=0).sum())


def egreedy_matrix(q: QTable, epsilon: float) -> NDArray[np.float64]:
    """Probabilidades ``(4, 7)`` inducidas por ``egreedy_sample``.

    Cada maximo de la columna recibe ``(1 - epsilon) / k`` (con ``k``
    maximos empatados) y todas las acciones reciben ``epsilon / 4``.
    """
    if not 0 <= epsilon <= 1:
        raise InvalidConfigError("epsilon", epsilon, "debe estar en [0, 1]")
    values = q.values
    is_max = (values == values.max(axis=0, keepdims=True)).astype(np.float64)
    greedy = is_max / is_max.sum(axis=0, keepdims=True)
    return (1.0 - epsilon) * greedy + epsilon / N_ACTIONS
