"""Metricas sobre distribuciones discretas y series de ensayos.

Todas las funciones son puras y aceptan tanto ``EffectDistribution``
como vectores de probabilidad (por ejemplo, conteos normalizados).
"""

from __future__ import annotations

from typing import Iterable, Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import rel_entr
from scipy.stats import entropy as _entropy

from src.e3d.application.services.effect_model import PROBABILITY_FLOOR
from src.e3d.domain.models.effect_distribution import N_STATES, EffectDistribution
from src.e3d.domain.models.trial_record import TrialRecord

Distribution = Union[EffectDistribution, ArrayLike]


def _as_array(p: Distribution) -> NDArray[np.float64]:
    if isinstance(p, EffectDistribution):
        return p.probs
    return np.asarray(p, dtype=np.float64)


def entropy(p: Distribution) -> float:
    """Entropia de Shannon en nats, con ``0 ln 0 = 0``."""
    return float(_entropy(_as_array(p)))


def kl_divergence(p: Distribution, q: Distribution) -> float:
    """Divergencia ``KL(p || q)`` en nats; ``q`` se acota inferiormente en 1e-12."""
    q_floor = np.maximum(_as_array(q), PROBABILITY_FLOOR)
    return float(max(rel_entr(_as_array(p), q_floor).sum(), 0.0))


def total_variation(p: Distribution, q: Distribution) -> float:
    """Distancia de variacion total: la mitad de la norma L1 de la diferencia."""
    return float(0.5 * np.abs(_as_array(p) - _as_array(q)).sum())


def cumulative_rewards(records: Iterable[TrialRecord]) -> list[int]:
    """Suma acumulada de recompensas extrinsecas, en orden de ensayo."""
    rewards = [r.extrinsic_reward for r in records]
    return [int(v) for v in np.cumsum(rewards, dtype=np.int64)]


def visit_counts(records: Iterable[TrialRecord], n_states: int = N_STATES) -> list[int]:
    """Conteo de visitas por estado final."""
    finals = [r.final_state for r in records]
    return [int(c) for c in np.bincount(np.asarray(finals, dtype=np.int64), minlength=n_states)]


def first_success_trial(records: Iterable[TrialRecord]) -> Optional[int]:
    """Indice (desde 1) del primer ensayo recompensado, o ``None``."""
    return next((r.trial for r in records if r.extrinsic_reward > 0), None)


def rolling_entropy(records: list[TrialRecord], window: int) -> list[float]:
    """Entropia empirica por ventanas consecutivas no solapadas.

    La ultima ventana parcial se conserva si no esta vacia.
    """
    if window < 1:
        raise ValueError("La ventana debe ser un entero >= 1.")
    series: list[float] = []
    for start in range(0, len(records), window):
        counts = np.asarray(visit_counts(records[start:start + window]), dtype=np.float64)
        series.append(entropy(counts / counts.sum()))
    return series


def entropy_columns(matrix: ArrayLike) -> float:
    """Suma de las entropias de cada columna de una matriz de probabilidades."""
    return float(_entropy(np.asarray(matrix, dtype=np.float64), axis=0).sum())
