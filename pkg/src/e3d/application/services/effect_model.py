"""Modelo de efecto agnostico de la accion y calculo del impulso.

El modelo ``p`` es una distribucion sobre estados finales mantenida por
media movil exponencial: solo registra el efecto observado, nunca la
accion que lo produjo. El impulso de efecto final compara ``p`` con la
distribucion objetivo ``p*`` mediante la razon logaritmica

    log p(s_n) - log p*(s_n)

que es positiva cuando el estado se visita mas de lo que prescribe el
objetivo y negativa cuando se visita menos.
"""

from __future__ import annotations

import math

import numpy as np

from src.e3d.domain.exceptions import (
    InvalidConfigError,
    InvalidStateError,
    InvalidTemperatureError,
)
from src.e3d.domain.models.effect_distribution import N_STATES, EffectDistribution
from src.e3d.domain.models.experiment_config import TargetKind
from src.e3d.domain.models.grid_world import TwoRoomWorld

# Piso de probabilidad antes de tomar logaritmos.
PROBABILITY_FLOOR = 1e-12


def init_uniform() -> EffectDistribution:
    """Modelo de efecto inicial: uniforme sobre los 18 estados."""
    return EffectDistribution.uniform()


def ema_update(
    p: EffectDistribution, observed: int, eta: float
) -> EffectDistribution:
    """Actualiza el modelo con el ultimo efecto observado.

    Calcula ``(1 - eta) p + eta 1[s = observed]``, una combinacion convexa
    de dos simplex, por lo que el resultado sigue siendo un simplex y se
    envuelve sin revalidar.

    Args:
        p: Modelo actual.
        observed: Estado final leido en el ensayo.
        eta: Tasa de aprendizaje en [0, 1].

    Returns:
        Un modelo nuevo; ``p`` no se modifica.
    """
    if not 0 <= eta <= 1:
        raise InvalidConfigError("eta", eta, "debe estar en [0, 1]")
    if not 0 <= observed < N_STATES:
        raise InvalidStateError(int(observed), N_STATES)
    probs = (1.0 - eta) * p.probs
    probs[observed] += eta
    return EffectDistribution.from_simplex(probs)


def log_ratio(
    p: EffectDistribution, target: EffectDistribution, state: int
) -> float:
    """Razon logaritmica ``log p(state) - log p*(state)`` con piso 1e-12."""
    return math.log(max(p[state], PROBABILITY_FLOOR)) - math.log(
        max(target[state], PROBABILITY_FLOOR)
    )


def end_effect_drive(
    p: EffectDistribution,
    target: EffectDistribution,
    state: int,
    beta: float,
) -> float:
    """Recompensa intrinseca ``-(1/beta) (log p(s) - log p*(s))``.

    Raises:
        InvalidTemperatureError: Si ``beta`` no es positivo.
    """
    if not (math.isfinite(beta) and beta > 0):
        raise InvalidTemperatureError(beta)
    return -log_ratio(p, target, state) / beta


def make_target(
    kind: TargetKind, world: TwoRoomWorld, goal_mass: float = 0.5
) -> EffectDistribution:
    """Construye la distribucion objetivo ``p*``.

    Args:
        kind: ``UNIFORM`` para exploracion pura; ``GOAL`` para un impulso
            dirigido a la meta.
        world: Entorno (define la celda meta).
        goal_mass: Probabilidad asignada a la meta con ``GOAL``; el resto
            se reparte por igual entre los demas estados.
    """
    if kind is TargetKind.UNIFORM:
        return init_uniform()
    if not 0 < goal_mass < 1:
        raise InvalidConfigError("goal_mass", goal_mass, "debe estar en (0, 1)")
    probs = np.full(N_STATES, (1.0 - goal_mass) / (N_STATES - 1))
    probs[world.goal] = goal_mass
    return EffectDistribution(probs)
