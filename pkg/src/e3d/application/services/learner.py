"""Reglas de actualizacion y bucle de ensayos.

Implementa:
    - El error TD variacional ``lambda (Q - R) + (1/beta) (log p - log p*)``.
    - La actualizacion E3D de la tabla de valores, aplicada a la entrada
      ``(a_i, i)`` de cada ranura de la secuencia ejecutada.
    - La actualizacion de la linea base epsilon-greedy.
    - El ensayo individual y la sesion completa.

Orden dentro de un ensayo E3D: se muestrea la secuencia, se lee el
estado final y la recompensa, se actualiza primero el modelo de efecto
y despues la politica.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from src.e3d.application.services.effect_model import (
    ema_update,
    end_effect_drive,
    init_uniform,
    log_ratio,
    make_target,
)
from src.e3d.application.services.policy import egreedy_sample, sample_sequence
from src.e3d.domain.exceptions import InvalidConfigError, InvalidTemperatureError
from src.e3d.domain.models.action_sequence import SEQUENCE_LENGTH, ActionSequence
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import (
    Algorithm,
    E3DParams,
    ExperimentConfig,
)
from src.e3d.domain.models.experiment_result import SessionResult
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.domain.models.q_table import QTable
from src.e3d.domain.models.trial_record import TrialRecord

_SLOTS = np.arange(SEQUENCE_LENGTH)


def session_rng(seed: int, session_index: int) -> np.random.Generator:
    """Flujo aleatorio de la sesion, derivado solo de ``(seed, session_index)``.

    Usa el generador basado en contador Philox con una ``SeedSequence``
    cuya clave de derivacion es el indice de sesion.
    """
    seq = np.random.SeedSequence(seed, spawn_key=(session_index,))
    return np.random.Generator(np.random.Philox(seq))


def variational_td(
    q_value: float,
    sum_reward: float,
    p: EffectDistribution,
    target: EffectDistribution,
    state: int,
    lam: float,
    beta: float,
) -> float:
    """Error TD variacional tras leer el efecto ``state``.

    Returns:
        ``lam * (q_value - sum_reward) + (1/beta) * log_ratio(p, target, state)``.

    Raises:
        InvalidTemperatureError: Si ``beta`` no es positivo.
    """
    if not (math.isfinite(beta) and beta > 0):
        raise InvalidTemperatureError(beta)
    return lam * (q_value - sum_reward) + log_ratio(p, target, state) / beta


def e3d_update(
    q: QTable,
    seq: ActionSequence,
    final_state: int,
    r: float,
    p: EffectDistribution,
    target: EffectDistribution,
    params: E3DParams,
) -> QTable:
    """Actualizacion E3D de las 7 entradas visitadas.

    Para cada ranura ``i``:

        Q(a_i, i) <- (1 - alpha lam) Q(a_i, i) + alpha lam r
                     - (alpha / beta) (log p(s_n) - log p*(s_n))

    ``p`` debe estar ya actualizado con ``final_state``.
    """
    if not (math.isfinite(params.beta) and params.beta > 0):
        raise InvalidTemperatureError(params.beta)
    alpha_lam = params.alpha * params.lam
    drive_step = params.alpha / params.beta * log_ratio(p, target, final_state)
    values = q.values.copy()
    rows = list(seq.indices())
    values[rows, _SLOTS] = (
        (1.0 - alpha_lam) * values[rows, _SLOTS] + alpha_lam * r - drive_step
    )
    return QTable(values)


def egreedy_update(
    q: QTable, seq: ActionSequence, r: float, alpha: float
) -> QTable:
    """Actualizacion de la linea base: ``Q <- Q + alpha (r - Q)`` en cada ranura.

    Raises:
        InvalidConfigError: Si ``alpha`` no esta en (0, 1].
    """
    if not 0 < alpha <= 1:
        raise InvalidConfigError("alpha", alpha, "debe estar en (0, 1]")
    values = q.values.copy()
    rows = list(seq.indices())
    values[rows, _SLOTS] += alpha * (r - values[rows, _SLOTS])
    return QTable(values)


def run_trial(
    world: TwoRoomWorld,
    q: QTable,
    p: EffectDistribution,
    target: EffectDistribution,
    params: E3DParams,
    algo: Algorithm,
    epsilon: float,
    rng: np.random.Generator,
    *,
    rewarded: bool = True,
    session: int = 0,
    trial: int = 1,
) -> tuple[QTable, EffectDistribution, TrialRecord]:
    """Ejecuta un ensayo completo y aplica la regla del algoritmo.

    Args:
        world: Entorno.
        q: Tabla de valores actual.
        p: Modelo de efecto actual.
        target: Distribucion objetivo.
        params: Parametros de aprendizaje.
        algo: ``E3D``, ``UNIFORM`` o ``EGREEDY``.
        epsilon: Exploracion de epsilon-greedy.
        rng: Flujo aleatorio de la sesion.
        rewarded: ``False`` en la tarea de exploracion (el entorno no
            entrega recompensa).
        session: Indice de sesion para el registro.
        trial: Indice de ensayo para el registro.

    Returns:
        ``(q', p', registro)``.
    """
    if algo is Algorithm.E3D:
        seq = sample_sequence(q, params.beta, rng)
    elif algo is Algorithm.EGREEDY:
        seq = egreedy_sample(q, epsilon, rng)
    else:
        seq = sample_sequence(q, 0.0, rng)

    final_state = world.rollout(seq)
    r = world.reward(final_state) if rewarded else 0

    if algo is Algorithm.E3D:
        p_next = ema_update(p, final_state, params.eta)
        q_next = e3d_update(q, seq, final_state, r, p_next, target, params)
    elif algo is Algorithm.EGREEDY:
        p_next = p
        q_next = egreedy_update(q, seq, r, params.alpha)
    else:
        # El modelo se sigue solo para reportar el impulso.
        p_next = ema_update(p, final_state, params.eta)
        q_next = q

    record = TrialRecord(
        session=session,
        trial=trial,
        sequence=seq,
        final_state=final_state,
        extrinsic_reward=r,
        intrinsic_drive=end_effect_drive(p_next, target, final_state, params.beta),
    )
    return q_next, p_next, record


def train_session(
    config: ExperimentConfig,
    session_index: int,
    world: Optional[TwoRoomWorld] = None,
) -> SessionResult:
    """Ejecuta una sesion desde cero y conserva el estado final del agente.

    Args:
        config: Configuracion del experimento.
        session_index: Indice de sesion (define el flujo aleatorio).
        world: Entorno; por defecto el de dos habitaciones de 3x6.

    Returns:
        Registros de la sesion junto con la tabla y el modelo finales.
    """
    world = world or TwoRoomWorld()
    rng = session_rng(config.seed, session_index)
    params = config.params()
    target = make_target(config.target, world, config.goal_mass)
    q = QTable.zeros()
    p = init_uniform()
    records: list[TrialRecord] = []
    for trial in range(1, config.trials + 1):
        q, p, record = run_trial(
            world, q, p, target, params, config.algo, config.epsilon, rng,
            rewarded=config.rewarded, session=session_index, trial=trial,
        )
        records.append(record)
    return SessionResult(session=session_index, records=records, q=q, effect_model=p)


def run_session(
    config: ExperimentConfig,
    session_index: int,
    world: Optional[TwoRoomWorld] = None,
) -> list[TrialRecord]:
    """Registros de una sesion, en orden de ensayo."""
    return train_session(config, session_index, world).records
