"""Servicio de aplicacion que orquesta los experimentos.

Ejecuta las sesiones (en paralelo si se pide), calcula las metricas de
resumen y delega la escritura en el puerto ``ExperimentResultWriter``.
Cada sesion depende solo de ``(seed, indice)``, por lo que el orden de
ejecucion no altera los resultados y agregar sesiones no modifica las
anteriores.
"""

from __future__ import annotations

import logging
from pathlib import Path
from statistics import median
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from src.e3d.application.services import metrics
from src.e3d.application.services.final_state_oracle import (
    uniform_final_distribution,
)
from src.e3d.application.services.learner import train_session
from src.e3d.application.services.policy import (
    egreedy_matrix,
    greedy_sequence,
    policy_entropy,
)
from src.e3d.domain.exceptions import InvalidConfigError
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import Algorithm, ExperimentConfig
from src.e3d.domain.models.experiment_result import (
    ExperimentResult,
    SessionResult,
    SessionSummary,
    SummaryStats,
)
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.domain.ports.experiment_result_writer import ExperimentResultWriter

logger = logging.getLogger(__name__)


class ExperimentService:
    """Fachada unica para ejecutar y resumir experimentos.

    Args:
        writer: Adaptador de salida; si es ``None`` el servicio solo
            calcula resultados en memoria (uso desde la API).
        world: Entorno; por defecto el de dos habitaciones.
    """

    def __init__(
        self,
        writer: Optional[ExperimentResultWriter] = None,
        world: Optional[TwoRoomWorld] = None,
    ) -> None:
        self._writer = writer
        self._world = world or TwoRoomWorld()

    @property
    def world(self) -> TwoRoomWorld:
        return self._world

    def oracle(self) -> EffectDistribution:
        """Distribucion exacta de estados finales bajo la politica uniforme."""
        return uniform_final_distribution(self._world)

    def run(self, config: ExperimentConfig) -> ExperimentResult:
        """Ejecuta todas las sesiones y las retorna en orden de indice."""
        logger.info(
            "Experimento %s/%s: %d sesion(es) x %d ensayos (seed=%d)",
            config.task.value, config.algo.value,
            config.sessions, config.trials, config.seed,
        )
        sessions: list[SessionResult] = Parallel(
            n_jobs=config.n_jobs, prefer="threads"
        )(
            delayed(train_session)(config, k, self._world)
            for k in range(config.sessions)
        )
        for s in sessions:
            logger.info(
                "Sesion %d: recompensa total=%d, primer exito=%s",
                s.session,
                sum(r.extrinsic_reward for r in s.records),
                metrics.first_success_trial(s.records),
            )
        return ExperimentResult(config=config, sessions=list(sessions))

    def summarize(self, result: ExperimentResult) -> SummaryStats:
        """Calcula las metricas por sesion y agregadas."""
        config = result.config
        uniform = EffectDistribution.uniform()
        oracle = self.oracle() if config.algo is Algorithm.UNIFORM else None

        summaries = [
            self._summarize_session(s, config, uniform, oracle)
            for s in result.sessions
        ]

        pooled = np.sum([s.counts for s in summaries], axis=0)
        pooled_dist = EffectDistribution.from_counts(pooled)
        finals = [s.cumulative_reward_final for s in summaries]
        censored = [
            s.first_success_trial if s.first_success_trial is not None
            else config.trials + 1
            for s in summaries
        ]
        median_first = float(median(censored))

        return SummaryStats(
            config=config.as_dict(),
            sessions=summaries,
            counts=[int(c) for c in pooled],
            entropy=metrics.entropy(pooled_dist),
            kl_to_uniform=metrics.kl_divergence(pooled_dist, uniform),
            tv_to_oracle=(
                metrics.total_variation(pooled_dist, oracle)
                if oracle is not None else None
            ),
            mean_cumulative_reward=float(np.mean(finals)),
            median_cumulative_reward=float(median(finals)),
            median_first_success_trial=(
                median_first if median_first <= config.trials else None
            ),
        )

    def _summarize_session(
        self,
        session: SessionResult,
        config: ExperimentConfig,
        uniform: EffectDistribution,
        oracle: Optional[EffectDistribution],
    ) -> SessionSummary:
        counts = metrics.visit_counts(session.records)
        dist = EffectDistribution.from_counts(np.asarray(counts))
        cumulative = metrics.cumulative_rewards(session.records)
        greedy = greedy_sequence(session.q)
        return SessionSummary(
            session=session.session,
            counts=counts,
            entropy=metrics.entropy(dist),
            kl_to_uniform=metrics.kl_divergence(dist, uniform),
            tv_to_oracle=(
                metrics.total_variation(dist, oracle) if oracle is not None else None
            ),
            cumulative_reward_final=cumulative[-1] if cumulative else 0,
            first_success_trial=metrics.first_success_trial(session.records),
            rolling_entropy=metrics.rolling_entropy(session.records, config.window),
            policy_entropy=_final_policy_entropy(session, config),
            greedy_sequence=greedy.encode(),
            greedy_final_state=self._world.rollout(greedy),
        )

    def run_experiment(
        self, config: ExperimentConfig
    ) -> tuple[ExperimentResult, SummaryStats, list[Path]]:
        """Ejecuta, resume y (si hay escritor) persiste un experimento.

        Returns:
            ``(resultado, resumen, archivos escritos)``.

        Raises:
            InvalidConfigError: Si hay escritor pero la configuracion no
                indica ``out_dir``.
        """
        if self._writer is not None and config.out_dir is None:
            raise InvalidConfigError("out_dir", None, "se requiere una carpeta de salida")
        result = self.run(config)
        summary = self.summarize(result)
        paths: list[Path] = []
        if self._writer is not None and config.out_dir is not None:
            paths = self._writer.write(result, summary, Path(config.out_dir))
            logger.info("Archivos escritos en %s: %d", config.out_dir, len(paths))
        return result, summary, paths


def _final_policy_entropy(session: SessionResult, config: ExperimentConfig) -> float:
    """Entropia de la politica que el algoritmo usaria en el siguiente ensayo."""
    if config.algo is Algorithm.EGREEDY:
        return metrics.entropy_columns(egreedy_matrix(session.q, config.epsilon))
    if config.algo is Algorithm.UNIFORM:
        return policy_entropy(session.q, 0.0)
    return policy_entropy(session.q, config.beta)
