"""Resultados de sesiones y experimentos, y su resumen estadistico."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Optional

from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import ExperimentConfig
from src.e3d.domain.models.q_table import QTable
from src.e3d.domain.models.trial_record import TrialRecord


@dataclass(frozen=True, slots=True)
class SessionResult:
    """Resultado de una sesion de entrenamiento.

    Attributes:
        session: Indice de la sesion.
        records: Registros de los ensayos en orden.
        q: Tabla de valores al final de la sesion.
        effect_model: Modelo de efecto al final de la sesion.
    """

    session: int
    records: list[TrialRecord]
    q: QTable
    effect_model: EffectDistribution


@dataclass(frozen=True, slots=True)
class ExperimentResult:
    """Resultado de todas las sesiones de un experimento, ordenadas por indice."""

    config: ExperimentConfig
    sessions: list[SessionResult]

    @property
    def records(self) -> list[TrialRecord]:
        """Todos los registros, sesion por sesion."""
        return [r for s in self.sessions for r in s.records]


@dataclass(frozen=True, slots=True)
class SessionSummary:
    """Metricas de una sesion.

    Attributes:
        session: Indice de la sesion.
        counts: Visitas por estado final (18 enteros).
        entropy: Entropia empirica de los estados finales (nats).
        kl_to_uniform: Divergencia KL respecto de la uniforme (nats).
        tv_to_oracle: Variacion total respecto del oraculo uniforme
            (solo para el algoritmo uniforme).
        cumulative_reward_final: Recompensas acumuladas al final.
        first_success_trial: Primer ensayo recompensado (desde 1).
        rolling_entropy: Entropia por ventanas consecutivas de ensayos.
        policy_entropy: Entropia de la politica final (nats).
        greedy_sequence: Moda de la politica final.
        greedy_final_state: Estado al que lleva la moda.
    """

    session: int
    counts: list[int]
    entropy: float
    kl_to_uniform: float
    tv_to_oracle: Optional[float]
    cumulative_reward_final: int
    first_success_trial: Optional[int]
    rolling_entropy: list[float]
    policy_entropy: float
    greedy_sequence: str
    greedy_final_state: int


@dataclass(frozen=True, slots=True)
class SummaryStats:
    """Resumen por sesion y agregado de un experimento.

    Attributes:
        config: Eco de la configuracion.
        sessions: Resumenes individuales en orden de sesion.
        counts: Visitas agregadas (suman ``sessions * trials``).
        entropy: Entropia de la distribucion agregada.
        kl_to_uniform: KL agregada respecto de la uniforme.
        tv_to_oracle: Variacion total agregada (algoritmo uniforme).
        mean_cumulative_reward: Media de recompensas finales por sesion.
        median_cumulative_reward: Mediana de recompensas finales.
        median_first_success_trial: Mediana del primer exito; las
            sesiones sin exito cuentan como ``trials + 1`` y el valor se
            reporta ``None`` si la mediana cae en ese caso.
    """

    config: dict[str, object]
    sessions: list[SessionSummary]
    counts: list[int]
    entropy: float
    kl_to_uniform: float
    tv_to_oracle: Optional[float]
    mean_cumulative_reward: float
    median_cumulative_reward: float
    median_first_success_trial: Optional[float]

    def as_dict(self) -> dict[str, Any]:
        """Estructura serializable: ``config``, ``sessions`` y ``pooled``."""
        return {
            "config": dict(self.config),
            "sessions": [asdict(s) for s in self.sessions],
            "pooled": {
                "counts": list(self.counts),
                "entropy": self.entropy,
                "kl_to_uniform": self.kl_to_uniform,
                "tv_to_oracle": self.tv_to_oracle,
                "mean_cumulative_reward": self.mean_cumulative_reward,
                "median_cumulative_reward": self.median_cumulative_reward,
                "median_first_success_trial": self.median_first_success_trial,
            },
        }
