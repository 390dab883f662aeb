"""Schemas Pydantic para validacion de entradas y serializacion de salidas.

Estos schemas actuan como adaptadores de entrada/salida: la CLI y la
API validan aqui los parametros recibidos y el resumen de un experimento
se serializa a JSON con ellos. Los dataclasses del dominio se mantienen
intactos; aqui solo se convierten datos JSON <-> objetos de dominio.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.e3d.domain.models.experiment_config import (
    MAX_SEED,
    Algorithm,
    TargetKind,
    Task,
)


# ================================================================== #
#  Solicitudes
# ================================================================== #


class ExperimentRequest(BaseModel):
    """Parametros de un experimento.

    Los campos opcionales en ``None`` toman el valor por defecto de la
    tarea (por ejemplo ``beta`` = 1 para explore y 100 para reward).
    """

    model_config = ConfigDict(populate_by_name=True)

    task: Task = Field(..., description="Tarea: explore | reward")
    algo: Algorithm = Field(..., description="Algoritmo: e3d | uniform | egreedy")
    trials: Optional[int] = Field(None, ge=1, le=1_000_000, description="Ensayos por sesion")
    sessions: Optional[int] = Field(None, ge=1, le=1_000, description="Sesiones")
    seed: Optional[int] = Field(None, ge=0, lt=MAX_SEED, description="Semilla de 64 bits")
    alpha: Optional[float] = Field(None, gt=0, le=1, description="Tasa de la politica")
    beta: Optional[float] = Field(None, gt=0, description="Temperatura inversa")
    lam: Optional[float] = Field(
        None, ge=0, alias="lambda", description="Precision de la recompensa"
    )
    eta: Optional[float] = Field(None, ge=0, le=1, description="Tasa del modelo de efecto")
    epsilon: Optional[float] = Field(None, ge=0, le=1, description="Exploracion epsilon-greedy")
    target: Optional[TargetKind] = Field(None, description="Objetivo: uniform | goal")
    goal_mass: Optional[float] = Field(None, gt=0, lt=1, description="Masa de la meta")
    window: Optional[int] = Field(None, ge=1, description="Ventana de entropia movil")


# ================================================================== #
#  Respuestas
# ================================================================== #


class StateProbabilityResponse(BaseModel):
    """Probabilidad de un estado final."""

    state: int
    row: int
    col: int
    probability: float


class OracleResponse(BaseModel):
    """Distribucion exacta de estados finales bajo la politica uniforme."""

    states: list[StateProbabilityResponse]
    goal_probability: float
    room_a_mass: float
    room_b_mass: float


class SessionSummaryResponse(BaseModel):
    """Metricas de una sesion."""

    session: int
    counts: list[int]
    entropy: float
    kl_to_uniform: float
    tv_to_oracle: Optional[float] = None
    cumulative_reward_final: int
    first_success_trial: Optional[int] = None
    rolling_entropy: list[float]
    policy_entropy: float
    greedy_sequence: str
    greedy_final_state: int


class PooledSummaryResponse(BaseModel):
    """Metricas agregadas sobre todas las sesiones."""

    counts: list[int]
    entropy: float
    kl_to_uniform: float
    tv_to_oracle: Optional[float] = None
    mean_cumulative_reward: float
    median_cumulative_reward: float
    median_first_success_trial: Optional[float] = None


class SummaryResponse(BaseModel):
    """Resumen completo de un experimento (contenido de summary.json)."""

    config: dict[str, Any]
    sessions: list[SessionSummaryResponse]
    pooled: PooledSummaryResponse
