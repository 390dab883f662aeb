"""Funciones auxiliares para convertir entre schemas y objetos de dominio."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import ExperimentConfig
from src.e3d.domain.models.experiment_result import SummaryStats
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.infrastructure.api.schemas import (
    ExperimentRequest,
    OracleResponse,
    StateProbabilityResponse,
    SummaryResponse,
)


def request_to_config(
    request: ExperimentRequest,
    out_dir: Optional[Path] = None,
    n_jobs: Optional[int] = None,
) -> ExperimentConfig:
    """Convierte una solicitud validada en la configuracion de dominio.

    Raises:
        InvalidConfigError: Si la combinacion de valores es invalida
            (por ejemplo ``alpha * lambda > 1``).
    """
    overrides = request.model_dump(exclude={"task", "algo"})
    return ExperimentConfig.for_task(
        request.task, request.algo, out_dir=out_dir, n_jobs=n_jobs, **overrides
    )


def summary_to_response(summary: SummaryStats) -> SummaryResponse:
    """Convierte el resumen de dominio al schema serializable."""
    return SummaryResponse.model_validate(summary.as_dict())


def oracle_to_response(
    dist: EffectDistribution, world: TwoRoomWorld
) -> OracleResponse:
    """Convierte la distribucion del oraculo al schema de respuesta."""
    states = []
    room_mass = {"A": 0.0, "B": 0.0}
    for state in range(world.n_states):
        row, col = world.coords(state)
        states.append(StateProbabilityResponse(
            state=state, row=row, col=col, probability=dist[state],
        ))
        room_mass[world.room_of(state)] += dist[state]
    return OracleResponse(
        states=states,
        goal_probability=dist[world.goal],
        room_a_mass=room_mass["A"],
        room_b_mass=room_mass["B"],
    )
