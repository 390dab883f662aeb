"""Router FastAPI para ejecutar experimentos por lotes."""

from __future__ import annotations

from fastapi import APIRouter, HTTPException

from src.e3d.domain.exceptions import E3DDomainError
from src.e3d.infrastructure.api.converters import (
    request_to_config,
    summary_to_response,
)
from src.e3d.infrastructure.api.dependencies import experiment_service
from src.e3d.infrastructure.api.schemas import ExperimentRequest, SummaryResponse

router = APIRouter(prefix="/api/experiments", tags=["Experimentos"])


@router.post("", response_model=SummaryResponse)
def run_experiment(body: ExperimentRequest) -> SummaryResponse:
    """Ejecuta un experimento completo y retorna su resumen.

    No escribe archivos; para obtener trials.csv y dist.csv use la CLI.
    """
    try:
        config = request_to_config(body)
        _, summary, _ = experiment_service.run_experiment(config)
    except E3DDomainError as e:
        raise HTTPException(status_code=422, detail=str(e))
    return summary_to_response(summary)
