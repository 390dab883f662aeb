"""Router FastAPI para el oraculo exacto de estados finales."""

from __future__ import annotations

from fastapi import APIRouter

from src.e3d.infrastructure.api.converters import oracle_to_response
from src.e3d.infrastructure.api.dependencies import experiment_service
from src.e3d.infrastructure.api.schemas import OracleResponse

router = APIRouter(prefix="/api/oracle", tags=["Oraculo"])


@router.get("", response_model=OracleResponse)
def uniform_oracle() -> OracleResponse:
    """Distribucion exacta de estados finales bajo la politica uniforme."""
    dist = experiment_service.oracle()
    return oracle_to_response(dist, experiment_service.world)
