"""Punto de entrada HTTP del laboratorio E3D (FastAPI).

Uso:
    fastapi dev main.py              # Desarrollo (hot-reload)
    fastapi run main.py              # Produccion

Linea de comandos (experimentos con archivos de salida):
    python main_cli.py run --task explore --algo e3d --out results/

Documentacion interactiva automatica:
    http://127.0.0.1:8000/docs     (Swagger UI)
    http://127.0.0.1:8000/redoc    (ReDoc)
"""

from __future__ import annotations

from fastapi import FastAPI

from src.e3d.infrastructure.api.experiment_router import (
    router as experiment_router,
)
from src.e3d.infrastructure.api.oracle_router import router as oracle_router

app = FastAPI(
    title="Laboratorio de Exploracion E3D",
    description=(
        "API REST del laboratorio de exploracion por impulso de efecto "
        "final: ejecuta experimentos en el mundo de dos habitaciones y "
        "expone el oraculo exacto de estados finales."
    ),
    version="1.0.0",
)

# ── Registrar routers ──────────────────────────────────────────────
app.include_router(oracle_router)
app.include_router(experiment_router)


@app.get("/", tags=["Root"])
def root() -> dict:
    """Endpoint raiz con informacion basica del sistema."""
    return {
        "sistema": "Laboratorio E3D",
        "version": "1.0.0",
        "docs": "/docs",
        "endpoints": {
            "oraculo": "/api/oracle",
            "experimentos": "/api/experiments",
        },
    }
