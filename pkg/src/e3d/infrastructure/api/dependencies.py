"""Dependencias compartidas para inyeccion en los routers FastAPI.

Centraliza la creacion de servicios para que todos los routers accedan
a las mismas instancias (singleton a nivel de modulo). El servicio de la
API no tiene escritor: los experimentos se resuelven en memoria y solo
se devuelve el resumen.
"""

from __future__ import annotations

from src.e3d.application.services.experiment_service import ExperimentService
from src.e3d.domain.models.grid_world import TwoRoomWorld

# ── Entorno ────────────────────────────────────────────────────────
world = TwoRoomWorld()

# ── Servicios de aplicacion ────────────────────────────────────────
experiment_service = ExperimentService(writer=None, world=world)
