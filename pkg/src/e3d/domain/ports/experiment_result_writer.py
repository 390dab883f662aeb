"""Puerto abstracto para persistir los resultados de un experimento.

Define el contrato que cualquier adaptador de salida (archivos CSV,
base de datos, almacenamiento remoto) debe cumplir. La capa de
aplicacion solo conoce esta interfaz.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path

from src.e3d.domain.models.experiment_result import ExperimentResult, SummaryStats


class ExperimentResultWriter(ABC):
    """Interfaz abstracta para la escritura de resultados."""

    @abstractmethod
    def write(
        self, result: ExperimentResult, summary: SummaryStats, out_dir: Path
    ) -> list[Path]:
        """Persiste registros, distribucion, resumen y mapa de calor.

        Args:
            result: Registros de todas las sesiones.
            summary: Metricas calculadas sobre ``result``.
            out_dir: Carpeta de destino (se crea si no existe).

        Returns:
            Rutas de los archivos escritos, en orden de escritura.

        Raises:
            OSError: Si la carpeta o algun archivo no puede escribirse.
        """
