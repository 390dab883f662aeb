"""Adaptador que persiste los resultados de un experimento en archivos.

Archivos escritos en ``out_dir``:
    trials.csv    session,trial,final_state,reward,intrinsic_drive,sequence
    dist.csv      state,row,col,count,frequency (18 filas, estado ascendente)
    summary.json  eco de la configuracion y metricas por sesion/agregadas
    heatmap.txt   3 lineas x 6 porcentajes, fila 0 primero
    heatmap.svg   mapa de calor vectorial (opcional)
    rewards.svg   recompensas acumuladas por sesion (opcional, tarea reward)

La salida es determinista: la misma configuracion produce archivos
identicos byte a byte.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd

from src.e3d.application.services.metrics import cumulative_rewards
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import Task
from src.e3d.domain.models.experiment_result import ExperimentResult, SummaryStats
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.domain.ports.experiment_result_writer import ExperimentResultWriter
from src.e3d.infrastructure.charts.heatmap_chart import (
    format_heatmap_text,
    plot_visit_heatmap,
)
from src.e3d.infrastructure.charts.reward_chart import plot_cumulative_rewards

logger = logging.getLogger(__name__)

TRIALS_COLUMNS = [
    "session", "trial", "final_state", "reward", "intrinsic_drive", "sequence",
]
DIST_COLUMNS = ["state", "row", "col", "count", "frequency"]


class FileSystemResultWriter(ExperimentResultWriter):
    """Escritor de resultados en CSV, JSON y texto.

    Args:
        world: Entorno (para filas/columnas y el mapa de calor).
        svg: Si es ``True`` escribe tambien los graficos vectoriales.
    """

    def __init__(self, world: TwoRoomWorld | None = None, svg: bool = True) -> None:
        self._world = world or TwoRoomWorld()
        self._svg = svg

    def write(
        self, result: ExperimentResult, summary: SummaryStats, out_dir: Path
    ) -> list[Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        paths = [
            self._write_trials(result, out / "trials.csv"),
            self._write_distribution(summary, out / "dist.csv"),
            self._write_summary(summary, out / "summary.json"),
            self._write_heatmap_text(summary, out / "heatmap.txt"),
        ]
        if self._svg:
            paths.append(self._write_heatmap_svg(summary, result, out / "heatmap.svg"))
            if result.config.task is Task.REWARD:
                paths.append(self._write_rewards_svg(result, out / "rewards.svg"))
        for p in paths:
            logger.debug("Escrito %s", p)
        return paths

    @staticmethod
    def _write_trials(result: ExperimentResult, path: Path) -> Path:
        frame = pd.DataFrame(
            [
                (r.session, r.trial, r.final_state, r.extrinsic_reward,
                 r.intrinsic_drive, r.sequence.encode())
                for r in result.records
            ],
            columns=TRIALS_COLUMNS,
        )
        frame.to_csv(path, index=False, float_format="%.12g", lineterminator="\n")
        return path

    def _write_distribution(self, summary: SummaryStats, path: Path) -> Path:
        total = sum(summary.counts)
        rows = []
        for state, count in enumerate(summary.counts):
            row, col = self._world.coords(state)
            rows.append((state, row, col, count, count / total if total else 0.0))
        frame = pd.DataFrame(rows, columns=DIST_COLUMNS)
        frame.to_csv(path, index=False, float_format="%.10f", lineterminator="\n")
        return path

    @staticmethod
    def _write_summary(summary: SummaryStats, path: Path) -> Path:
        path.write_text(
            json.dumps(summary.as_dict(), indent=2) + "\n",
            encoding="utf-8",
        )
        return path

    def _write_heatmap_text(self, summary: SummaryStats, path: Path) -> Path:
        path.write_text(format_heatmap_text(summary.counts, self._world), encoding="utf-8")
        return path

    def _write_heatmap_svg(
        self, summary: SummaryStats, result: ExperimentResult, path: Path
    ) -> Path:
        config = result.config
        fig = plot_visit_heatmap(
            summary.counts, self._world,
            title=f"{config.task.value} / {config.algo.value} "
                  f"({config.sessions} x {config.trials} ensayos)",
            save_path=path,
        )
        plt.close(fig)
        return path

    @staticmethod
    def _write_rewards_svg(result: ExperimentResult, path: Path) -> Path:
        series = [cumulative_rewards(s.records) for s in result.sessions]
        fig = plot_cumulative_rewards(
            series,
            title=f"Recompensa acumulada ({result.config.algo.value})",
            save_path=path,
        )
        plt.close(fig)
        return path

    def write_oracle(self, dist: EffectDistribution, path: Path) -> Path:
        """Escribe la distribucion del oraculo: ``state,row,col,probability``."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        rows = [
            (state, *self._world.coords(state), dist[state])
            for state in range(self._world.n_states)
        ]
        frame = pd.DataFrame(rows, columns=["state", "row", "col", "probability"])
        frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
        return path
