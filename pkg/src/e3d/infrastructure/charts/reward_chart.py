"""Grafico de recompensas acumuladas por sesion."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from src.e3d.infrastructure.charts.heatmap_chart import save_figure


def plot_cumulative_rewards(
    series: Sequence[Sequence[int]],
    title: str = "Recompensa acumulada por sesion",
    save_path: str | Path | None = None,
    figsize: tuple[float, float] = (10, 5),
) -> Figure:
    """Genera las curvas de recompensa acumulada, una por sesion.

    Args:
        series: Para cada sesion, la suma acumulada ensayo a ensayo.
        title: Titulo del grafico.
        save_path: Ruta para guardar la imagen.
        figsize: Tamano de la figura.

    Returns:
        Objeto Figure de matplotlib.
    """
    fig, ax = plt.subplots(1, 1, figsize=figsize)

    if not series or not any(series):
        ax.text(0.5, 0.5, "Sin datos", ha="center", va="center")
    for index, values in enumerate(series):
        ax.plot(
            range(1, len(values) + 1), values,
            linewidth=1.2, alpha=0.8,
            label=f"Sesion {index}",
        )

    ax.set_xlabel("Ensayo", fontsize=11)
    ax.set_ylabel("Recompensa acumulada", fontsize=11)
    ax.set_title(title, fontsize=13, fontweight="bold")
    if 0 < len(series) <= 10:
        ax.legend(loc="upper left", fontsize=9, framealpha=0.9)
    ax.grid(True, alpha=0.3)

    fig.tight_layout()

    if save_path:
        save_figure(fig, save_path)

    return fig
