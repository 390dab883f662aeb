"""Mapa de calor de la distribucion empirica de estados finales.

Dibuja la grilla de 3x6 con el porcentaje de visitas de cada celda,
el muro entre habitaciones (con su puerta) y marcas de inicio y meta.
Tambien provee la version en texto plano que se escribe en heatmap.txt.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import numpy as np
import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from src.e3d.domain.models.grid_world import TwoRoomWorld


def visit_percentages(
    counts: Sequence[int], world: TwoRoomWorld
) -> np.ndarray:
    """Matriz ``(alto, ancho)`` de porcentajes de visita."""
    arr = np.asarray(counts, dtype=np.float64)
    total = arr.sum()
    pct = arr / total * 100.0 if total > 0 else np.zeros_like(arr)
    return pct.reshape(world.height, world.width)


def format_heatmap_text(counts: Sequence[int], world: TwoRoomWorld) -> str:
    """Una linea por fila (fila 0 primero), porcentajes separados por espacios."""
    grid = visit_percentages(counts, world)
    lines = [" ".join(f"{v:.2f}" for v in row) for row in grid]
    return "\n".join(lines) + "\n"


def plot_visit_heatmap(
    counts: Sequence[int],
    world: TwoRoomWorld,
    title: str = "Distribucion empirica de estados finales",
    save_path: str | Path | None = None,
    figsize: tuple[float, float] = (8, 4),
) -> Figure:
    """Genera el mapa de calor de visitas sobre la grilla.

    Args:
        counts: Visitas por estado (orden de identificador).
        world: Entorno (geometria y muro).
        title: Titulo del grafico.
        save_path: Ruta para guardar la imagen (SVG o PNG segun extension).
        figsize: Tamano de la figura.

    Returns:
        Objeto Figure de matplotlib.
    """
    grid = visit_percentages(counts, world)

    fig, ax = plt.subplots(1, 1, figsize=figsize)
    im = ax.imshow(grid, interpolation="nearest", cmap="viridis")
    fig.colorbar(im, ax=ax, shrink=0.8, label="% de ensayos")

    # Anotar valores en celdas
    thresh = grid.max() / 2 if grid.max() > 0 else 0.0
    for row in range(world.height):
        for col in range(world.width):
            ax.text(
                col, row, f"{grid[row, col]:.1f}",
                ha="center", va="center",
                color="black" if grid[row, col] > thresh else "white",
                fontsize=10, fontweight="bold",
            )

    # Muro: segmentos verticales salvo en la fila de la puerta
    x_wall = world.wall_col - 0.5
    for row in range(world.height):
        if row != world.door_row:
            ax.plot([x_wall, x_wall], [row - 0.5, row + 0.5], color="red", linewidth=4)

    start_row, start_col = world.coords(world.start)
    goal_row, goal_col = world.coords(world.goal)
    ax.text(start_col - 0.4, start_row - 0.3, "S", color="white", fontsize=9)
    ax.text(goal_col - 0.4, goal_row - 0.3, "G", color="white", fontsize=9)

    ax.set_xticks(range(world.width))
    ax.set_yticks(range(world.height))
    ax.set_xlabel("Columna", fontsize=11)
    ax.set_ylabel("Fila", fontsize=11)
    ax.set_title(title, fontsize=13, fontweight="bold")

    fig.tight_layout()

    if save_path:
        save_figure(fig, save_path)

    return fig


def save_figure(fig: Figure, save_path: str | Path) -> None:
    """Guarda la figura sin metadatos variables (fecha, ids aleatorios)."""
    p = Path(save_path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context({"svg.hashsalt": "e3d"}):
        fig.savefig(p, dpi=150, bbox_inches="tight", metadata={"Date": None})
