"""Tests unitarios para los modulos de graficos.

Verifica que cada funcion de grafico:
    - Retorna un objeto Figure de matplotlib.
    - Guarda archivos SVG cuando se especifica save_path.
    - No falla con datos vacios o minimos.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.infrastructure.charts.heatmap_chart import (
    format_heatmap_text,
    plot_visit_heatmap,
    visit_percentages,
)
from src.e3d.infrastructure.charts.reward_chart import plot_cumulative_rewards


@pytest.fixture
def world() -> TwoRoomWorld:
    return TwoRoomWorld()


@pytest.fixture(autouse=True)
def _close_figures():
    yield
    plt.close("all")


class TestVisitPercentages:

    def test_grid_shape_and_total(self, world: TwoRoomWorld) -> None:
        grid = visit_percentages(list(range(18)), world)
        assert grid.shape == (3, 6)
        assert grid.sum() == pytest.approx(100.0)
        assert grid[2, 5] == pytest.approx(17 / 153 * 100)

    def test_no_visits(self, world: TwoRoomWorld) -> None:
        assert np.all(visit_percentages([0] * 18, world) == 0.0)

    def test_text_layout(self, world: TwoRoomWorld) -> None:
        counts = [0] * 18
        counts[0], counts[17] = 3, 1
        text = format_heatmap_text(counts, world)
        lines = text.splitlines()
        assert text.endswith("\n")
        assert len(lines) == 3
        assert all(len(line.split(" ")) == 6 for line in lines)
        assert lines[0].split(" ")[0] == "75.00"
        assert lines[2].split(" ")[5] == "25.00"


class TestHeatmapChart:

    def test_returns_figure(self, world: TwoRoomWorld) -> None:
        fig = plot_visit_heatmap([5] * 18, world)
        assert isinstance(fig, Figure)

    def test_saves_svg(self, world: TwoRoomWorld, tmp_path: Path) -> None:
        path = tmp_path / "sub" / "heatmap.svg"
        plot_visit_heatmap([1] * 18, world, save_path=path)
        assert path.exists()
        assert path.read_text(encoding="utf-8").lstrip().startswith("<?xml")

    def test_svg_is_reproducible(self, world: TwoRoomWorld, tmp_path: Path) -> None:
        counts = list(range(18))
        plot_visit_heatmap(counts, world, save_path=tmp_path / "a.svg")
        plot_visit_heatmap(counts, world, save_path=tmp_path / "b.svg")
        assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()

    def test_empty_counts(self, world: TwoRoomWorld) -> None:
        assert isinstance(plot_visit_heatmap([0] * 18, world), Figure)


class TestRewardChart:

    def test_returns_figure(self) -> None:
        fig = plot_cumulative_rewards([[0, 1, 1, 2], [0, 0, 1, 1]])
        assert isinstance(fig, Figure)
        assert len(fig.axes[0].lines) == 2

    def test_empty_series(self) -> None:
        assert isinstance(plot_cumulative_rewards([]), Figure)

    def test_saves_svg(self, tmp_path: Path) -> None:
        path = tmp_path / "rewards.svg"
        plot_cumulative_rewards([[0, 1]], save_path=path)
        assert path.exists()
