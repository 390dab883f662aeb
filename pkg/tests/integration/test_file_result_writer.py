"""Tests de integracion para el escritor de resultados en archivos.

Ejecutan experimentos completos (pequenos) contra un directorio
temporal para verificar el formato de cada archivo, la consistencia
entre ellos y el determinismo byte a byte.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import pandas as pd
import pytest

from src.e3d.application.services.experiment_service import ExperimentService
from src.e3d.application.services.metrics import entropy, kl_divergence
from src.e3d.domain.models.action_sequence import ActionSequence
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import (
    Algorithm,
    ExperimentConfig,
    Task,
)
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.infrastructure.api.converters import summary_to_response
from src.e3d.infrastructure.api.schemas import SummaryResponse
from src.e3d.infrastructure.persistence.file_result_writer import (
    DIST_COLUMNS,
    TRIALS_COLUMNS,
    FileSystemResultWriter,
)


# ----------------------------------------------------------------------
# Fixtures
# ----------------------------------------------------------------------

def _run(out_dir: Path, svg: bool = True, **overrides) -> list[Path]:
    world = TwoRoomWorld()
    service = ExperimentService(writer=FileSystemResultWriter(world, svg=svg), world=world)
    config = ExperimentConfig.for_task(
        overrides.pop("task", Task.EXPLORE),
        overrides.pop("algo", Algorithm.E3D),
        out_dir=out_dir,
        **overrides,
    )
    _, _, paths = service.run_experiment(config)
    return paths


@pytest.fixture()
def explore_dir(tmp_path: Path) -> Path:
    """Carpeta con una corrida de exploracion de 300 ensayos."""
    _run(tmp_path, trials=300, seed=7)
    return tmp_path


# ----------------------------------------------------------------------
# Formato de archivos
# ----------------------------------------------------------------------

class TestFileFormats:

    def test_written_files(self, tmp_path: Path) -> None:
        paths = _run(tmp_path, trials=50)
        assert [p.name for p in paths] == [
            "trials.csv", "dist.csv", "summary.json", "heatmap.txt", "heatmap.svg",
        ]

    def test_reward_task_adds_reward_chart(self, tmp_path: Path) -> None:
        paths = _run(tmp_path, task=Task.REWARD, trials=30, sessions=2)
        assert (tmp_path / "rewards.svg") in paths

    def test_svg_can_be_disabled(self, tmp_path: Path) -> None:
        paths = _run(tmp_path, svg=False, trials=20)
        assert all(p.suffix != ".svg" for p in paths)

    def test_trials_csv(self, explore_dir: Path) -> None:
        frame = pd.read_csv(explore_dir / "trials.csv", dtype={"sequence": str})
        assert list(frame.columns) == TRIALS_COLUMNS
        assert len(frame) == 300
        assert frame["trial"].tolist() == list(range(1, 301))
        assert frame["sequence"].str.fullmatch("[ESWN]{7}").all()
        assert set(frame["reward"]) == {0}

    def test_final_state_matches_sequence(self, explore_dir: Path) -> None:
        world = TwoRoomWorld()
        frame = pd.read_csv(explore_dir / "trials.csv", dtype={"sequence": str})
        for seq, final in zip(frame["sequence"], frame["final_state"]):
            assert world.rollout(ActionSequence.from_string(seq)) == final

    def test_dist_csv(self, explore_dir: Path) -> None:
        frame = pd.read_csv(explore_dir / "dist.csv")
        assert list(frame.columns) == DIST_COLUMNS
        assert frame["state"].tolist() == list(range(18))
        assert frame["count"].sum() == 300
        assert frame["frequency"].sum() == pytest.approx(1.0, abs=1e-8)
        assert frame.loc[9, ["row", "col"]].tolist() == [1, 3]

    def test_summary_matches_distribution(self, explore_dir: Path) -> None:
        summary = json.loads((explore_dir / "summary.json").read_text(encoding="utf-8"))
        counts = pd.read_csv(explore_dir / "dist.csv")["count"].to_numpy()
        dist = counts / counts.sum()
        assert summary["pooled"]["counts"] == counts.tolist()
        assert summary["pooled"]["entropy"] == pytest.approx(entropy(dist), abs=1e-12)
        assert summary["pooled"]["kl_to_uniform"] == pytest.approx(
            kl_divergence(dist, EffectDistribution.uniform()), abs=1e-12
        )
        assert summary["pooled"]["tv_to_oracle"] is None
        assert summary["config"]["lambda"] == 0.03
        assert summary["config"]["seed"] == 7
        assert len(summary["sessions"]) == 1

    def test_summary_file_matches_api_response(self, tmp_path: Path) -> None:
        world = TwoRoomWorld()
        service = ExperimentService(
            writer=FileSystemResultWriter(world, svg=False), world=world
        )
        config = ExperimentConfig.for_task(
            Task.REWARD, Algorithm.UNIFORM, trials=200, sessions=2, out_dir=tmp_path
        )
        _, summary, _ = service.run_experiment(config)
        on_disk = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
        assert SummaryResponse.model_validate(on_disk) == summary_to_response(summary)

    def test_heatmap_text(self, explore_dir: Path) -> None:
        lines = (explore_dir / "heatmap.txt").read_text(encoding="utf-8").splitlines()
        assert len(lines) == 3
        values = [float(v) for line in lines for v in line.split(" ")]
        assert len(values) == 18
        assert sum(values) == pytest.approx(100.0, abs=0.05)


# ----------------------------------------------------------------------
# Determinismo
# ----------------------------------------------------------------------

class TestDeterminism:

    @pytest.mark.parametrize("algo", list(Algorithm))
    def test_byte_identical_outputs(self, tmp_path: Path, algo: Algorithm) -> None:
        first, second = tmp_path / "a", tmp_path / "b"
        _run(first, task=Task.REWARD, algo=algo, trials=200, sessions=2, seed=3)
        _run(second, task=Task.REWARD, algo=algo, trials=200, sessions=2, seed=3)
        for name in ("trials.csv", "dist.csv", "summary.json", "heatmap.txt"):
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_parallel_output_identical(self, tmp_path: Path) -> None:
        _run(tmp_path / "seq", trials=100, sessions=3, svg=False)
        _run(tmp_path / "par", trials=100, sessions=3, svg=False, n_jobs=3)
        for name in ("trials.csv", "dist.csv", "summary.json"):
            assert (tmp_path / "seq" / name).read_bytes() == (tmp_path / "par" / name).read_bytes()


# ----------------------------------------------------------------------
# Oraculo
# ----------------------------------------------------------------------

class TestOracleFile:

    def test_goal_probability_round_trips(self, tmp_path: Path) -> None:
        world = TwoRoomWorld()
        path = FileSystemResultWriter(world).write_oracle(
            ExperimentService(world=world).oracle(), tmp_path / "oracle.csv"
        )
        frame = pd.read_csv(path)
        assert list(frame.columns) == ["state", "row", "col", "probability"]
        assert frame["probability"].sum() == pytest.approx(1.0, abs=1e-12)
        assert frame.loc[17, "probability"] == pytest.approx(9 / 16384, rel=1e-15)

    @pytest.mark.slow
    def test_uniform_run_matches_oracle(self, tmp_path: Path) -> None:
        _run(tmp_path, algo=Algorithm.UNIFORM, trials=200_000, svg=False)
        summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
        assert summary["pooled"]["tv_to_oracle"] < 0.01
        assert math.isfinite(summary["pooled"]["entropy"])
