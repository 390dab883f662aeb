"""Tests unitarios para ExperimentService.

Usa un escritor en memoria para verificar la orquestacion sin tocar el
sistema de archivos.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np
import pytest

from src.e3d.application.services import metrics
from src.e3d.application.services.experiment_service import ExperimentService
from src.e3d.domain.exceptions import InvalidConfigError
from src.e3d.domain.models.action_sequence import ActionSequence
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.experiment_config import (
    Algorithm,
    ExperimentConfig,
    Task,
)
from src.e3d.domain.models.experiment_result import (
    ExperimentResult,
    SessionResult,
    SummaryStats,
)
from src.e3d.domain.models.q_table import QTable
from src.e3d.domain.models.trial_record import TrialRecord
from src.e3d.domain.ports.experiment_result_writer import ExperimentResultWriter


class _MemoryWriter(ExperimentResultWriter):
    """Escritor falso que solo registra las llamadas."""

    def __init__(self) -> None:
        self.calls: list[tuple[ExperimentResult, SummaryStats, Path]] = []

    def write(self, result, summary, out_dir):
        self.calls.append((result, summary, out_dir))
        return [out_dir / "fake.csv"]


def _session(index: int, success_at: int | None, trials: int) -> SessionResult:
    seq = ActionSequence.from_string("NNNNNNN")
    records = [
        TrialRecord(index, t, seq, 17 if t == success_at else 0,
                    1 if t == success_at else 0, 0.0)
        for t in range(1, trials + 1)
    ]
    return SessionResult(index, records, QTable.zeros(), EffectDistribution.uniform())


@pytest.fixture
def service() -> ExperimentService:
    return ExperimentService()


class TestRun:

    def test_counts_conservation(self, service: ExperimentService) -> None:
        config = ExperimentConfig(sessions=3, trials=120, seed=4)
        summary = service.summarize(service.run(config))
        assert sum(summary.counts) == 3 * 120
        assert all(sum(s.counts) == 120 for s in summary.sessions)

    def test_sessions_in_order(self, service: ExperimentService) -> None:
        result = service.run(ExperimentConfig(sessions=4, trials=10))
        assert [s.session for s in result.sessions] == [0, 1, 2, 3]
        assert len(result.records) == 40

    def test_adding_sessions_keeps_earlier_ones(self, service: ExperimentService) -> None:
        config = ExperimentConfig(sessions=2, trials=80, seed=123)
        small = service.run(config)
        large = service.run(config.with_overrides(sessions=3))
        for a, b in zip(small.sessions, large.sessions):
            assert a.records == b.records

    def test_parallel_matches_sequential(self, service: ExperimentService) -> None:
        config = ExperimentConfig(sessions=3, trials=60, algo=Algorithm.EGREEDY)
        sequential = service.run(config)
        parallel = service.run(config.with_overrides(n_jobs=2))
        assert sequential.records == parallel.records


class TestSummarize:

    def test_entropy_recomputes_from_counts(self, service: ExperimentService) -> None:
        config = ExperimentConfig(sessions=2, trials=150)
        summary = service.summarize(service.run(config))
        dist = np.asarray(summary.counts) / sum(summary.counts)
        assert summary.entropy == pytest.approx(metrics.entropy(dist), abs=1e-12)
        assert summary.kl_to_uniform == pytest.approx(
            metrics.kl_divergence(dist, EffectDistribution.uniform()), abs=1e-12
        )
        assert 0 <= summary.entropy <= math.log(18)

    def test_oracle_distance_only_for_uniform(self, service: ExperimentService) -> None:
        e3d = service.summarize(service.run(ExperimentConfig(trials=50)))
        uniform = service.summarize(
            service.run(ExperimentConfig(trials=50, algo=Algorithm.UNIFORM))
        )
        assert e3d.tv_to_oracle is None
        assert all(s.tv_to_oracle is None for s in e3d.sessions)
        assert uniform.tv_to_oracle is not None
        assert 0 <= uniform.tv_to_oracle <= 1

    def test_median_first_success(self, service: ExperimentService) -> None:
        config = ExperimentConfig(task=Task.REWARD, sessions=3, trials=4)
        result = ExperimentResult(
            config, [_session(0, 2, 4), _session(1, 3, 4), _session(2, None, 4)]
        )
        summary = service.summarize(result)
        assert summary.median_first_success_trial == 3.0
        assert [s.cumulative_reward_final for s in summary.sessions] == [1, 1, 0]
        assert summary.mean_cumulative_reward == pytest.approx(2 / 3)
        assert summary.median_cumulative_reward == 1.0

    def test_median_first_success_censored(self, service: ExperimentService) -> None:
        config = ExperimentConfig(task=Task.REWARD, sessions=3, trials=4)
        result = ExperimentResult(
            config, [_session(0, 2, 4), _session(1, None, 4), _session(2, None, 4)]
        )
        assert service.summarize(result).median_first_success_trial is None

    def test_policy_summary(self, service: ExperimentService) -> None:
        config = ExperimentConfig(trials=4, algo=Algorithm.UNIFORM)
        summary = service.summarize(ExperimentResult(config, [_session(0, None, 4)]))
        session = summary.sessions[0]
        assert session.greedy_sequence == "EEEEEEE"
        assert session.greedy_final_state == 2
        assert session.policy_entropy == pytest.approx(7 * math.log(4))

    def test_rolling_entropy_length(self, service: ExperimentService) -> None:
        config = ExperimentConfig(trials=25, window=10)
        summary = service.summarize(service.run(config))
        assert len(summary.sessions[0].rolling_entropy) == 3

    def test_config_echo(self, service: ExperimentService) -> None:
        summary = service.summarize(service.run(ExperimentConfig(trials=5)))
        assert summary.config["task"] == "explore"
        assert summary.config["lambda"] == 0.03

    def test_as_dict_layout(self, service: ExperimentService) -> None:
        config = ExperimentConfig(trials=40, sessions=2, algo=Algorithm.UNIFORM)
        data = service.summarize(service.run(config)).as_dict()
        assert list(data) == ["config", "sessions", "pooled"]
        assert [s["session"] for s in data["sessions"]] == [0, 1]
        assert sum(data["pooled"]["counts"]) == 80
        assert data["pooled"]["tv_to_oracle"] is not None
        assert data["config"]["algo"] == "uniform"


class TestRunExperiment:

    def test_writer_receives_results(self, tmp_path: Path) -> None:
        writer = _MemoryWriter()
        service = ExperimentService(writer=writer)
        config = ExperimentConfig(trials=20, out_dir=tmp_path)
        _, summary, paths = service.run_experiment(config)
        assert paths == [tmp_path / "fake.csv"]
        assert writer.calls[0][1] is summary

    def test_writer_requires_output_dir(self) -> None:
        service = ExperimentService(writer=_MemoryWriter())
        with pytest.raises(InvalidConfigError, match="out_dir"):
            service.run_experiment(ExperimentConfig(trials=5))

    def test_without_writer(self, service: ExperimentService) -> None:
        _, summary, paths = service.run_experiment(ExperimentConfig(trials=5))
        assert paths == []
        assert sum(summary.counts) == 5

    def test_oracle(self, service: ExperimentService) -> None:
        assert service.oracle()[17] == pytest.approx(9 / 16384)
