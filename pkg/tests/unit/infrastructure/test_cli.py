"""Tests unitarios para la interfaz de linea de comandos."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.e3d.infrastructure.cli.commands import (
    EXIT_INVALID_CONFIG,
    EXIT_IO_ERROR,
    EXIT_OK,
    build_parser,
    main,
)


class TestParser:

    def test_lambda_flag(self) -> None:
        args = build_parser().parse_args(
            ["run", "--task", "explore", "--algo", "e3d", "--lambda", "0.1", "--out", "x"]
        )
        assert args.lam == 0.1
        assert args.n_jobs == 1
        assert args.svg is True
        assert args.beta is None

    def test_unknown_algorithm_exits(self) -> None:
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args(
                ["run", "--task", "explore", "--algo", "sarsa", "--out", "x"]
            )
        assert exc.value.code == 2


class TestMain:

    def test_run_writes_files(self, tmp_path: Path, capsys) -> None:
        code = main([
            "run", "--task", "explore", "--algo", "uniform",
            "--trials", "40", "--no-svg", "--out", str(tmp_path),
        ])
        assert code == EXIT_OK
        for name in ("trials.csv", "dist.csv", "summary.json", "heatmap.txt"):
            assert (tmp_path / name).exists()
        assert not (tmp_path / "heatmap.svg").exists()
        assert "trials.csv" in capsys.readouterr().out

    def test_oracle(self, tmp_path: Path) -> None:
        path = tmp_path / "oracle.csv"
        assert main(["oracle", "--out", str(path)]) == EXIT_OK
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "state,row,col,probability"
        assert len(lines) == 19

    @pytest.mark.parametrize(
        "extra",
        [["--alpha", "0"], ["--trials", "0"], ["--alpha", "1", "--lambda", "2"]],
    )
    def test_invalid_config(self, tmp_path: Path, extra: list[str], capsys) -> None:
        code = main(
            ["run", "--task", "explore", "--algo", "e3d", "--out", str(tmp_path), *extra]
        )
        assert code == EXIT_INVALID_CONFIG
        assert "invalida" in capsys.readouterr().err
        assert not (tmp_path / "trials.csv").exists()

    def test_output_is_a_file(self, tmp_path: Path) -> None:
        blocker = tmp_path / "blocker"
        blocker.write_text("x", encoding="utf-8")
        code = main([
            "run", "--task", "explore", "--algo", "uniform",
            "--trials", "5", "--out", str(blocker),
        ])
        assert code == EXIT_IO_ERROR

    def test_oracle_io_error(self, tmp_path: Path) -> None:
        blocker = tmp_path / "blocker"
        blocker.write_text("x", encoding="utf-8")
        assert main(["oracle", "--out", str(blocker / "oracle.csv")]) == EXIT_IO_ERROR
