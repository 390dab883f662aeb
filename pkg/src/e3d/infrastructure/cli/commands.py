"""Interfaz de linea de comandos del laboratorio.

Subcomandos:
    run     Ejecuta un experimento y escribe trials.csv, dist.csv,
            summary.json, heatmap.txt y los graficos SVG.
    oracle  Escribe la distribucion exacta de estados finales bajo la
            politica uniforme.

Codigos de salida: 0 exito, 1 error de E/S, 2 configuracion invalida.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from src.e3d.application.services.experiment_service import ExperimentService
from src.e3d.domain.exceptions import E3DDomainError
from src.e3d.domain.models.experiment_config import Algorithm, TargetKind, Task
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.infrastructure.api.converters import request_to_config
from src.e3d.infrastructure.api.schemas import ExperimentRequest
from src.e3d.infrastructure.persistence.file_result_writer import (
    FileSystemResultWriter,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_INVALID_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    """Construye el parser con los subcomandos ``run`` y ``oracle``."""
    parser = argparse.ArgumentParser(
        prog="e3d",
        description="Laboratorio de exploracion por impulso de efecto final.",
    )
    parser.add_argument(
        "--log-level", default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Nivel de registro (stderr).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Ejecuta un experimento.")
    run.add_argument("--task", required=True, choices=[t.value for t in Task])
    run.add_argument("--algo", required=True, choices=[a.value for a in Algorithm])
    run.add_argument("--trials", type=int)
    run.add_argument("--sessions", type=int)
    run.add_argument("--seed", type=int)
    run.add_argument("--alpha", type=float)
    run.add_argument("--beta", type=float)
    run.add_argument("--lambda", dest="lam", type=float)
    run.add_argument("--eta", type=float)
    run.add_argument("--epsilon", type=float)
    run.add_argument("--target", choices=[t.value for t in TargetKind])
    run.add_argument("--goal-mass", dest="goal_mass", type=float)
    run.add_argument("--window", type=int, help="Ventana de entropia movil.")
    run.add_argument("--jobs", dest="n_jobs", type=int, default=1,
                     help="Sesiones en paralelo (-1: todos los nucleos).")
    run.add_argument("--no-svg", dest="svg", action="store_false",
                     help="No escribir los graficos vectoriales.")
    run.add_argument("--out", required=True, type=Path, help="Carpeta de salida.")

    oracle = sub.add_parser("oracle", help="Distribucion exacta bajo la politica uniforme.")
    oracle.add_argument("--out", required=True, type=Path, help="Archivo CSV de salida.")
    return parser


def _run(args: argparse.Namespace) -> int:
    request = ExperimentRequest(
        task=args.task, algo=args.algo, trials=args.trials,
        sessions=args.sessions, seed=args.seed, alpha=args.alpha,
        beta=args.beta, lam=args.lam, eta=args.eta, epsilon=args.epsilon,
        target=args.target, goal_mass=args.goal_mass, window=args.window,
    )
    config = request_to_config(request, out_dir=args.out, n_jobs=args.n_jobs)
    world = TwoRoomWorld()
    service = ExperimentService(
        writer=FileSystemResultWriter(world, svg=args.svg), world=world,
    )
    _, summary, paths = service.run_experiment(config)
    logger.info(
        "Entropia agregada: %.4f nats, KL a uniforme: %.4f, "
        "recompensa media: %.2f",
        summary.entropy, summary.kl_to_uniform, summary.mean_cumulative_reward,
    )
    for p in paths:
        print(p)
    return EXIT_OK


def _oracle(args: argparse.Namespace) -> int:
    world = TwoRoomWorld()
    dist = ExperimentService(world=world).oracle()
    path = FileSystemResultWriter(world, svg=False).write_oracle(dist, args.out)
    logger.info("Probabilidad de la meta: %.6e", dist[world.goal])
    print(path)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada de la CLI.

    Returns:
        Codigo de salida del proceso.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    handler = _run if args.command == "run" else _oracle
    try:
        return handler(args)
    except (ValidationError, E3DDomainError) as e:
        print(f"Configuracion invalida: {e}", file=sys.stderr)
        return EXIT_INVALID_CONFIG
    except OSError as e:
        print(f"Error de escritura: {e}", file=sys.stderr)
        return EXIT_IO_ERROR
