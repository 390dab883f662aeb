"""Punto de entrada de linea de comandos del laboratorio E3D.

Uso:
    python main_cli.py run --task explore --algo e3d --out results/explore_e3d
    python main_cli.py run --task reward --algo egreedy --out results/reward_eg
    python main_cli.py oracle --out results/oracle.csv
"""

from __future__ import annotations

from src.e3d.infrastructure.cli.commands import main

if __name__ == "__main__":
    raise SystemExit(main())
