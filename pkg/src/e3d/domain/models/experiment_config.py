"""Configuracion de un experimento y parametros de aprendizaje.

Los valores por defecto reproducen los hiperparametros de las dos
tareas de referencia:

    explore : sin recompensa, 1 sesion, alpha=0.3, beta=1,
              lambda=0.03, eta=0.01.
    reward  : recompensa 1 en la meta, 10 sesiones, beta=100,
              epsilon=0.1 (resto igual).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from src.e3d.domain.exceptions import InvalidConfigError


class Task(Enum):
    """Tarea del experimento."""

    EXPLORE = "explore"
    REWARD = "reward"


class Algorithm(Enum):
    """Algoritmo de aprendizaje evaluado."""

    E3D = "e3d"
    UNIFORM = "uniform"
    EGREEDY = "egreedy"


class TargetKind(Enum):
    """Forma de la distribucion objetivo de efectos ``p*``.

    Attributes:
        UNIFORM: Exploracion uniforme (E3D propiamente dicho).
        GOAL: Masa ``goal_mass`` en la meta y el resto repartido.
    """

    UNIFORM = "uniform"
    GOAL = "goal"


MAX_SEED = 2**64

# Valores por tarea: (sesiones, beta)
_TASK_DEFAULTS: dict[Task, tuple[int, float]] = {
    Task.EXPLORE: (1, 1.0),
    Task.REWARD: (10, 100.0),
}


def _require(condition: bool, name: str, value: Any, reason: str) -> None:
    if not condition:
        raise InvalidConfigError(name, value, reason)


def _finite(value: float) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)


@dataclass(frozen=True, slots=True)
class E3DParams:
    """Parametros de la regla de actualizacion E3D.

    Attributes:
        alpha: Tasa de aprendizaje de la politica, en (0, 1].
        beta: Temperatura inversa del softmax, > 0.
        lam: Precision de la recompensa (lambda), >= 0.
        eta: Tasa de aprendizaje del modelo de efecto, en [0, 1].
    """

    alpha: float = 0.3
    beta: float = 1.0
    lam: float = 0.03
    eta: float = 0.01

    def __post_init__(self) -> None:
        """Valida rangos y el factor de decaimiento ``1 - alpha*lambda``."""
        _require(_finite(self.alpha) and 0 < self.alpha <= 1,
                 "alpha", self.alpha, "debe estar en (0, 1]")
        _require(_finite(self.beta) and self.beta > 0,
                 "beta", self.beta, "debe ser positivo y finito")
        _require(_finite(self.lam) and self.lam >= 0,
                 "lambda", self.lam, "debe ser no negativo y finito")
        _require(self.alpha * self.lam <= 1,
                 "lambda", self.lam, "alpha*lambda no puede superar 1")
        _require(_finite(self.eta) and 0 <= self.eta <= 1,
                 "eta", self.eta, "debe estar en [0, 1]")


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    """Configuracion completa de un experimento.

    Attributes:
        task: Tarea (exploracion pura o busqueda de recompensa).
        algo: Algoritmo evaluado.
        trials: Ensayos por sesion.
        sessions: Numero de sesiones independientes.
        seed: Semilla de 64 bits; la sesion ``k`` usa un flujo derivado
            unicamente de ``(seed, k)``.
        alpha: Tasa de aprendizaje de la politica.
        beta: Temperatura inversa.
        lam: Precision de la recompensa (lambda).
        eta: Tasa de aprendizaje del modelo de efecto.
        epsilon: Probabilidad de exploracion de epsilon-greedy.
        target: Forma de la distribucion objetivo.
        goal_mass: Masa de la meta cuando ``target`` es ``GOAL``.
        window: Tamano de ventana de la entropia movil.
        n_jobs: Sesiones ejecutadas en paralelo (joblib).
        out_dir: Carpeta de salida (opcional en la API).
    """

    task: Task = Task.EXPLORE
    algo: Algorithm = Algorithm.E3D
    trials: int = 5000
    sessions: int = 1
    seed: int = 0
    alpha: float = 0.3
    beta: float = 1.0
    lam: float = 0.03
    eta: float = 0.01
    epsilon: float = 0.1
    target: TargetKind = TargetKind.UNIFORM
    goal_mass: float = 0.5
    window: int = 500
    n_jobs: int = 1
    out_dir: Optional[Path] = None

    def __post_init__(self) -> None:
        """Valida todos los rangos numericos."""
        _require(isinstance(self.task, Task), "task", self.task, "tarea desconocida")
        _require(isinstance(self.algo, Algorithm), "algo", self.algo,
                 "algoritmo desconocido")
        _require(isinstance(self.target, TargetKind), "target", self.target,
                 "objetivo desconocido")
        _require(isinstance(self.trials, int) and self.trials >= 1,
                 "trials", self.trials, "debe ser un entero >= 1")
        _require(isinstance(self.sessions, int) and self.sessions >= 1,
                 "sessions", self.sessions, "debe ser un entero >= 1")
        _require(isinstance(self.seed, int) and 0 <= self.seed < MAX_SEED,
                 "seed", self.seed, "debe ser un entero de 64 bits sin signo")
        _require(_finite(self.epsilon) and 0 <= self.epsilon <= 1,
                 "epsilon", self.epsilon, "debe estar en [0, 1]")
        _require(_finite(self.goal_mass) and 0 < self.goal_mass < 1,
                 "goal_mass", self.goal_mass, "debe estar en (0, 1)")
        _require(isinstance(self.window, int) and self.window >= 1,
                 "window", self.window, "debe ser un entero >= 1")
        _require(isinstance(self.n_jobs, int) and self.n_jobs != 0,
                 "n_jobs", self.n_jobs, "no puede ser 0")
        # Reutiliza las validaciones de la regla de actualizacion.
        self.params()

    @classmethod
    def for_task(cls, task: Task, algo: Algorithm, **overrides: Any) -> ExperimentConfig:
        """Construye la configuracion con los valores por defecto de la tarea.

        Los argumentos con valor ``None`` se ignoran, de modo que las
        opciones no indicadas en la CLI o en la API conservan el valor
        de la tarea.

        Args:
            task: Tarea del experimento.
            algo: Algoritmo.
            **overrides: Campos a sobreescribir.

        Returns:
            Configuracion validada.
        """
        sessions, beta = _TASK_DEFAULTS[task]
        values: dict[str, Any] = {"sessions": sessions, "beta": beta}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(task=task, algo=algo, **values)

    def params(self) -> E3DParams:
        """Parametros de la regla de actualizacion."""
        return E3DParams(alpha=self.alpha, beta=self.beta, lam=self.lam, eta=self.eta)

    @property
    def rewarded(self) -> bool:
        """Indica si el entorno entrega recompensa en esta tarea."""
        return self.task is Task.REWARD

    def with_overrides(self, **changes: Any) -> ExperimentConfig:
        """Retorna una copia con campos modificados (revalidada)."""
        return replace(self, **changes)

    def as_dict(self) -> dict[str, Any]:
        """Eco serializable de la configuracion.

        ``out_dir`` se omite para que el resumen no dependa de la ruta.
        """
        data = asdict(self)
        data.pop("out_dir")
        data.pop("n_jobs")
        for key, value in data.items():
            if isinstance(value, Enum):
                data[key] = value.value
        data["lambda"] = data.pop("lam")
        return data
