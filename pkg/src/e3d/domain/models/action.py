"""Enumeracion de las acciones elementales del mundo en grilla.

Cada accion desplaza al agente una celda en una direccion cardinal.
El orden de declaracion fija el indice de fila en la tabla de valores
(E=0, S=1, W=2, N=3).
"""

from __future__ import annotations

from enum import Enum


class Action(Enum):
    """Desplazamiento elemental sobre la grilla.

    El valor de cada miembro es el par ``(delta_fila, delta_columna)``.

    Attributes:
        E: Este, +1 columna.
        S: Sur, +1 fila.
        W: Oeste, -1 columna.
        N: Norte, -1 fila.
    """

    E = (0, 1)
    S = (1, 0)
    W = (0, -1)
    N = (-1, 0)

    @property
    def index(self) -> int:
        """Indice de fila de la accion en la tabla de valores."""
        return _ACTION_INDEX[self]

    @property
    def delta(self) -> tuple[int, int]:
        """Desplazamiento ``(fila, columna)`` de la accion."""
        return self.value

    @classmethod
    def from_index(cls, index: int) -> Action:
        """Retorna la accion asociada a un indice de fila."""
        return ACTIONS[index]

    @classmethod
    def from_symbol(cls, symbol: str) -> Action:
        """Retorna la accion a partir de su simbolo ('E', 'S', 'W', 'N').

        Raises:
            ValueError: Si el simbolo no corresponde a ninguna accion.
        """
        try:
            return cls[symbol.strip().upper()]
        except KeyError:
            raise ValueError(f"Simbolo de accion desconocido: {symbol!r}")

    def __str__(self) -> str:
        return self.name


ACTIONS: tuple[Action, ...] = tuple(Action)
_ACTION_INDEX: dict[Action, int] = {a: i for i, a in enumerate(ACTIONS)}
N_ACTIONS = len(ACTIONS)
