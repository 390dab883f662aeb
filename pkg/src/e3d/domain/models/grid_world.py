"""Mundo en grilla deterministico de dos habitaciones.

La grilla tiene 3 filas y 6 columnas (18 estados). La habitacion A ocupa
las columnas 0-2 y la habitacion B las columnas 3-5. Un muro separa
ambas habitaciones salvo en la puerta, situada en la fila 1 entre las
celdas (1, 2) y (1, 3).

Los estados se numeran por filas: ``id = fila * ancho + columna``.
El agente parte de la esquina superior izquierda (estado 0) y la
recompensa solo se entrega en la esquina inferior derecha (estado 17).
Un movimiento bloqueado (borde o muro) deja al agente en su lugar.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from src.e3d.domain.exceptions import InvalidConfigError, InvalidStateError
from src.e3d.domain.models.action import ACTIONS, Action, N_ACTIONS
from src.e3d.domain.models.action_sequence import ActionSequence


@dataclass(frozen=True, slots=True)
class TwoRoomWorld:
    """Geometria inmutable del entorno de dos habitaciones.

    Attributes:
        height: Numero de filas.
        width: Numero de columnas.
        wall_col: Primera columna de la habitacion B; el muro separa
            las columnas ``wall_col - 1`` y ``wall_col``.
        door_row: Fila en la que el muro es atravesable.
        start: Estado inicial de cada ensayo.
        goal: Estado recompensado.
    """

    height: int = 3
    width: int = 6
    wall_col: int = 3
    door_row: int = 1
    start: int = 0
    goal: int = 17

    def __post_init__(self) -> None:
        """Valida la coherencia de la geometria."""
        if self.height < 1 or self.width < 2:
            raise InvalidConfigError(
                "shape", (self.height, self.width), "grilla degenerada"
            )
        if not 0 < self.wall_col < self.width:
            raise InvalidConfigError(
                "wall_col", self.wall_col, "el muro debe quedar dentro de la grilla"
            )
        if not 0 <= self.door_row < self.height:
            raise InvalidConfigError(
                "door_row", self.door_row, "la puerta debe quedar dentro de la grilla"
            )
        self.check_state(self.start)
        self.check_state(self.goal)
        if self.room_of(self.start) != "A":
            raise InvalidConfigError("start", self.start, "debe estar en la habitacion A")
        if self.room_of(self.goal) != "B":
            raise InvalidConfigError("goal", self.goal, "debe estar en la habitacion B")

    # ------------------------------------------------------------------ #
    #  Geometria
    # ------------------------------------------------------------------ #

    @property
    def n_states(self) -> int:
        """Cantidad total de celdas."""
        return self.height * self.width

    def check_state(self, state: int) -> None:
        """Verifica que ``state`` sea un identificador valido.

        Raises:
            InvalidStateError: Si el identificador esta fuera de rango.
        """
        if not 0 <= int(state) < self.n_states:
            raise InvalidStateError(int(state), self.n_states)

    def coords(self, state: int) -> tuple[int, int]:
        """Convierte un identificador en el par ``(fila, columna)``."""
        self.check_state(state)
        return divmod(int(state), self.width)

    def state_id(self, row: int, col: int) -> int:
        """Convierte un par ``(fila, columna)`` en identificador."""
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise InvalidStateError(row * self.width + col, self.n_states)
        return row * self.width + col

    def room_of(self, state: int) -> str:
        """Retorna ``'A'`` o ``'B'`` segun la habitacion de la celda."""
        _, col = divmod(int(state), self.width)
        return "A" if col < self.wall_col else "B"

    def _blocked(self, row: int, col: int, new_col: int) -> bool:
        """Indica si un desplazamiento horizontal cruza el muro fuera de la puerta."""
        crosses = {col, new_col} == {self.wall_col - 1, self.wall_col}
        return crosses and row != self.door_row

    # ------------------------------------------------------------------ #
    #  Dinamica
    # ------------------------------------------------------------------ #

    def step(self, state: int, action: Action) -> int:
        """Aplica una accion elemental y retorna el estado siguiente.

        Args:
            state: Estado actual.
            action: Accion elemental.

        Returns:
            La celda adyacente en la direccion de la accion, o ``state``
            si el movimiento sale de la grilla o choca con el muro.
        """
        row, col = self.coords(state)
        d_row, d_col = action.delta
        new_row, new_col = row + d_row, col + d_col
        if not (0 <= new_row < self.height and 0 <= new_col < self.width):
            return int(state)
        if d_col != 0 and self._blocked(row, col, new_col):
            return int(state)
        return new_row * self.width + new_col

    def rollout(self, seq: ActionSequence) -> int:
        """Ejecuta la secuencia completa desde ``start`` y retorna solo el estado final.

        Recorre la tabla de transiciones en cache; equivale a encadenar
        ``step`` sobre cada accion de la secuencia.
        """
        table = _transition_table(self)
        state = self.start
        for index in seq.indices():
            state = table[state, index]
        return int(state)

    def reward(self, state: int) -> int:
        """Recompensa terminal: 1 en la meta, 0 en cualquier otra celda."""
        self.check_state(state)
        return 1 if int(state) == self.goal else 0

    def transition_table(self) -> NDArray[np.int64]:
        """Tabla ``(n_states, 4)`` con el estado siguiente de cada par estado-accion."""
        return _transition_table(self)

    def rollout_batch(self, moves: NDArray[np.integer]) -> NDArray[np.int64]:
        """Ejecuta en bloque ``m`` secuencias dadas como indices de accion.

        Args:
            moves: Matriz ``(m, n)`` de indices de accion (0..3).

        Returns:
            Vector de ``m`` estados finales.
        """
        table = self.transition_table()
        batch = np.asarray(moves, dtype=np.int64)
        if batch.ndim != 2:
            raise ValueError("Se esperaba una matriz (m, n) de acciones.")
        states = np.full(batch.shape[0], self.start, dtype=np.int64)
        for slot in range(batch.shape[1]):
            states = table[states, batch[:, slot]]
        return states


@lru_cache(maxsize=8)
def _transition_table(world: TwoRoomWorld) -> NDArray[np.int64]:
    table = np.empty((world.n_states, N_ACTIONS), dtype=np.int64)
    for state in range(world.n_states):
        for action in ACTIONS:
            table[state, action.index] = world.step(state, action)
    table.setflags(write=False)
    return table
