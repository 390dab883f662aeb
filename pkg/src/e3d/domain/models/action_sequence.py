"""Value Object que encapsula una orden motora compuesta de lazo abierto.

Una secuencia se elige completa antes de ejecutarse y nunca observa los
estados intermedios: solo el estado final es legible por el agente.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from src.e3d.domain.exceptions import InvalidSequenceError
from src.e3d.domain.models.action import Action

SEQUENCE_LENGTH = 7


@dataclass(frozen=True, slots=True)
class ActionSequence:
    """Secuencia inmutable de ``SEQUENCE_LENGTH`` acciones elementales.

    Attributes:
        moves: Tupla de acciones, una por ranura.
    """

    moves: tuple[Action, ...]

    def __post_init__(self) -> None:
        """Valida la longitud y el tipo de cada accion."""
        if len(self.moves) != SEQUENCE_LENGTH:
            raise InvalidSequenceError(len(self.moves), SEQUENCE_LENGTH)
        for move in self.moves:
            if not isinstance(move, Action):
                raise TypeError(
                    f"Cada movimiento debe ser un Action, "
                    f"se recibio: {type(move).__name__}."
                )

    @classmethod
    def from_string(cls, encoded: str) -> ActionSequence:
        """Decodifica una cadena como ``'SEEESEE'``.

        Raises:
            ValueError: Si algun simbolo es desconocido.
            InvalidSequenceError: Si la longitud no es la esperada.
        """
        return cls(tuple(Action.from_symbol(ch) for ch in encoded))

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> ActionSequence:
        """Construye la secuencia desde indices de fila de la tabla."""
        return cls(tuple(Action.from_index(int(i)) for i in indices))

    def indices(self) -> tuple[int, ...]:
        """Indices de fila de cada movimiento, en orden de ranura."""
        return tuple(m.index for m in self.moves)

    def encode(self) -> str:
        """Codifica la secuencia como cadena de 7 simbolos."""
        return "".join(m.name for m in self.moves)

    def __iter__(self) -> Iterator[Action]:
        return iter(self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __getitem__(self, slot: int) -> Action:
        return self.moves[slot]

    def __str__(self) -> str:
        return self.encode()
