"""Value Object con los valores de accion por ranura de la politica factorizada.

La entrada ``(a, i)`` es el valor de la accion elemental ``a`` en la
ranura ``i`` de la secuencia. Existe un unico contexto (el estado
inicial), por lo que la tabla no se indexa por estado.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.e3d.domain.exceptions import NonFiniteValueError
from src.e3d.domain.models.action import N_ACTIONS
from src.e3d.domain.models.action_sequence import SEQUENCE_LENGTH


@dataclass(frozen=True, slots=True, eq=False)
class QTable:
    """Matriz inmutable ``4 x 7`` de valores de accion.

    El arreglo interno se marca como de solo lectura; las reglas de
    actualizacion construyen siempre una tabla nueva.

    Attributes:
        values: Arreglo ``(N_ACTIONS, SEQUENCE_LENGTH)`` de floats finitos.
    """

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Copia, valida la forma y congela el arreglo."""
        arr = np.array(self.values, dtype=np.float64, copy=True)
        if arr.shape != (N_ACTIONS, SEQUENCE_LENGTH):
            raise ValueError(
                f"La tabla debe tener forma ({N_ACTIONS}, {SEQUENCE_LENGTH}), "
                f"se recibio {arr.shape}."
            )
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValueError(
                "La tabla de valores contiene entradas no finitas."
            )
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def zeros(cls) -> QTable:
        """Tabla inicial: todas las entradas en cero."""
        return cls(np.zeros((N_ACTIONS, SEQUENCE_LENGTH)))

    def column(self, slot: int) -> NDArray[np.float64]:
        """Valores de las 4 acciones en la ranura ``slot``."""
        if not 0 <= slot < SEQUENCE_LENGTH:
            raise IndexError(f"Ranura fuera de rango: {slot}.")
        return self.values[:, slot]

    def get(self, action_index: int, slot: int) -> float:
        """Valor de una entrada individual."""
        return float(self.values[action_index, slot])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTable):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    __hash__ = None  # type: ignore[assignment]
