"""Value Object que representa una distribucion sobre estados finales.

Se usa tanto para el modelo de efecto aprendido ``p`` (distribucion
marginal de efectos bajo la politica actual) como para la distribucion
objetivo ``p*``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.e3d.domain.exceptions import (
    InvalidDistributionError,
    InvalidStateError,
)

N_STATES = 18
SIMPLEX_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True, eq=False)
class EffectDistribution:
    """Vector de probabilidades inmutable sobre los estados finales.

    Attributes:
        probs: Arreglo de ``N_STATES`` probabilidades no negativas que
            suman 1 (tolerancia ``SIMPLEX_TOLERANCE``).
    """

    probs: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Valida el simplex y congela el arreglo."""
        arr = np.array(self.probs, dtype=np.float64, copy=True)
        if arr.ndim != 1 or arr.size != N_STATES:
            raise InvalidDistributionError(
                f"Se esperaban {N_STATES} probabilidades, se recibio forma {arr.shape}."
            )
        if not np.all(np.isfinite(arr)) or np.any(arr < 0):
            raise InvalidDistributionError(
                "Las probabilidades deben ser finitas y no negativas."
            )
        total = float(arr.sum())
        if abs(total - 1.0) > SIMPLEX_TOLERANCE:
            raise InvalidDistributionError(
                f"Las probabilidades deben sumar 1 (suma: {total:.12f})."
            )
        arr.setflags(write=False)
        object.__setattr__(self, "probs", arr)

    @classmethod
    def uniform(cls) -> EffectDistribution:
        """Distribucion uniforme: cada estado con probabilidad 1/18."""
        return cls(np.full(N_STATES, 1.0 / N_STATES))

    @classmethod
    def point_mass(cls, state: int) -> EffectDistribution:
        """Toda la masa sobre un unico estado."""
        if not 0 <= state < N_STATES:
            raise InvalidStateError(state, N_STATES)
        probs = np.zeros(N_STATES)
        probs[state] = 1.0
        return cls(probs)

    @classmethod
    def from_simplex(cls, probs: NDArray[np.float64]) -> EffectDistribution:
        """Envuelve un arreglo que ya es un simplex, sin revalidarlo.

        El arreglo se congela en el lugar; quien llama no debe conservar
        referencias escribibles a el.
        """
        dist = object.__new__(cls)
        probs.setflags(write=False)
        object.__setattr__(dist, "probs", probs)
        return dist

    @classmethod
    def from_counts(cls, counts: NDArray[np.integer]) -> EffectDistribution:
        """Normaliza un vector de conteos de visitas.

        Raises:
            InvalidDistributionError: Si no hay ninguna visita.
        """
        arr = np.asarray(counts, dtype=np.float64)
        total = arr.sum()
        if total <= 0:
            raise InvalidDistributionError(
                "No se puede normalizar un vector de conteos vacio."
            )
        return cls(arr / total)

    def __getitem__(self, state: int) -> float:
        return float(self.probs[state])

    def __len__(self) -> int:
        return N_STATES

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EffectDistribution):
            return NotImplemented
        return bool(np.array_equal(self.probs, other.probs))

    __hash__ = None  # type: ignore[assignment]
