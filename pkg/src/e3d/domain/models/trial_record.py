"""Registro inmutable de un ensayo individual."""

from __future__ import annotations

import math
from dataclasses import dataclass

from src.e3d.domain.models.action_sequence import ActionSequence


@dataclass(frozen=True, slots=True)
class TrialRecord:
    """Resultado de un ensayo: secuencia ejecutada y lectura final.

    Attributes:
        session: Indice de la sesion (desde 0).
        trial: Indice del ensayo dentro de la sesion (desde 1).
        sequence: Secuencia de acciones ejecutada.
        final_state: Estado final leido tras la secuencia.
        extrinsic_reward: Recompensa del entorno (0 o 1).
        intrinsic_drive: Impulso de efecto final
            ``-(1/beta) (log p(s_n) - log p*(s_n))`` calculado tras
            actualizar el modelo de efecto.
    """

    session: int
    trial: int
    sequence: ActionSequence
    final_state: int
    extrinsic_reward: int
    intrinsic_drive: float

    def __post_init__(self) -> None:
        if self.extrinsic_reward not in (0, 1):
            raise ValueError(
                f"La recompensa debe ser 0 o 1 (valor: {self.extrinsic_reward})."
            )
        if not math.isfinite(self.intrinsic_drive):
            raise ValueError("El impulso intrinseco debe ser finito.")
