"""Excepciones de dominio del laboratorio E3D.

Define las excepciones especificas que permiten distinguir violaciones
de contrato del dominio (distribuciones invalidas, configuraciones fuera
de rango, secuencias mal formadas) de errores genericos de
infraestructura. Todas heredan de ``E3DDomainError`` para facilitar el
manejo centralizado en la API y en la linea de comandos.
"""

from __future__ import annotations

from typing import Any


class E3DDomainError(Exception):
    """Clase base para todas las excepciones de dominio E3D."""


class InvalidConfigError(E3DDomainError):
    """Se lanza cuando un parametro de experimento esta fuera de rango.

    Attributes:
        field_name: Nombre del parametro invalido.
        value: Valor recibido.
    """

    def __init__(self, field_name: str, value: Any, reason: str) -> None:
        self.field_name = field_name
        self.value = value
        super().__init__(
            f"Parametro '{field_name}' invalido ({value!r}): {reason}."
        )


class InvalidDistributionError(E3DDomainError):
    """Se lanza cuando un vector no es un simplex de probabilidad valido."""


class InvalidSequenceError(E3DDomainError):
    """Se lanza cuando una secuencia de acciones no tiene la forma esperada.

    Attributes:
        length: Longitud recibida.
    """

    def __init__(self, length: int, expected: int) -> None:
        self.length = length
        super().__init__(
            f"La secuencia debe tener exactamente {expected} acciones "
            f"(se recibieron {length})."
        )


class InvalidStateError(E3DDomainError):
    """Se lanza cuando un identificador de estado esta fuera de la grilla.

    Attributes:
        state: Identificador recibido.
    """

    def __init__(self, state: int, n_states: int) -> None:
        self.state = state
        super().__init__(
            f"Estado {state} fuera de rango (0..{n_states - 1})."
        )


class NonFiniteValueError(E3DDomainError):
    """Se lanza cuando una tabla de valores contiene NaN o infinitos."""


class InvalidTemperatureError(E3DDomainError):
    """Se lanza cuando la temperatura inversa no admite la operacion.

    El termino de impulso divide por ``beta``, por lo que ``beta = 0``
    no es aceptable en las reglas de actualizacion.

    Attributes:
        beta: Valor recibido.
    """

    def __init__(self, beta: float) -> None:
        self.beta = beta
        super().__init__(
            f"La temperatura inversa debe ser positiva y finita "
            f"(valor recibido: {beta})."
        )
