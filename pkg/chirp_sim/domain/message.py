"""
Modelos de mensaje para ChirpSim.

Este módulo define UserMessage (bits de un usuario divididos en bits de chirp,
de constelación y de sentido) y CandidateMessage (hipótesis conjunta de todos
los usuarios evaluada por el detector ML).

Example:
    >>> from chirp_sim.domain import UserMessage
    >>> msg = UserMessage(chirp_bits=(0, 1), symbol_bits=(1, 0))
    >>> msg.bits
    (0, 1, 1, 0)
"""

from pydantic import BaseModel, Field, field_validator

from chirp_sim.domain.enums import ChirpDirection

Bits = tuple[int, ...]


def _check_bits(bits: Bits) -> Bits:
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"Bit inválido: {bit}")
    return bits


class UserMessage(BaseModel):
    """
    Bits de información de un usuario, ya separados por destino.

    Attributes:
        chirp_bits: Bits que seleccionan la frecuencia inicial del chirp (log₂P).
        symbol_bits: Bits de la constelación Q-PSK (M·log₂Q).
        direction_bit: Bit de sentido del chirp (solo en modo combinado).
    """

    chirp_bits: Bits = Field(default=(), description="Bits de modulación de chirp")
    symbol_bits: Bits = Field(..., description="Bits de la constelación")
    direction_bit: int | None = Field(
        default=None,
        ge=0,
        le=1,
        description="0 = chirp ascendente, 1 = descendente (modo combinado)",
    )

    @field_validator("chirp_bits", "symbol_bits")
    @classmethod
    def validate_binary(cls, v: Bits) -> Bits:
        """Asegura que todos los valores sean 0 o 1."""
        return _check_bits(v)

    @property
    def bits(self) -> Bits:
        """Bits en el orden de transmisión: sentido, chirp y constelación."""
        head = () if self.direction_bit is None else (self.direction_bit,)
        return head + self.chirp_bits + self.symbol_bits

    model_config = {
        "frozen": True,
    }


class UserHypothesis(BaseModel):
    """
    Hipótesis sobre el mensaje de un usuario.

    Attributes:
        nu: Índice de desplazamiento circular del chirp.
        symbol_indices: Índice de cada símbolo en la constelación (valor natural de sus bits).
        direction: Sentido del chirp en modo combinado (None en otro caso).
    """

    nu: int = Field(..., ge=0, description="Índice de chirp ν_u")
    symbol_indices: tuple[int, ...] = Field(..., description="Índices de símbolo")
    direction: ChirpDirection | None = Field(default=None, description="Sentido del chirp")

    model_config = {
        "frozen": True,
    }


class CandidateMessage(BaseModel):
    """
    Hipótesis conjunta de todos los usuarios con su etiquetado de bits.

    Attributes:
        users: Hipótesis de cada usuario (usuario 1 primero).
        bit_label: Bits exactos que se transmiten con esta hipótesis.
        candidate_index: Posición en la enumeración lexicográfica.
    """

    users: tuple[UserHypothesis, ...] = Field(..., description="Hipótesis por usuario")
    bit_label: Bits = Field(..., description="Etiqueta de bits del candidato")
    candidate_index: int = Field(..., ge=0, description="Posición en la enumeración")

    @field_validator("bit_label")
    @classmethod
    def validate_binary(cls, v: Bits) -> Bits:
        """Asegura que la etiqueta solo contenga 0 y 1."""
        return _check_bits(v)

    model_config = {
        "frozen": True,
    }
