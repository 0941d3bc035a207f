"""
Configuración del sistema de transmisión para ChirpSim.

Este módulo define SystemConfig, que agrupa los parámetros de una forma de onda
(tamaños de transformada, número de usuarios, órdenes de modulación, parámetros
del chirp y prefijo cíclico) y valida sus invariantes.

Example:
    >>> from chirp_sim.domain import SystemConfig, WaveformKind
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=4, Q=2, P=2)
    >>> config.chirp_rate
    0.125
    >>> config.user_subcarrier_indices
    (1, 2, 3, 4)
    >>> config.bits_per_user
    3
"""

import math
from typing import Any

from pydantic import BaseModel, Field, model_validator

from chirp_sim.domain.enums import ChirpDirection, WaveformKind


def is_power_of_two(value: int) -> bool:
    """Indica si value es una potencia de 2 (1 incluido)."""
    return value >= 1 and (value & (value - 1)) == 0


def default_afdm_c1(N: int, max_normalized_doppler: float = 0.0) -> float:
    """
    Primer parámetro de chirp de AFDM que garantiza diversidad completa.

    Sigue la regla c1 = (2·⌈α_max⌉ + 1) / (2N), con α_max el Doppler máximo
    normalizado al espaciado entre subportadoras.
    """
    return (2 * math.ceil(max_normalized_doppler) + 1) / (2 * N)


class SystemConfig(BaseModel):
    """
    Parámetros de una forma de onda para U usuarios en enlace ascendente.

    Attributes:
        waveform: Tipo de forma de onda de la cadena de transmisión.
        N: Número total de subportadoras (tamaño de la IFFT).
        M: Número de símbolos por usuario (tamaño de la DFT de precodificación).
        U: Número de usuarios.
        Q: Orden de la constelación PSK (potencia de 2).
        P: Orden de la modulación de chirp (potencia de 2, 1 = sin bits de chirp).
        chirp_rate: Tasa del chirp en ciclos/muestra² (None = 1/N).
        chirp_direction: Chirp ascendente, descendente o combinado.
        cp_len: Longitud del prefijo cíclico en muestras.
        user_subcarrier_indices: Índice de subportadora I_u (base 1) de cada usuario.
        afdm_c1: Parámetro del primer chirp de AFDM (None = regla por defecto).
        afdm_c2: Parámetro del segundo chirp de AFDM.
        fixed_chirp_index: Frecuencia inicial fija del chirp cuando no lleva bits.
    """

    waveform: WaveformKind = Field(..., description="Forma de onda de transmisión")
    N: int = Field(..., gt=0, description="Número total de subportadoras")
    M: int = Field(..., gt=0, description="Símbolos por usuario")
    U: int = Field(default=1, gt=0, description="Número de usuarios")
    Q: int = Field(default=2, ge=2, description="Orden de la constelación PSK")
    P: int = Field(default=1, ge=1, description="Orden de la modulación de chirp")
    chirp_rate: float | None = Field(
        default=None,
        description="Tasa del chirp en ciclos/muestra² (None = 1/N)",
    )
    chirp_direction: ChirpDirection = Field(
        default=ChirpDirection.UP,
        description="Sentido del chirp",
    )
    cp_len: int = Field(default=0, ge=0, description="Longitud del prefijo cíclico")
    user_subcarrier_indices: tuple[int, ...] | None = Field(
        default=None,
        description="Índice I_u (base 1) de cada usuario (None = 1..U)",
    )
    afdm_c1: float | None = Field(
        default=None,
        description="Parámetro c1 del primer chirp de AFDM",
    )
    afdm_c2: float = Field(default=0.0, description="Parámetro c2 del segundo chirp de AFDM")
    fixed_chirp_index: int = Field(
        default=0,
        ge=0,
        description="Frecuencia inicial fija del chirp sin bits de información",
    )

    @model_validator(mode="before")
    @classmethod
    def resolve_defaults(cls, data: Any) -> Any:
        """Resuelve chirp_rate = 1/N e I_u = 1..U cuando no se indican."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        n = data.get("N")
        if data.get("chirp_rate") is None and isinstance(n, int) and n > 0:
            data["chirp_rate"] = 1.0 / n
        users = data.get("U", 1)
        if data.get("user_subcarrier_indices") is None and isinstance(users, int):
            data["user_subcarrier_indices"] = tuple(range(1, users + 1))
        return data

    @model_validator(mode="after")
    def validate_dimensions(self) -> "SystemConfig":
        """Comprueba las relaciones entre N, M, U, Q, P y el mapeo de subportadoras."""
        if self.N % self.M != 0:
            raise ValueError(f"N ({self.N}) debe ser múltiplo de M ({self.M})")
        if not is_power_of_two(self.Q):
            raise ValueError(f"Q ({self.Q}) debe ser potencia de 2")
        if not is_power_of_two(self.P):
            raise ValueError(f"P ({self.P}) debe ser potencia de 2")
        if self.P > self.N:
            raise ValueError(f"P ({self.P}) no puede superar N ({self.N})")

        indices = self.user_subcarrier_indices or ()
        if len(indices) != self.U:
            raise ValueError(
                f"Se esperaban {self.U} índices de subportadora, hay {len(indices)}"
            )
        if len(set(indices)) != len(indices):
            raise ValueError("Los índices de subportadora I_u deben ser distintos")
        for index in indices:
            if not 1 <= index <= self.stride:
                raise ValueError(f"I_u = {index} fuera del rango [1, {self.stride}]")

        if not self.waveform.carries_chirp_bits:
            if self.P != 1:
                raise ValueError(f"{self.waveform} no lleva bits de chirp: P debe ser 1")
            if self.chirp_direction is ChirpDirection.COMBINED:
                raise ValueError(f"{self.waveform} no admite chirp combinado")
        if self.fixed_chirp_index >= self.N:
            raise ValueError(
                f"fixed_chirp_index ({self.fixed_chirp_index}) debe ser menor que N"
            )
        if self.fixed_chirp_index and self.waveform not in (
            WaveformKind.CHIRPED_DFT_S_OFDM,
            WaveformKind.AFDM,
        ):
            raise ValueError(f"{self.waveform} no admite fixed_chirp_index")
        return self

    @property
    def stride(self) -> int:
        """Separación N/M entre subportadoras de un mismo usuario."""
        return self.N // self.M

    @property
    def uses_chirp_modulation(self) -> bool:
        """Indica si la forma de onda transmite bits en el índice de chirp."""
        return self.waveform.carries_chirp_bits

    @property
    def chirp_bits(self) -> int:
        """Bits de chirp por usuario (log₂P)."""
        return self.P.bit_length() - 1

    @property
    def symbol_bits(self) -> int:
        """Bits de constelación por usuario (M·log₂Q)."""
        return self.M * (self.Q.bit_length() - 1)

    @property
    def direction_bits(self) -> int:
        """Bit de sentido del chirp (solo en modo combinado)."""
        return 1 if self.chirp_direction is ChirpDirection.COMBINED else 0

    @property
    def bits_per_user(self) -> int:
        """Presupuesto total de bits de información por usuario."""
        return self.direction_bits + self.chirp_bits + self.symbol_bits

    @property
    def total_bits(self) -> int:
        """Bits de información por bloque sumando todos los usuarios."""
        return self.U * self.bits_per_user

    @property
    def candidates_per_user(self) -> int:
        """Número de mensajes posibles por usuario."""
        return 1 << self.bits_per_user

    @property
    def resolved_chirp_rate(self) -> float:
        """Tasa del chirp ya resuelta (nunca None tras la validación)."""
        return self.chirp_rate if self.chirp_rate is not None else 1.0 / self.N

    @property
    def resolved_afdm_c1(self) -> float:
        """Parámetro c1 de AFDM, con la regla por defecto sin Doppler si falta."""
        if self.afdm_c1 is not None:
            return self.afdm_c1
        return default_afdm_c1(self.N)

    def subcarrier_index(self, u: int) -> int:
        """Índice I_u (base 1) del usuario u (base 0)."""
        if not 0 <= u < self.U:
            raise IndexError(f"Usuario {u} fuera de rango [0, {self.U})")
        assert self.user_subcarrier_indices is not None
        return self.user_subcarrier_indices[u]

    def with_channel_defaults(
        self, max_normalized_doppler: float, max_delay: int
    ) -> "SystemConfig":
        """
        Completa afdm_c1 y cp_len a partir del canal con el que se va a usar.

        Raises:
            ValueError: Si cp_len es menor que el retardo máximo del canal.
        """
        update: dict[str, Any] = {}
        if self.afdm_c1 is None and self.waveform.is_afdm:
            update["afdm_c1"] = default_afdm_c1(self.N, max_normalized_doppler)
        if self.cp_len == 0:
            update["cp_len"] = max_delay
        elif self.cp_len < max_delay:
            raise ValueError(
                f"cp_len ({self.cp_len}) menor que el retardo máximo ({max_delay})"
            )
        if not update:
            return self
        return SystemConfig.model_validate(self.model_dump() | update)

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }
