"""
Modelos del canal retardo-Doppler para ChirpSim.

Este módulo define ChannelParams (parámetros físicos del canal), PathState
(ganancia, Doppler normalizado y retardo entero de un camino) y
ChannelRealization (caminos de cada usuario en una realización).

Example:
    >>> from chirp_sim.domain import ChannelParams
    >>> params = ChannelParams(L=3, max_doppler_hz=2_000.0, subcarrier_spacing_hz=15_000.0)
    >>> round(params.max_normalized_doppler, 4)
    0.1333
"""

from pydantic import BaseModel, Field, field_validator, model_validator


class ChannelParams(BaseModel):
    """
    Parámetros del canal multicamino con Doppler.

    Attributes:
        L: Número de caminos por usuario.
        max_doppler_hz: Frecuencia Doppler máxima f_max en Hz.
        subcarrier_spacing_hz: Espaciado entre subportadoras Δf en Hz.
        carrier_hz: Frecuencia portadora f_c en Hz (informativo).
        velocity_kmh: Velocidad del terminal en km/h (informativo).
        max_delay: Retardo entero máximo en muestras.
        random_delays: Si True, retardos aleatorios distintos en [0, max_delay].
    """

    L: int = Field(default=3, ge=1, description="Número de caminos")
    max_doppler_hz: float = Field(default=2_000.0, ge=0.0, description="f_max en Hz")
    subcarrier_spacing_hz: float = Field(
        default=15_000.0,
        gt=0.0,
        description="Espaciado entre subportadoras en Hz",
    )
    carrier_hz: float = Field(default=4e9, gt=0.0, description="Portadora en Hz")
    velocity_kmh: float = Field(default=500.0, ge=0.0, description="Velocidad en km/h")
    max_delay: int | None = Field(
        default=None,
        ge=0,
        description="Retardo máximo en muestras (None = L-1)",
    )
    random_delays: bool = Field(
        default=False,
        description="Retardos aleatorios distintos en lugar de {0, …, L-1}",
    )

    @model_validator(mode="after")
    def validate_delay_span(self) -> "ChannelParams":
        """Asegura que caben L retardos distintos en [0, max_delay]."""
        if self.max_delay is not None and self.max_delay + 1 < self.L:
            raise ValueError(
                f"max_delay ({self.max_delay}) no permite {self.L} retardos distintos"
            )
        return self

    @property
    def resolved_max_delay(self) -> int:
        """Retardo máximo efectivo en muestras."""
        return self.L - 1 if self.max_delay is None else self.max_delay

    @property
    def max_normalized_doppler(self) -> float:
        """Doppler máximo normalizado f̄_max = f_max / Δf."""
        return self.max_doppler_hz / self.subcarrier_spacing_hz

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }


class PathState(BaseModel):
    """
    Estado de un camino del canal.

    Attributes:
        gain: Ganancia compleja h_{u,p}.
        doppler: Doppler normalizado v_{u,p} (en unidades de Δf).
        delay: Retardo entero l_{u,p} en muestras.
    """

    gain: complex = Field(..., description="Ganancia compleja del camino")
    doppler: float = Field(default=0.0, description="Doppler normalizado")
    delay: int = Field(default=0, ge=0, description="Retardo entero en muestras")

    model_config = {
        "frozen": True,
    }


class ChannelRealization(BaseModel):
    """
    Realización del canal para todos los usuarios.

    Attributes:
        users: Caminos de cada usuario (usuario 1 primero).
    """

    users: tuple[tuple[PathState, ...], ...] = Field(
        ...,
        description="Lista de caminos por usuario",
    )

    @field_validator("users")
    @classmethod
    def validate_distinct_delays(
        cls, v: tuple[tuple[PathState, ...], ...]
    ) -> tuple[tuple[PathState, ...], ...]:
        """Cada usuario necesita al menos un camino y retardos distintos entre sí."""
        for u, paths in enumerate(v):
            if not paths:
                raise ValueError(f"El usuario {u} no tiene caminos")
            delays = [path.delay for path in paths]
            if len(set(delays)) != len(delays):
                raise ValueError(f"Retardos repetidos para el usuario {u}: {delays}")
        return v

    @property
    def num_users(self) -> int:
        """Número de usuarios de la realización."""
        return len(self.users)

    model_config = {
        "frozen": True,
    }


class DelayDopplerProfile(BaseModel):
    """
    Perfil de retardos y Dopplers de un usuario, sin ganancias.

    Es la parte del canal de la que dependen la cota de BER y el orden de
    diversidad.

    Attributes:
        dopplers: Doppler normalizado de cada camino.
        delays: Retardo entero de cada camino.
    """

    dopplers: tuple[float, ...] = Field(..., min_length=1)
    delays: tuple[int, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_lengths(self) -> "DelayDopplerProfile":
        """Mismo número de Dopplers que de retardos, y retardos distintos."""
        if len(self.dopplers) != len(self.delays):
            raise ValueError("dopplers y delays deben tener la misma longitud")
        if len(set(self.delays)) != len(self.delays):
            raise ValueError(f"Retardos repetidos: {self.delays}")
        if min(self.delays) < 0:
            raise ValueError("Los retardos no pueden ser negativos")
        return self

    @property
    def L(self) -> int:
        """Número de caminos."""
        return len(self.delays)

    @classmethod
    def from_paths(cls, paths: tuple[PathState, ...]) -> "DelayDopplerProfile":
        """Extrae el perfil de los caminos de un usuario."""
        return cls(
            dopplers=tuple(path.doppler for path in paths),
            delays=tuple(path.delay for path in paths),
        )

    model_config = {
        "frozen": True,
    }
