"""
Configuración de experimentos para ChirpSim.

Este módulo define SweepSpec (barrido Monte Carlo de una forma de onda) y
ExperimentConfig (documento JSON que describe un conjunto de curvas a comparar,
el canal y las reglas de parada).

Example:
    >>> from chirp_sim.domain import ExperimentConfig
    >>> config = ExperimentConfig.model_validate_json(
    ...     '{"name": "demo", "curves": [{"label": "cm", "system": '
    ...     '{"waveform": "dft_s_ofdm_cm", "N": 8, "M": 2, "P": 2}}], '
    ...     '"ebn0_db_points": [0, 5, 10]}'
    ... )
    >>> config.sweep_spec(config.curves[0]).config.cp_len
    2
"""

from pydantic import BaseModel, Field, field_validator, model_validator

from chirp_sim.domain.channel import ChannelParams
from chirp_sim.domain.system_config import SystemConfig

MAX_SEED = 2**64 - 1
PUBLISHABLE_MIN_ERRORS = 100


def _check_increasing(points: tuple[float, ...]) -> tuple[float, ...]:
    for previous, current in zip(points, points[1:]):
        if current <= previous:
            raise ValueError("Los puntos de Eb/N0 deben ser estrictamente crecientes")
    return points


class SweepSpec(BaseModel):
    """
    Barrido de BER de una forma de onda sobre una rejilla de Eb/N0.

    Attributes:
        config: Configuración del sistema (con cp_len y afdm_c1 resueltos).
        channel: Parámetros del canal.
        ebn0_db_points: Puntos de Eb/N0 en dB, estrictamente crecientes.
        min_errors: Errores de bit con los que se da un punto por cerrado.
        max_trials: Máximo de bloques por punto.
        master_seed: Semilla maestra de 64 bits.
        chunk_size: Bloques por lote (unidad de paralelismo y de parada).
        threads: Hilos de trabajo.
        noiseless: Fuerza σ² = 0 (depuración).
    """

    config: SystemConfig
    channel: ChannelParams = Field(default_factory=ChannelParams)
    ebn0_db_points: tuple[float, ...] = Field(default=())
    min_errors: int = Field(default=200, ge=1)
    max_trials: int = Field(default=1_000_000, ge=1)
    master_seed: int = Field(default=0, ge=0, le=MAX_SEED)
    chunk_size: int = Field(default=256, ge=1)
    threads: int = Field(default=1, ge=1)
    noiseless: bool = False

    @field_validator("ebn0_db_points")
    @classmethod
    def validate_points(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        """Los puntos deben crecer estrictamente."""
        return _check_increasing(v)

    @model_validator(mode="after")
    def validate_cp(self) -> "SweepSpec":
        """El prefijo cíclico debe cubrir el retardo máximo del canal."""
        if self.config.cp_len < self.channel.resolved_max_delay:
            raise ValueError(
                f"cp_len ({self.config.cp_len}) menor que el retardo máximo "
                f"({self.channel.resolved_max_delay})"
            )
        return self

    @property
    def publishable(self) -> bool:
        """Los puntos cierran con al menos PUBLISHABLE_MIN_ERRORS errores."""
        return self.min_errors >= PUBLISHABLE_MIN_ERRORS

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }


class CurveSpec(BaseModel):
    """
    Curva de un conjunto de comparación.

    Attributes:
        label: Nombre de la curva (también nombre del fichero CSV).
        system: Configuración de la forma de onda.
    """

    label: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_.-]+$")
    system: SystemConfig

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }


class ExperimentConfig(BaseModel):
    """
    Documento de configuración de un experimento.

    Attributes:
        name: Nombre del experimento o preset (prefijo de los ficheros de salida).
        curves: Curvas a simular o analizar.
        channel: Parámetros del canal comunes a todas las curvas.
        ebn0_db_points: Rejilla de Eb/N0 en dB.
        min_errors: Errores de bit para cerrar un punto.
        max_trials: Máximo de bloques por punto.
        master_seed: Semilla maestra de 64 bits.
        threads: Hilos del motor Monte Carlo.
        chunk_size: Bloques por lote.
        output_dir: Directorio de salida.
        bound_doppler_draws: Realizaciones de Doppler promediadas en la cota.
        papr_draws: Vectores de símbolos aleatorios por índice de chirp en el PAPR.
    """

    name: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_.-]+$")
    curves: tuple[CurveSpec, ...] = Field(..., min_length=1)
    channel: ChannelParams = Field(default_factory=ChannelParams)
    ebn0_db_points: tuple[float, ...] = Field(default=())
    min_errors: int = Field(default=200, ge=1)
    max_trials: int = Field(default=1_000_000, ge=1)
    master_seed: int = Field(default=0, ge=0, le=MAX_SEED)
    threads: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=256, ge=1)
    output_dir: str = Field(default="results")
    bound_doppler_draws: int = Field(default=1, ge=1)
    papr_draws: int = Field(default=1_000, ge=1)

    @field_validator("ebn0_db_points")
    @classmethod
    def validate_points(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        """Los puntos deben crecer estrictamente."""
        return _check_increasing(v)

    @model_validator(mode="after")
    def validate_curves(self) -> "ExperimentConfig":
        """Etiquetas únicas y prefijo cíclico compatible con el canal."""
        labels = [curve.label for curve in self.curves]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Etiquetas de curva repetidas: {labels}")
        for curve in self.curves:
            self.resolve_system(curve.system)
        return self

    def resolve_system(self, system: SystemConfig) -> SystemConfig:
        """Completa cp_len y afdm_c1 de una curva con los datos del canal."""
        return system.with_channel_defaults(
            self.channel.max_normalized_doppler,
            self.channel.resolved_max_delay,
        )

    def sweep_spec(self, curve: CurveSpec) -> SweepSpec:
        """Construye el SweepSpec de una curva."""
        return SweepSpec(
            config=self.resolve_system(curve.system),
            channel=self.channel,
            ebn0_db_points=self.ebn0_db_points,
            min_errors=self.min_errors,
            max_trials=self.max_trials,
            master_seed=self.master_seed,
            chunk_size=self.chunk_size,
            threads=self.threads,
        )

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }
