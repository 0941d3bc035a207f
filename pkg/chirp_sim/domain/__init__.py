"""
Módulo de dominio de ChirpSim.

Contiene los modelos de datos, enumeraciones, errores y presets del simulador.
"""

from chirp_sim.domain.channel import (
    ChannelParams,
    ChannelRealization,
    DelayDopplerProfile,
    PathState,
)
from chirp_sim.domain.enums import ChirpDirection, WaveformKind
from chirp_sim.domain.experiment import CurveSpec, ExperimentConfig, SweepSpec
from chirp_sim.domain.factory import available_presets, load_experiment, load_preset
from chirp_sim.domain.message import CandidateMessage, UserHypothesis, UserMessage
from chirp_sim.domain.results import (
    BerCurve,
    BerRow,
    BoundReport,
    ChirpOrderResult,
    ChirpOrderStep,
    DetectionResult,
    PaprEntry,
    PairTerm,
)
from chirp_sim.domain.system_config import SystemConfig, default_afdm_c1, is_power_of_two

__all__ = [
    "BerCurve",
    "BerRow",
    "BoundReport",
    "CandidateMessage",
    "ChannelParams",
    "ChannelRealization",
    "ChirpDirection",
    "ChirpOrderResult",
    "ChirpOrderStep",
    "CurveSpec",
    "DelayDopplerProfile",
    "DetectionResult",
    "ExperimentConfig",
    "PairTerm",
    "PaprEntry",
    "PathState",
    "SweepSpec",
    "SystemConfig",
    "UserHypothesis",
    "UserMessage",
    "WaveformKind",
    "available_presets",
    "default_afdm_c1",
    "is_power_of_two",
    "load_experiment",
    "load_preset",
]
