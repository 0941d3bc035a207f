"""
Módulo de análisis de ChirpSim.

PAPR, eficiencia espectral, cota superior de BER, orden de diversidad y
optimización del orden de chirp P★.
"""

from chirp_sim.analysis.bound import (
    averaged_bound,
    ber_upper_bound,
    bound_curve,
    diversity_order,
    effective_matrix,
    gamma_doubling_ratio,
    pep_pair,
    sample_profiles,
)
from chirp_sim.analysis.chirp_order import optimize_chirp_order
from chirp_sim.analysis.papr import papr_by_chirp_index, papr_by_waveform, papr_db
from chirp_sim.analysis.spectral import modulation_complexity, spectral_efficiency

__all__ = [
    "averaged_bound",
    "ber_upper_bound",
    "bound_curve",
    "diversity_order",
    "effective_matrix",
    "gamma_doubling_ratio",
    "modulation_complexity",
    "optimize_chirp_order",
    "papr_by_chirp_index",
    "papr_by_waveform",
    "papr_db",
    "pep_pair",
    "sample_profiles",
    "spectral_efficiency",
]
