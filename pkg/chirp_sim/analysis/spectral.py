"""
Eficiencia espectral y complejidad de modulación.

Example:
    >>> from chirp_sim.domain import SystemConfig, WaveformKind
    >>> from chirp_sim.analysis.spectral import spectral_efficiency
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=4, Q=2, P=2)
    >>> spectral_efficiency(config)
    1.5
"""

from fractions import Fraction

from chirp_sim.domain.system_config import SystemConfig
from chirp_sim.phy.waveform import modulation_complexity

__all__ = ["modulation_complexity", "spectral_efficiency", "spectral_efficiency_exact"]


def spectral_efficiency_exact(config: SystemConfig) -> Fraction:
    """
    Eficiencia espectral en bits/s/Hz como fracción exacta.

    U·M·log₂Q/N sin modulación de chirp, U·(M·log₂Q + log₂P)/N con ella y U/N
    adicional en modo combinado.
    """
    return Fraction(config.total_bits, config.N)


def spectral_efficiency(config: SystemConfig) -> float:
    """Eficiencia espectral en bits/s/Hz."""
    return float(spectral_efficiency_exact(config))
