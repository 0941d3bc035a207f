"""
Enumeraciones de dominio para ChirpSim.

Este módulo define los tipos enumerados básicos utilizados en toda la simulación:
- WaveformKind: formas de onda soportadas por la cadena de transmisión
- ChirpDirection: sentido del chirp (ascendente, descendente o combinado)
"""

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        """Backport de `enum.StrEnum` (Python 3.11)."""

        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()


class WaveformKind(StrEnum):
    """Formas de onda que puede generar la cadena de transmisión."""

    DFT_S_OFDM = "dft_s_ofdm"
    CHIRPED_DFT_S_OFDM = "chirped_dft_s_ofdm"
    DFT_S_OFDM_CM = "dft_s_ofdm_cm"
    OFDM = "ofdm"
    AFDM = "afdm"
    AFDM_CM = "afdm_cm"

    @property
    def carries_chirp_bits(self) -> bool:
        """Indica si la forma de onda codifica bits en el chirp."""
        return self in (WaveformKind.DFT_S_OFDM_CM, WaveformKind.AFDM_CM)

    @property
    def is_afdm(self) -> bool:
        """Indica si la forma de onda pertenece a la familia AFDM."""
        return self in (WaveformKind.AFDM, WaveformKind.AFDM_CM)

    @property
    def is_dft_spread(self) -> bool:
        """Indica si los símbolos se precodifican con la DFT de M puntos."""
        return self in (
            WaveformKind.DFT_S_OFDM,
            WaveformKind.CHIRPED_DFT_S_OFDM,
            WaveformKind.DFT_S_OFDM_CM,
        )


class ChirpDirection(StrEnum):
    """Sentido de barrido en frecuencia del chirp."""

    UP = "up"
    DOWN = "down"
    COMBINED = "combined"
