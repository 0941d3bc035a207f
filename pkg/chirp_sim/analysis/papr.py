"""
Medidas de PAPR para ChirpSim.

Incluye el PAPR de una señal, la tabla de PAPR máximo por índice de chirp de
DFT-s-OFDM-CM y la comparación entre formas de onda.

Example:
    >>> import numpy as np
    >>> from chirp_sim.analysis.papr import papr_db
    >>> from chirp_sim.phy.signal import ComplexSignal
    >>> round(papr_db(ComplexSignal(samples=np.array([1, 0, 0, 0]))), 2)
    6.02
"""

import itertools

import numpy as np

from chirp_sim.domain.errors import UndefinedPaprError
from chirp_sim.domain.message import UserMessage
from chirp_sim.domain.results import PaprEntry
from chirp_sim.domain.system_config import SystemConfig
from chirp_sim.phy.signal import ComplexSignal
from chirp_sim.phy.waveform import int_to_bits, modulate_message, split_bits


def papr_db(s: ComplexSignal) -> float:
    """
    PAPR en dB: 10·log₁₀(max |s[n]|² / media |s[n]|²).

    Raises:
        UndefinedPaprError: Si la señal es nula.
    """
    power = np.abs(s.samples) ** 2
    mean = float(power.mean()) if power.size else 0.0
    if mean == 0.0:
        raise UndefinedPaprError("El PAPR de una señal nula no está definido")
    return float(10.0 * np.log10(power.max() / mean))


def _symbol_draws(
    config: SystemConfig, draws: int, rng: np.random.Generator
) -> list[tuple[int, ...]]:
    """Vectores de bits de símbolo: todos si caben en `draws`, si no aleatorios."""
    width = config.symbol_bits
    if 2**width <= draws:
        return [int_to_bits(k, width) for k in range(2**width)]
    return [tuple(int(b) for b in rng.integers(0, 2, size=width)) for _ in range(draws)]


def _summarize(label: str, values: list[float], **extra) -> PaprEntry:
    return PaprEntry(
        label=label,
        max_papr_db=max(values),
        mean_papr_db=float(np.mean(values)),
        draws=len(values),
        **extra,
    )


def papr_by_chirp_index(
    config: SystemConfig,
    draws: int,
    rng: np.random.Generator,
    label: str = "",
) -> list[PaprEntry]:
    """
    PAPR máximo y medio por índice de chirp ν ∈ {0, …, P−1}.

    Para cada ν se fija el patrón de bits de chirp y se recorren los vectores
    de símbolos (exhaustivamente si hay como mucho `draws`) de todos los
    usuarios. En modo combinado se mide el up-chirp (bit de sentido 0).
    """
    symbol_sets = _symbol_draws(config, draws, rng)
    entries = []
    for nu in range(config.P):
        chirp_bits = int_to_bits(nu, config.chirp_bits)
        values = []
        for symbol_bits in symbol_sets:
            message = UserMessage(
                chirp_bits=chirp_bits,
                symbol_bits=symbol_bits,
                direction_bit=0 if config.direction_bits else None,
            )
            for u in range(config.U):
                signal = ComplexSignal(samples=modulate_message(config, message, u))
                values.append(papr_db(signal))
        entries.append(
            _summarize(
                label or str(config.waveform),
                values,
                nu=nu,
                chirp_bits="".join(str(b) for b in chirp_bits),
            )
        )
    return entries


def papr_by_waveform(
    config: SystemConfig,
    draws: int,
    rng: np.random.Generator,
    label: str = "",
) -> PaprEntry:
    """
    PAPR de la forma de onda sobre mensajes completos aleatorios.

    Todos los bits del usuario (sentido, chirp y símbolos) se sortean; se mide
    la señal de cada usuario por separado.
    """
    values = []
    for _, u in itertools.product(range(draws), range(config.U)):
        bits = tuple(int(b) for b in rng.integers(0, 2, size=config.bits_per_user))
        message = split_bits(bits, config)
        values.append(papr_db(ComplexSignal(samples=modulate_message(config, message, u))))
    return _summarize(label or str(config.waveform), values)
