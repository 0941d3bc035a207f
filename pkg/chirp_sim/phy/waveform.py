"""
Cadenas de transmisión de ChirpSim.

Este módulo implementa el tratamiento de bits (separación en bits de chirp y de
constelación), la constelación PSK con etiquetado Gray, la modulación de chirp
por desplazamiento circular, el mapeo entrelazado de subportadoras y las
cadenas completas de DFT-s-OFDM, DFT-s-OFDM con chirp, DFT-s-OFDM-CM, OFDM,
AFDM y AFDM-CM, además del prefijo cíclico.

Hay dos implementaciones de cada cadena: `modulate` usa FFT y vectores
diagonales, `modulate_matrix` construye explícitamente las matrices. Ambas
deben coincidir muestra a muestra.

Example:
    >>> from chirp_sim.domain import SystemConfig, WaveformKind
    >>> from chirp_sim.phy.waveform import modulate, split_bits
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=1, Q=2, P=4)
    >>> message = split_bits((0, 1, 1, 0), config)
    >>> message.chirp_bits, message.symbol_bits
    ((0, 1), (1, 0))
    >>> round(modulate(config, [message], 0).energy(), 10)
    2.0
"""

import math
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from chirp_sim.domain.enums import ChirpDirection, WaveformKind
from chirp_sim.domain.errors import (
    InvalidArgumentError,
    InvalidConfigError,
    InvalidLengthError,
    UnsupportedConstellationError,
)
from chirp_sim.domain.message import Bits, UserMessage
from chirp_sim.domain.system_config import SystemConfig, is_power_of_two
from chirp_sim.phy.numerics import ComplexMatrix, ComplexVector, dft_matrix
from chirp_sim.phy.signal import ComplexSignal


# ─────────────────────────────────────────────────────────────
# Bits
# ─────────────────────────────────────────────────────────────


def bits_to_int(bits: Sequence[int]) -> int:
    """Valor natural de una lista de bits, el más significativo primero."""
    value = 0
    for bit in bits:
        value = (value << 1) | int(bit)
    return value


def int_to_bits(value: int, width: int) -> Bits:
    """Representación binaria natural de `value` con `width` bits."""
    return tuple((value >> shift) & 1 for shift in range(width - 1, -1, -1))


def split_bits(bits: Sequence[int], config: SystemConfig) -> UserMessage:
    """
    Divide los bits de un usuario en bits de sentido, de chirp y de símbolo.

    En modo combinado el bit de sentido va primero; después los log₂P bits de
    chirp y por último los M·log₂Q bits de constelación.

    Raises:
        InvalidLengthError: Si la longitud no coincide con el presupuesto de bits.
    """
    bits = tuple(int(b) for b in bits)
    if len(bits) != config.bits_per_user:
        raise InvalidLengthError(
            f"Se esperaban {config.bits_per_user} bits por usuario, hay {len(bits)}"
        )
    head = config.direction_bits
    chirp_end = head + config.chirp_bits
    return UserMessage(
        direction_bit=bits[0] if head else None,
        chirp_bits=bits[head:chirp_end],
        symbol_bits=bits[chirp_end:],
    )


def chirp_index(chirp_bits: Sequence[int]) -> int:
    """
    Índice ν de desplazamiento del chirp (binario natural, MSB primero).

    Una lista vacía (P = 1) devuelve 0.
    """
    return bits_to_int(chirp_bits)


# ─────────────────────────────────────────────────────────────
# Constelación PSK
# ─────────────────────────────────────────────────────────────


def gray_code(value: int) -> int:
    """Código Gray binario reflejado de `value`."""
    return value ^ (value >> 1)


@lru_cache(maxsize=16)
def psk_constellation(Q: int) -> ComplexVector:
    """
    Puntos de la constelación Q-PSK indexados por el valor natural de su etiqueta.

    La posición k del círculo lleva la etiqueta Gray(k). QPSK se sitúa en los
    múltiplos impares de π/4; el resto de órdenes, en múltiplos de 2π/Q desde 0.

    Raises:
        UnsupportedConstellationError: Si Q no es potencia de 2 o es menor que 2.
    """
    if Q < 2 or not is_power_of_two(Q):
        raise UnsupportedConstellationError(f"Constelación {Q}-PSK no soportada")
    offset = np.pi / 4 if Q == 4 else 0.0
    points = np.empty(Q, dtype=np.complex128)
    for k in range(Q):
        points[gray_code(k)] = np.exp(1j * (2 * np.pi * k / Q + offset))
    points.flags.writeable = False
    return points


def symbol_indices(symbol_bits: Sequence[int], Q: int) -> tuple[int, ...]:
    """Índice de cada símbolo: valor natural de cada grupo de log₂Q bits."""
    if Q < 2 or not is_power_of_two(Q):
        raise UnsupportedConstellationError(f"Constelación {Q}-PSK no soportada")
    width = Q.bit_length() - 1
    if len(symbol_bits) % width:
        raise InvalidLengthError(
            f"{len(symbol_bits)} bits no es múltiplo de log₂Q = {width}"
        )
    return tuple(
        bits_to_int(symbol_bits[i : i + width]) for i in range(0, len(symbol_bits), width)
    )


def psk_map(symbol_bits: Sequence[int], Q: int) -> ComplexVector:
    """
    Símbolos Q-PSK de energía unidad con etiquetado Gray.

    Raises:
        UnsupportedConstellationError: Si Q no es potencia de 2.
        InvalidLengthError: Si la longitud no es múltiplo de log₂Q.
    """
    indices = symbol_indices(symbol_bits, Q)
    return psk_constellation(Q)[list(indices)].astype(np.complex128)


# ─────────────────────────────────────────────────────────────
# Chirp
# ─────────────────────────────────────────────────────────────


def generate_chirp(N: int, chirp_rate: float, direction: ChirpDirection) -> ComplexSignal:
    """
    Chirp lineal c[n] = exp(±jπ·c_r·n²), n = 0..N−1.

    Raises:
        InvalidArgumentError: Si direction es COMBINED (se resuelve por mensaje).
    """
    if N < 1:
        raise InvalidArgumentError(f"N inválido: {N}")
    n = np.arange(N, dtype=np.float64)
    if direction is ChirpDirection.UP:
        sign = 1.0
    elif direction is ChirpDirection.DOWN:
        sign = -1.0
    else:
        raise InvalidArgumentError("El sentido combinado se resuelve con el bit de sentido")
    return ComplexSignal(samples=np.exp(sign * 1j * np.pi * chirp_rate * n**2))


def chirp_modulate(c: ComplexSignal, nu: int) -> ComplexSignal:
    """
    Desplaza circularmente el chirp ν posiciones a la izquierda.

    output[n] = c[(n + ν) mod N]; ν = N equivale a una vuelta completa.

    Raises:
        InvalidArgumentError: Si ν no está en [0, N].
    """
    if not 0 <= nu <= c.length:
        raise InvalidArgumentError(f"ν = {nu} fuera de [0, {c.length}]")
    return ComplexSignal(samples=np.roll(c.samples, -nu))


def afdm_chirp(N: int, c: float) -> ComplexVector:
    """Diagonal de chirp de AFDM, entrada n = exp(j2π·c·n²)."""
    n = np.arange(N, dtype=np.float64)
    return np.exp(2j * np.pi * c * n**2)


def message_direction(config: SystemConfig, message: UserMessage) -> ChirpDirection:
    """Sentido del chirp de un mensaje (el bit de sentido manda en modo combinado)."""
    if config.chirp_direction is ChirpDirection.COMBINED:
        if message.direction_bit is None:
            raise InvalidConfigError("Falta el bit de sentido en modo combinado")
        return ChirpDirection.DOWN if message.direction_bit else ChirpDirection.UP
    return config.chirp_direction


def message_chirp_index(config: SystemConfig, message: UserMessage) -> int:
    """Índice ν que aplica al mensaje: sus bits de chirp o el índice fijo."""
    if config.uses_chirp_modulation:
        return chirp_index(message.chirp_bits)
    return config.fixed_chirp_index


def chirp_diagonal(
    config: SystemConfig, nu: int, direction: ChirpDirection = ChirpDirection.UP
) -> ComplexVector | None:
    """
    Diagonal del chirp modulado (C_u o C_{1,u}) para un índice ν.

    Devuelve None para las formas de onda sin chirp (DFT-s-OFDM y OFDM).
    """
    kind = config.waveform
    if kind in (WaveformKind.DFT_S_OFDM, WaveformKind.OFDM):
        return None
    if kind.is_afdm:
        base = afdm_chirp(config.N, config.resolved_afdm_c1)
        if direction is ChirpDirection.DOWN:
            base = base.conj()
        base_signal = ComplexSignal(samples=base)
    else:
        base_signal = generate_chirp(config.N, config.resolved_chirp_rate, direction)
    return chirp_modulate(base_signal, nu).samples


# ─────────────────────────────────────────────────────────────
# Mapeo de subportadoras
# ─────────────────────────────────────────────────────────────


def subcarrier_positions(config: SystemConfig, u: int) -> np.ndarray:
    """Subportadoras (base 0) del usuario u: I_u−1, I_u−1+N/M, …"""
    start = config.subcarrier_index(u) - 1
    return start + config.stride * np.arange(config.M)


def mapping_matrix(config: SystemConfig, u: int) -> ComplexMatrix:
    """
    Matriz de selección P_u = I_N(:, I_u : N/M : N) de tamaño N×M.
    """
    identity = np.eye(config.N, dtype=np.complex128)
    return identity[:, subcarrier_positions(config, u)]


# ─────────────────────────────────────────────────────────────
# Cadenas de transmisión
# ─────────────────────────────────────────────────────────────


def _check_message(config: SystemConfig, message: UserMessage) -> None:
    if len(message.bits) != config.bits_per_user:
        raise InvalidConfigError(
            f"Mensaje de {len(message.bits)} bits para un presupuesto de {config.bits_per_user}"
        )
    if (message.direction_bit is not None) != bool(config.direction_bits):
        raise InvalidConfigError("Bit de sentido incoherente con chirp_direction")


def spread_signal(config: SystemConfig, symbol_bits: Sequence[int], u: int) -> ComplexVector:
    """
    Cadena sin la diagonal de chirp: F_Nᴴ P_u F_M x, F_Nᴴ P_u x o F_Nᴴ C_2 P_u x.
    """
    x = psk_map(symbol_bits, config.Q)
    kind = config.waveform
    spectrum = np.zeros(config.N, dtype=np.complex128)
    if kind.is_dft_spread:
        spectrum[subcarrier_positions(config, u)] = np.fft.fft(x, norm="ortho")
    else:
        spectrum[subcarrier_positions(config, u)] = x
    if kind.is_afdm:
        spectrum *= afdm_chirp(config.N, config.afdm_c2)
    return np.fft.ifft(spectrum, norm="ortho")


def modulate_message(config: SystemConfig, message: UserMessage, u: int) -> ComplexVector:
    """
    Señal en el tiempo (longitud N) del mensaje de un usuario, vía FFT.

    Raises:
        InvalidConfigError: Si el mensaje no encaja con la configuración.
    """
    _check_message(config, message)
    z = spread_signal(config, message.symbol_bits, u)
    diagonal = chirp_diagonal(
        config,
        message_chirp_index(config, message),
        message_direction(config, message),
    )
    return z if diagonal is None else diagonal * z


def modulate(config: SystemConfig, messages: Sequence[UserMessage], u: int) -> ComplexSignal:
    """
    Señal transmitida por el usuario u según la cadena configurada.

    - DFT_S_OFDM: F_Nᴴ P_u F_M x_u
    - CHIRPED_DFT_S_OFDM: C F_Nᴴ P_u F_M x_u (ν fijo)
    - DFT_S_OFDM_CM: C_u(ν_u) F_Nᴴ P_u F_M x_u
    - OFDM: F_Nᴴ P_u x_u
    - AFDM: C_1 F_Nᴴ C_2 P_u x_u (ν fijo)
    - AFDM_CM: C_1,u(ν_u) F_Nᴴ C_2 P_u x_u

    Raises:
        InvalidConfigError: Si el número de mensajes o su tamaño no encajan.
    """
    if len(messages) != config.U:
        raise InvalidConfigError(f"Se esperaban {config.U} mensajes, hay {len(messages)}")
    if not 0 <= u < config.U:
        raise InvalidConfigError(f"Usuario {u} fuera de rango")
    return ComplexSignal(samples=modulate_message(config, messages[u], u))


def modulate_matrix(
    config: SystemConfig, messages: Sequence[UserMessage], u: int
) -> ComplexSignal:
    """Misma cadena que `modulate` construida con productos de matrices explícitas."""
    if len(messages) != config.U:
        raise InvalidConfigError(f"Se esperaban {config.U} mensajes, hay {len(messages)}")
    message = messages[u]
    _check_message(config, message)
    x = psk_map(message.symbol_bits, config.Q)
    kind = config.waveform
    f_n_h = dft_matrix(config.N, inverse=True)
    p_u = mapping_matrix(config, u)

    chain = p_u @ dft_matrix(config.M) if kind.is_dft_spread else p_u
    if kind.is_afdm:
        chain = np.diag(afdm_chirp(config.N, config.afdm_c2)) @ chain
    chain = f_n_h @ chain
    diagonal = chirp_diagonal(
        config,
        message_chirp_index(config, message),
        message_direction(config, message),
    )
    if diagonal is not None:
        chain = np.diag(diagonal) @ chain
    return ComplexSignal(samples=chain @ x)


# ─────────────────────────────────────────────────────────────
# Prefijo cíclico y métricas de la cadena
# ─────────────────────────────────────────────────────────────


def add_cp(s: ComplexSignal, cp_len: int) -> ComplexSignal:
    """
    Antepone las últimas cp_len muestras.

    Raises:
        InvalidLengthError: Si cp_len no es menor que la longitud de la señal.
    """
    if cp_len < 0 or (cp_len and cp_len >= s.length):
        raise InvalidLengthError(f"cp_len = {cp_len} inválido para {s.length} muestras")
    if cp_len == 0:
        return s
    return ComplexSignal(samples=np.concatenate([s.samples[-cp_len:], s.samples]))


def remove_cp(s: ComplexSignal, cp_len: int, N: int | None = None) -> ComplexSignal:
    """
    Descarta las primeras cp_len muestras.

    Raises:
        InvalidLengthError: Si la longitud no es N + cp_len (cuando se indica N).
    """
    if cp_len < 0 or cp_len >= s.length:
        raise InvalidLengthError(f"cp_len = {cp_len} inválido para {s.length} muestras")
    if N is not None and s.length != N + cp_len:
        raise InvalidLengthError(f"Se esperaban {N + cp_len} muestras, hay {s.length}")
    if cp_len == 0:
        return s
    return ComplexSignal(samples=s.samples[cp_len:])


def modulation_complexity(config: SystemConfig) -> float:
    """Operaciones de la cadena DFT-s-OFDM-CM: M·log₂M + N·log₂N + N."""
    return config.M * math.log2(config.M) + config.N * math.log2(config.N) + config.N
