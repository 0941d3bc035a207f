"""
Optimización del orden de modulación de chirp.

Con todos los usuarios compartiendo el mismo chirp C̃₀(ν₀), el orden P̃ es
ambiguo si dos pares distintos (ν₀, x̃) con ν₀ < P̃ producen la misma señal
compuesta C̃₀ Σ_u F_Nᴴ P_u F_M x̃_u (muestra a muestra, dentro de la
tolerancia). La búsqueda empieza en P̃ = N y divide por dos hasta encontrar un
orden sin ambigüedad, que es P★.

Example:
    >>> from chirp_sim.domain import SystemConfig, WaveformKind
    >>> from chirp_sim.analysis.chirp_order import optimize_chirp_order
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=1, Q=2)
    >>> optimize_chirp_order(config).p_star
    4
"""

import logging

import numpy as np

from chirp_sim.domain.enums import ChirpDirection
from chirp_sim.domain.errors import (
    DegenerateConfigError,
    InvalidConfigError,
    SearchSpaceTooLargeError,
)
from chirp_sim.domain.results import ChirpOrderResult, ChirpOrderStep
from chirp_sim.domain.system_config import SystemConfig
from chirp_sim.phy.numerics import ComplexMatrix
from chirp_sim.phy.waveform import chirp_diagonal, int_to_bits, spread_signal

logger = logging.getLogger(__name__)

AMBIGUITY_TOLERANCE = 1e-9
DEFAULT_SCAN_CAP = 2**16
_BLOCK_ELEMENTS = 2**21


def composite_symbol_signals(config: SystemConfig) -> ComplexMatrix:
    """
    Σ_u F_Nᴴ P_u F_M x̃_u para todos los vectores de símbolos conjuntos.

    Returns:
        Array (Q^{M·U}, N) en orden lexicográfico (usuario 1 el más externo).
    """
    U, N = config.U, config.N
    per_user = 2**config.symbol_bits
    composite = np.zeros((1,) * U + (N,), dtype=np.complex128)
    for u in range(U):
        table = np.array(
            [
                spread_signal(config, int_to_bits(k, config.symbol_bits), u)
                for k in range(per_user)
            ]
        )
        shape = [1] * U + [N]
        shape[u] = per_user
        composite = composite + table.reshape(shape)
    return composite.reshape(-1, N)


def shared_chirp_signals(
    config: SystemConfig, p_tilde: int, composite: ComplexMatrix | None = None
) -> ComplexMatrix:
    """
    Señales C̃₀(ν₀)·z para ν₀ ∈ {0, …, P̃−1}; índice ν₀·Q^{M·U} + x̃.

    El chirp compartido es el up-chirp de la configuración (el down-chirp si
    la configuración lo fija).
    """
    if composite is None:
        composite = composite_symbol_signals(config)
    direction = (
        ChirpDirection.DOWN
        if config.chirp_direction is ChirpDirection.DOWN
        else ChirpDirection.UP
    )
    diagonals = np.array([chirp_diagonal(config, nu, direction) for nu in range(p_tilde)])
    return (diagonals[:, None, :] * composite[None, :, :]).reshape(-1, config.N)


def first_collision(
    signals: ComplexMatrix, tolerance: float = AMBIGUITY_TOLERANCE
) -> tuple[int, int] | None:
    """
    Primer par (i, j), i < j, con max_n |s_i[n] − s_j[n]| < tolerance.

    El orden es por i y después por j; None si todas las señales son distintas.
    """
    count, N = signals.shape
    block = max(1, _BLOCK_ELEMENTS // max(1, count * N))
    columns = np.arange(count)
    for start in range(0, count, block):
        rows = signals[start : start + block]
        distance = np.abs(rows[:, None, :] - signals[None, :, :]).max(axis=2)
        upper = columns[None, :] > (start + np.arange(rows.shape[0]))[:, None]
        hits = np.argwhere((distance < tolerance) & upper)
        if hits.size:
            i, j = hits[0]
            return start + int(i), int(j)
    return None


def _initial_order(N: int) -> int:
    """Mayor potencia de 2 que no supera N (N si ya lo es)."""
    return 1 << (N.bit_length() - 1)


def optimize_chirp_order(
    config: SystemConfig,
    tolerance: float = AMBIGUITY_TOLERANCE,
    cap: int = DEFAULT_SCAN_CAP,
) -> ChirpOrderResult:
    """
    Busca P★ reduciendo P̃ a la mitad desde N hasta que no haya ambigüedad.

    El campo P de la configuración no interviene: solo se usan N, M, U, Q, el
    mapeo de subportadoras y el chirp.

    Raises:
        InvalidConfigError: Si la forma de onda no usa modulación de chirp.
        SearchSpaceTooLargeError: Si N·Q^{M·U} señales superan `cap`.
        DegenerateConfigError: Si ni siquiera P̃ = 1 está libre de ambigüedad.
    """
    if not config.uses_chirp_modulation:
        raise InvalidConfigError(
            f"{config.waveform} no transmite bits de chirp; no hay orden que optimizar"
        )
    p_tilde = _initial_order(config.N)
    scan_size = p_tilde * 2 ** (config.symbol_bits * config.U)
    if scan_size > cap:
        raise SearchSpaceTooLargeError(
            f"{scan_size} señales compuestas superan el límite del barrido ({cap})"
        )

    composite = composite_symbol_signals(config)
    trace = []
    while p_tilde >= 1:
        pair = first_collision(shared_chirp_signals(config, p_tilde, composite), tolerance)
        trace.append(
            ChirpOrderStep(p_tilde=p_tilde, ambiguous=pair is not None, colliding_pair=pair)
        )
        logger.info(
            "P̃ = %d: %s",
            p_tilde,
            f"ambiguo (par {pair[0]}, {pair[1]})" if pair else "sin ambigüedad",
        )
        if pair is None:
            return ChirpOrderResult(p_star=p_tilde, trace=tuple(trace))
        p_tilde //= 2
    raise DegenerateConfigError(
        "Ningún orden de chirp está libre de ambigüedad: "
        "la cadena de símbolos no es inyectiva"
    )
