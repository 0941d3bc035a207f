"""
Motor Monte Carlo de BER de ChirpSim.

Cada bloque sortea una realización del canal y bits de información uniformes
para todos los usuarios, modula, aplica el canal y el ruido calibrado, detecta
con el detector ML conjunto y cuenta los errores sobre todos los bits
(sentido, chirp y constelación).

Los bloques se agrupan en lotes de `chunk_size`. Los lotes pueden ejecutarse en
paralelo, pero se acumulan estrictamente en orden y la regla de parada
(min_errors o max_trials) se evalúa al final de cada lote, así que los totales
solo dependen del SweepSpec.

Example:
    >>> from chirp_sim.domain import ChannelParams, SweepSpec, SystemConfig, WaveformKind
    >>> from chirp_sim.engine import run_point
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, P=2, cp_len=2)
    >>> spec = SweepSpec(config=config, channel=ChannelParams(), max_trials=50, noiseless=True)
    >>> run_point(spec, ebn0_db=10.0).bit_errors
    0
"""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from chirp_sim.domain.experiment import PUBLISHABLE_MIN_ERRORS, SweepSpec
from chirp_sim.domain.results import BerCurve, BerRow
from chirp_sim.engine.streams import trial_rng
from chirp_sim.phy.channel import (
    apply_channel,
    channel_matrices,
    noise_variance_for_ebn0,
    sample_channel,
)
from chirp_sim.phy.receiver import CandidateTable, candidate_table, detect_index
from chirp_sim.phy.signal import ComplexSignal
from chirp_sim.phy.waveform import bits_to_int

logger = logging.getLogger(__name__)


def _run_trial(
    table: CandidateTable, spec: SweepSpec, sigma2: float, rng: np.random.Generator
) -> int:
    """
    Simula un bloque y devuelve sus errores de bit.

    La señal recibida sale de `apply_channel`. La decisión usa el mismo núcleo
    que `ml_detect` (tabla de candidatos cacheada y `detect_index`), pero sin
    reconstruir el CandidateMessage decidido en cada bloque: el índice del
    candidato es su etiqueta de bits y los errores son el XOR de los índices.
    """
    config = spec.config
    realization = sample_channel(spec.channel, config.U, rng)
    bits = rng.integers(0, 2, size=config.total_bits)
    width = config.bits_per_user
    tx = [
        ComplexSignal(
            samples=table.user_signals[u][bits_to_int(bits[u * width : (u + 1) * width])]
        )
        for u in range(config.U)
    ]
    r = apply_channel(tx, realization, sigma2, rng)

    received = table.received(channel_matrices(realization, config.N))
    decided, _ = detect_index(r.samples, received)
    return (bits_to_int(bits) ^ decided).bit_count()


def _run_chunk(
    table: CandidateTable,
    spec: SweepSpec,
    sigma2: float,
    point_index: int,
    start: int,
    stop: int,
) -> int:
    """Errores de bit acumulados en los bloques [start, stop) de un punto."""
    return sum(
        _run_trial(table, spec, sigma2, trial_rng(spec.master_seed, point_index, trial))
        for trial in range(start, stop)
    )


def run_point(spec: SweepSpec, ebn0_db: float, point_index: int = 0) -> BerRow:
    """
    Estima la BER en un punto de Eb/N0.

    Args:
        spec: Barrido al que pertenece el punto.
        ebn0_db: Eb/N0 en dB.
        point_index: Posición del punto en el barrido (entra en la semilla).

    Returns:
        BerRow con bloques, errores, BER y error estándar.

    Raises:
        SearchSpaceTooLargeError: Si el detector ML excede su límite de candidatos.
    """
    config = spec.config
    table = candidate_table(config)
    sigma2 = 0.0 if spec.noiseless else noise_variance_for_ebn0(config, ebn0_db)

    trials = 0
    bit_errors = 0
    with ThreadPoolExecutor(max_workers=spec.threads) as pool:
        while bit_errors < spec.min_errors and trials < spec.max_trials:
            bounds = []
            start = trials
            for _ in range(spec.threads):
                if start >= spec.max_trials:
                    break
                stop = min(start + spec.chunk_size, spec.max_trials)
                bounds.append((start, stop))
                start = stop
            futures = [
                pool.submit(_run_chunk, table, spec, sigma2, point_index, lo, hi)
                for lo, hi in bounds
            ]
            for (lo, hi), future in zip(bounds, futures):
                chunk_errors = future.result()
                trials = hi
                bit_errors += chunk_errors
                logger.debug("Lote [%d, %d): %d errores", lo, hi, chunk_errors)
                if bit_errors >= spec.min_errors:
                    break
            for future in futures:
                future.cancel()

    row = BerRow.from_counts(
        ebn0_db=ebn0_db,
        trials=trials,
        bit_errors=bit_errors,
        bits_per_trial=config.total_bits,
    )
    logger.info(
        "%s Eb/N0 = %.1f dB: %d bloques, %d errores, BER = %.3e",
        config.waveform,
        ebn0_db,
        row.trials,
        row.bit_errors,
        row.ber,
    )
    return row


def run_sweep(spec: SweepSpec, label: str = "") -> BerCurve:
    """Recorre todos los puntos de Eb/N0 en orden."""
    if not spec.publishable and not spec.noiseless:
        logger.warning(
            "min_errors = %d: los puntos cerrarán con menos de %d errores",
            spec.min_errors,
            PUBLISHABLE_MIN_ERRORS,
        )
    rows = tuple(
        run_point(spec, ebn0_db, point_index)
        for point_index, ebn0_db in enumerate(spec.ebn0_db_points)
    )
    return BerCurve(label=label or str(spec.config.waveform), rows=rows)
