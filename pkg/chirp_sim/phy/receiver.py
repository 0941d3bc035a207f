"""
Detector de máxima verosimilitud conjunto de ChirpSim.

El detector enumera todas las hipótesis conjuntas (índice de chirp, sentido y
símbolos de cada usuario), reconstruye Σ_u H_u s_u para cada una y elige la de
menor residuo ‖r − Σ_u H_u s_u‖₂. Los empates se resuelven a favor del menor
índice de candidato.

La etiqueta de bits del candidato k de un usuario es la representación binaria
natural de k, de modo que la enumeración lexicográfica (usuario 1 el más
externo; sentido, después ν y después los símbolos) coincide con el orden
numérico de los bits concatenados.

Example:
    >>> from chirp_sim.domain import SystemConfig, WaveformKind
    >>> from chirp_sim.phy.receiver import enumerate_candidates
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=1, Q=2, P=2)
    >>> len(enumerate_candidates(config))
    8
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from chirp_sim.domain.channel import ChannelRealization
from chirp_sim.domain.errors import InvalidComparisonError, SearchSpaceTooLargeError
from chirp_sim.domain.message import CandidateMessage, UserHypothesis
from chirp_sim.domain.results import DetectionResult
from chirp_sim.domain.system_config import SystemConfig
from chirp_sim.phy.channel import channel_matrices
from chirp_sim.phy.numerics import ComplexMatrix, ComplexVector
from chirp_sim.phy.signal import ComplexSignal
from chirp_sim.phy.waveform import (
    int_to_bits,
    message_chirp_index,
    message_direction,
    modulate_message,
    split_bits,
    symbol_indices,
)

logger = logging.getLogger(__name__)

DEFAULT_CANDIDATE_CAP = 2**24


def candidate_count(config: SystemConfig) -> int:
    """Número de hipótesis conjuntas: (P·Q^M)^U, por 2^U en modo combinado."""
    return config.candidates_per_user**config.U


def check_search_space(config: SystemConfig, cap: int = DEFAULT_CANDIDATE_CAP) -> int:
    """
    Comprueba que el espacio de búsqueda cabe en el límite.

    Raises:
        SearchSpaceTooLargeError: Si el número de candidatos supera `cap`.
    """
    count = candidate_count(config)
    if count > cap:
        raise SearchSpaceTooLargeError(
            f"{count} candidatos superan el límite del detector ML ({cap})"
        )
    return count


def user_hypothesis(config: SystemConfig, k: int) -> UserHypothesis:
    """Hipótesis del candidato k (índice por usuario) de un usuario."""
    message = split_bits(int_to_bits(k, config.bits_per_user), config)
    return UserHypothesis(
        nu=message_chirp_index(config, message),
        symbol_indices=symbol_indices(message.symbol_bits, config.Q),
        direction=message_direction(config, message) if config.direction_bits else None,
    )


def candidate_from_index(config: SystemConfig, index: int) -> CandidateMessage:
    """Reconstruye el candidato conjunto a partir de su índice lexicográfico."""
    per_user = config.candidates_per_user
    users = []
    remainder = index
    for _ in range(config.U):
        remainder, k = divmod(remainder, per_user)
        users.append(user_hypothesis(config, k))
    return CandidateMessage(
        users=tuple(reversed(users)),
        bit_label=int_to_bits(index, config.total_bits),
        candidate_index=index,
    )


def enumerate_candidates(
    config: SystemConfig, cap: int = DEFAULT_CANDIDATE_CAP
) -> list[CandidateMessage]:
    """
    Todas las hipótesis conjuntas en orden lexicográfico.

    Raises:
        SearchSpaceTooLargeError: Si el número de candidatos supera `cap`.
    """
    count = check_search_space(config, cap)
    return [candidate_from_index(config, index) for index in range(count)]


def count_bit_errors(tx: CandidateMessage, rx: CandidateMessage) -> int:
    """
    Distancia de Hamming entre las etiquetas de bits de dos candidatos.

    Raises:
        InvalidComparisonError: Si las etiquetas tienen distinta longitud.
    """
    if len(tx.bit_label) != len(rx.bit_label):
        raise InvalidComparisonError(
            f"Etiquetas de {len(tx.bit_label)} y {len(rx.bit_label)} bits"
        )
    return sum(a != b for a, b in zip(tx.bit_label, rx.bit_label))


@dataclass(frozen=True)
class CandidateTable:
    """
    Señales transmitidas precalculadas de todos los candidatos de cada usuario.

    Attributes:
        config: Configuración del sistema.
        user_signals: Por usuario, array (K, N) con la señal del candidato k.
    """

    config: SystemConfig
    user_signals: tuple[np.ndarray, ...]

    @property
    def per_user(self) -> int:
        """Candidatos por usuario K."""
        return self.config.candidates_per_user

    def received(self, matrices: Sequence[ComplexMatrix]) -> ComplexMatrix:
        """
        Señales recibidas sin ruido Σ_u H_u s_u de todos los candidatos conjuntos.

        Returns:
            Array (K^U, N) en orden lexicográfico (usuario 1 el más externo).
        """
        U = self.config.U
        N = self.config.N
        composite = np.zeros((1,) * U + (N,), dtype=np.complex128)
        for u, (signals, h) in enumerate(zip(self.user_signals, matrices)):
            shape = [1] * U + [N]
            shape[u] = self.per_user
            composite = composite + (signals @ h.T).reshape(shape)
        return composite.reshape(-1, N)


@lru_cache(maxsize=32)
def candidate_table(
    config: SystemConfig, cap: int = DEFAULT_CANDIDATE_CAP
) -> CandidateTable:
    """
    Construye (y cachea por configuración) la tabla de señales candidatas.

    Raises:
        SearchSpaceTooLargeError: Si el número de candidatos supera `cap`.
    """
    check_search_space(config, cap)
    signals = []
    for u in range(config.U):
        rows = []
        for k in range(config.candidates_per_user):
            message = split_bits(int_to_bits(k, config.bits_per_user), config)
            rows.append(modulate_message(config, message, u))
        table = np.array(rows, dtype=np.complex128)
        table.flags.writeable = False
        signals.append(table)
    logger.debug(
        "Tabla de candidatos: %d por usuario, %d usuarios",
        config.candidates_per_user,
        config.U,
    )
    return CandidateTable(config=config, user_signals=tuple(signals))


def detect_index(r: ComplexVector, received: ComplexMatrix) -> tuple[int, float]:
    """Índice y métrica del candidato de menor residuo (empates: menor índice)."""
    metrics = np.linalg.norm(received - r, axis=1)
    index = int(np.argmin(metrics))
    return index, float(metrics[index])


def ml_detect(
    r: ComplexSignal,
    realization: ChannelRealization,
    config: SystemConfig,
    transmitted: CandidateMessage | None = None,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> DetectionResult:
    """
    Detección ML conjunta con conocimiento perfecto del canal.

    Args:
        r: Señal recibida (tras eliminar el CP).
        realization: Realización verdadera del canal.
        config: Configuración del sistema.
        transmitted: Candidato transmitido, para contar errores de bit.
        cap: Límite del espacio de búsqueda.

    Returns:
        DetectionResult con el candidato decidido y su métrica.

    Raises:
        SearchSpaceTooLargeError: Si el número de candidatos supera `cap`.
    """
    table = candidate_table(config, cap)
    received = table.received(channel_matrices(realization, config.N))
    index, metric = detect_index(r.samples, received)
    decided = candidate_from_index(config, index)
    errors = count_bit_errors(transmitted, decided) if transmitted is not None else 0
    return DetectionResult(
        decided=decided,
        metric=metric,
        bit_errors=errors,
        total_bits=config.total_bits,
    )
