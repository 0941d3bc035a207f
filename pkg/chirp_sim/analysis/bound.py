"""
Cota superior de BER y orden de diversidad de un usuario.

Para cada candidato a se construye la matriz efectiva E(a), cuya columna l es
D_l Π^l s(a), de modo que la señal recibida sin ruido es E(a)·h. Cada par
(a, â) aporta una probabilidad de error por pares aproximada a partir de los
autovalores de Θ(a, â) = (E(a) − E(â))ᴴ(E(a) − E(â)), y la cota suma esos
términos ponderados por la distancia de Hamming.

Los autovalores no dependen de γ, así que se calculan una sola vez por
configuración y perfil (`pair_spectra`) y se reutilizan en toda la curva.

Example:
    >>> from chirp_sim.domain import DelayDopplerProfile, SystemConfig, WaveformKind
    >>> from chirp_sim.analysis.bound import diversity_order
    >>> config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=1, Q=2, P=2)
    >>> profile = DelayDopplerProfile(dopplers=(0.05, -0.1, 0.12), delays=(0, 1, 2))
    >>> diversity_order(config, profile)
    3
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from chirp_sim.domain.channel import ChannelParams, DelayDopplerProfile
from chirp_sim.domain.errors import InvalidConfigError, InvalidDelayError, InvalidPairError
from chirp_sim.domain.message import CandidateMessage
from chirp_sim.domain.results import BoundReport, PairTerm
from chirp_sim.domain.system_config import SystemConfig
from chirp_sim.phy.channel import noise_variance_for_ebn0, sample_channel
from chirp_sim.phy.numerics import ComplexMatrix, hermitian_eigen
from chirp_sim.phy.receiver import candidate_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSpectrum:
    """Rango, autovalores no nulos y distancia de Hamming de un par no ordenado."""

    a_index: int
    a_hat_index: int
    rank: int
    eigenvalues: tuple[float, ...]
    hamming: int


def _require_single_user(config: SystemConfig) -> None:
    if config.U != 1:
        raise InvalidConfigError(
            f"La cota es de un solo usuario; la configuración tiene U = {config.U}"
        )


def normalization_weight(config: SystemConfig) -> float:
    """Peso f = Q^M·M·log₂Q + P·log₂P."""
    return config.Q**config.M * config.M * math.log2(config.Q) + config.P * math.log2(
        config.P
    )


def _effective_matrices(config: SystemConfig, profile: DelayDopplerProfile) -> np.ndarray:
    """E(a) de todos los candidatos, array (K, N, L)."""
    signals = candidate_table(config).user_signals[0]
    n = np.arange(config.N)
    columns = []
    for doppler, delay in zip(profile.dopplers, profile.delays):
        if delay >= config.N:
            raise InvalidDelayError(f"Retardo {delay} no cabe en un bloque de {config.N}")
        phase = np.exp(2j * np.pi * doppler * n / config.N)
        columns.append(phase * np.roll(signals, delay, axis=1))
    return np.stack(columns, axis=-1)


def effective_matrix(
    a: CandidateMessage, profile: DelayDopplerProfile, config: SystemConfig
) -> ComplexMatrix:
    """
    Matriz efectiva E(a) (N×L) de un candidato de un usuario.

    Raises:
        InvalidConfigError: Si la configuración o el candidato no son de un usuario.
    """
    _require_single_user(config)
    if len(a.users) != 1:
        raise InvalidConfigError("El candidato debe ser de un solo usuario")
    return _effective_matrices(config, profile)[a.candidate_index]


def pep_from_eigenvalues(eigenvalues: Sequence[float], gamma: float, L: int) -> float:
    """
    Probabilidad de error por pares aproximada.

    (1/12)·[(∏λ)^{1/R}·γ/(4L)]^{−R} + (1/4)·[(∏λ)^{1/R}·γ/(3L)]^{−R}; vale 1
    para un par indistinguible (R = 0).
    """
    R = len(eigenvalues)
    if R == 0:
        return 1.0
    geometric = math.exp(sum(math.log(value) for value in eigenvalues) / R)
    return (geometric * gamma / (4 * L)) ** (-R) / 12.0 + (
        geometric * gamma / (3 * L)
    ) ** (-R) / 4.0


def _spectrum(difference: ComplexMatrix) -> tuple[int, tuple[float, ...]]:
    theta = difference.conj().T @ difference
    eigen = hermitian_eigen(theta)
    return eigen.rank, eigen.nonzero


@lru_cache(maxsize=64)
def pair_spectra(
    config: SystemConfig, profile: DelayDopplerProfile
) -> tuple[PairSpectrum, ...]:
    """
    Espectro de Θ para todos los pares no ordenados de candidatos.

    Θ(a, â) y Θ(â, a) coinciden, así que cada par se calcula una vez.

    Raises:
        InvalidConfigError: Si la configuración no es de un usuario.
    """
    _require_single_user(config)
    matrices = _effective_matrices(config, profile)
    spectra = []
    for a in range(matrices.shape[0]):
        for a_hat in range(a + 1, matrices.shape[0]):
            rank, eigenvalues = _spectrum(matrices[a] - matrices[a_hat])
            spectra.append(
                PairSpectrum(
                    a_index=a,
                    a_hat_index=a_hat,
                    rank=rank,
                    eigenvalues=eigenvalues,
                    hamming=(a ^ a_hat).bit_count(),
                )
            )
    degenerate = sum(1 for item in spectra if item.rank == 0)
    if degenerate:
        logger.warning(
            "%d pares indistinguibles (R = 0); P = %d supera el orden sin ambigüedad",
            degenerate,
            config.P,
        )
    return tuple(spectra)


def pep_pair(
    a: CandidateMessage,
    a_hat: CandidateMessage,
    gamma: float,
    profile: DelayDopplerProfile,
    config: SystemConfig,
) -> PairTerm:
    """
    Término de la cota del par ordenado (a → â).

    Raises:
        InvalidPairError: Si a y â son el mismo candidato.
        InvalidConfigError: Si la configuración no es de un usuario.
    """
    if a.candidate_index == a_hat.candidate_index:
        raise InvalidPairError(f"Par degenerado: a = â = {a.candidate_index}")
    difference = effective_matrix(a, profile, config) - effective_matrix(
        a_hat, profile, config
    )
    rank, eigenvalues = _spectrum(difference)
    return PairTerm(
        a_index=a.candidate_index,
        a_hat_index=a_hat.candidate_index,
        rank=rank,
        eigenvalues=eigenvalues,
        pep=pep_from_eigenvalues(eigenvalues, gamma, profile.L),
        hamming=sum(x != y for x, y in zip(a.bit_label, a_hat.bit_label)),
    )


def ber_upper_bound(
    config: SystemConfig, gamma: float, profile: DelayDopplerProfile
) -> BoundReport:
    """
    Cota P_e ≤ (1/f)·Σ_a Σ_{â≠a} P_E(a → â)·d(a, â) para γ = 1/σ².

    Raises:
        InvalidConfigError: Si la configuración no es de un usuario.
    """
    terms = []
    for item in pair_spectra(config, profile):
        pep = pep_from_eigenvalues(item.eigenvalues, gamma, profile.L)
        for a, a_hat in ((item.a_index, item.a_hat_index), (item.a_hat_index, item.a_index)):
            terms.append(
                PairTerm(
                    a_index=a,
                    a_hat_index=a_hat,
                    rank=item.rank,
                    eigenvalues=item.eigenvalues,
                    pep=pep,
                    hamming=item.hamming,
                )
            )
    f = normalization_weight(config)
    terms.sort(key=lambda term: (term.a_index, term.a_hat_index))
    return BoundReport(
        gamma=gamma,
        pair_terms=tuple(terms),
        f=f,
        p_e=sum(term.pep * term.hamming for term in terms) / f,
        diversity_order=min((term.rank for term in terms), default=0),
    )


def bound_value(config: SystemConfig, gamma: float, profile: DelayDopplerProfile) -> float:
    """Valor de la cota sin construir la lista de términos."""
    total = sum(
        2 * pep_from_eigenvalues(item.eigenvalues, gamma, profile.L) * item.hamming
        for item in pair_spectra(config, profile)
    )
    return total / normalization_weight(config)


def diversity_order(config: SystemConfig, profile: DelayDopplerProfile) -> int:
    """
    Orden de diversidad G_D: rango mínimo de Θ sobre todos los pares.

    Raises:
        InvalidConfigError: Si la configuración no es de un usuario.
    """
    return min((item.rank for item in pair_spectra(config, profile)), default=0)


def sample_profiles(
    params: ChannelParams, draws: int, rng: np.random.Generator
) -> list[DelayDopplerProfile]:
    """Perfiles retardo-Doppler de un usuario muestreados del canal."""
    return [
        DelayDopplerProfile.from_paths(sample_channel(params, 1, rng).users[0])
        for _ in range(draws)
    ]


def averaged_bound(
    config: SystemConfig, gamma: float, profiles: Sequence[DelayDopplerProfile]
) -> float:
    """Media de la cota sobre varios perfiles (un solo perfil = sin promediar)."""
    if not profiles:
        raise InvalidConfigError("Se necesita al menos un perfil retardo-Doppler")
    return float(np.mean([bound_value(config, gamma, profile) for profile in profiles]))


def bound_curve(
    config: SystemConfig,
    ebn0_db_points: Sequence[float],
    profiles: Sequence[DelayDopplerProfile],
) -> list[tuple[float, float]]:
    """Pares (Eb/N0 en dB, cota) con γ = 1/σ² calibrado como en la simulación."""
    curve = []
    for ebn0_db in ebn0_db_points:
        gamma = 1.0 / noise_variance_for_ebn0(config, ebn0_db)
        curve.append((float(ebn0_db), averaged_bound(config, gamma, profiles)))
    return curve


def gamma_doubling_ratio(
    config: SystemConfig, gamma: float, profiles: Sequence[DelayDopplerProfile]
) -> float:
    """Cociente cota(2γ)/cota(γ); tiende a 2^{−G_D} cuando γ crece."""
    return averaged_bound(config, 2.0 * gamma, profiles) / averaged_bound(
        config, gamma, profiles
    )
