"""
Tests para la cota superior de BER y el orden de diversidad.

Verifica:
- Matriz efectiva E(a) frente a la matriz del canal
- PEP a partir de los autovalores
- Peso de normalización, pares ordenados y orden de diversidad
- Pendiente de la cota al duplicar γ
"""

import numpy as np
import pytest

from chirp_sim.analysis.bound import (
    averaged_bound,
    ber_upper_bound,
    bound_curve,
    bound_value,
    diversity_order,
    effective_matrix,
    gamma_doubling_ratio,
    normalization_weight,
    pep_from_eigenvalues,
    pep_pair,
    sample_profiles,
)
from chirp_sim.domain import (
    ChannelParams,
    DelayDopplerProfile,
    PathState,
    SystemConfig,
    WaveformKind,
)
from chirp_sim.domain.errors import InvalidConfigError, InvalidDelayError, InvalidPairError
from chirp_sim.phy.channel import channel_matrix
from chirp_sim.phy.receiver import candidate_from_index, candidate_table


@pytest.fixture
def config() -> SystemConfig:
    """Un usuario, N=8, M=2, BPSK y P=2 (8 candidatos)."""
    return SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=1, Q=2, P=2)


@pytest.fixture
def profile() -> DelayDopplerProfile:
    """Tres caminos con retardos 0, 1, 2 y Dopplers distintos y no nulos."""
    return DelayDopplerProfile(dopplers=(0.05, -0.1, 0.12), delays=(0, 1, 2))


class TestEffectiveMatrix:
    """Tests de la matriz efectiva E(a)."""

    def test_effective_matrix_times_gains_is_channel_output(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """E(a)·h coincide con H·s(a) para cualquier vector de ganancias."""
        gains = np.array([0.3 + 0.4j, -0.7j, 0.2])
        paths = [
            PathState(gain=complex(g), doppler=v, delay=d)
            for g, v, d in zip(gains, profile.dopplers, profile.delays)
        ]
        a = candidate_from_index(config, 5)
        s = candidate_table(config).user_signals[0][5]

        e = effective_matrix(a, profile, config)

        assert e.shape == (8, 3)
        assert np.allclose(e @ gains, channel_matrix(paths, 8) @ s)

    def test_multi_user_config_raises(self, profile: DelayDopplerProfile) -> None:
        """La matriz efectiva solo se define para un usuario."""
        multi = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=2, Q=2, P=2)
        with pytest.raises(InvalidConfigError):
            effective_matrix(candidate_from_index(multi, 0), profile, multi)

    def test_delay_beyond_block_raises(self, config: SystemConfig) -> None:
        """Un retardo ≥ N se rechaza."""
        bad = DelayDopplerProfile(dopplers=(0.0, 0.0), delays=(0, 8))
        with pytest.raises(InvalidDelayError):
            diversity_order(config, bad)


class TestPairwiseErrorProbability:
    """Tests de la PEP aproximada."""

    def test_single_eigenvalue(self) -> None:
        """λ = 1, γ = 10, L = 1: 0.4/12 + 0.3/4 = 13/120."""
        assert pep_from_eigenvalues([1.0], 10.0, 1) == pytest.approx(13 / 120)

    def test_indistinguishable_pair_is_one(self) -> None:
        """Sin autovalores no nulos (R = 0) la PEP vale 1."""
        assert pep_from_eigenvalues([], 100.0, 3) == 1.0

    def test_decays_as_gamma_to_the_minus_rank(self) -> None:
        """Duplicar γ divide la PEP por 2^R."""
        eigenvalues = [2.0, 1.0, 0.5]
        ratio = pep_from_eigenvalues(eigenvalues, 200.0, 3) / pep_from_eigenvalues(
            eigenvalues, 100.0, 3
        )
        assert ratio == pytest.approx(2.0**-3)

    def test_pep_pair_matches_report(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """El término de un par coincide con el de la cota completa."""
        a = candidate_from_index(config, 1)
        a_hat = candidate_from_index(config, 6)
        term = pep_pair(a, a_hat, 50.0, profile, config)
        report = ber_upper_bound(config, 50.0, profile)
        match = next(
            t for t in report.pair_terms if (t.a_index, t.a_hat_index) == (1, 6)
        )

        assert term.hamming == 3
        assert term.rank == match.rank
        assert term.pep == pytest.approx(match.pep)

    def test_same_candidate_raises(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """a = â no es un par de error."""
        a = candidate_from_index(config, 3)
        with pytest.raises(InvalidPairError):
            pep_pair(a, a, 10.0, profile, config)


class TestBerUpperBound:
    """Tests de la cota de BER."""

    def test_normalization_weight(self, config: SystemConfig) -> None:
        """f = Q^M·M·log₂Q + P·log₂P = 4·2 + 2 = 10."""
        assert normalization_weight(config) == pytest.approx(10.0)

    def test_all_ordered_pairs(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """Hay K·(K−1) pares ordenados, ordenados por (a, â)."""
        report = ber_upper_bound(config, 10.0, profile)
        keys = [(t.a_index, t.a_hat_index) for t in report.pair_terms]

        assert len(keys) == 56
        assert keys == sorted(keys)
        assert report.f == pytest.approx(10.0)
        assert report.p_e == pytest.approx(bound_value(config, 10.0, profile))

    def test_full_diversity_with_distinct_dopplers(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """Con Dopplers distintos y no nulos se alcanza G_D = L = 3."""
        assert diversity_order(config, profile) == 3
        report = ber_upper_bound(config, 10.0, profile)
        assert report.diversity_order == 3
        assert report.degenerate_pairs == 0

    def test_bound_decreases_with_gamma(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """La cota decrece al aumentar γ."""
        values = [bound_value(config, gamma, profile) for gamma in (1.0, 10.0, 100.0)]
        assert values[0] > values[1] > values[2]

    def test_doubling_gamma_slope(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """Con todos los pares de rango 3 el cociente es exactamente 2^−3."""
        ratio = gamma_doubling_ratio(config, 100.0, [profile])
        assert ratio == pytest.approx(0.125)

    def test_ambiguous_chirp_order_gives_degenerate_pairs(
        self, profile: DelayDopplerProfile
    ) -> None:
        """Con P = 8 > P★ hay pares indistinguibles y G_D = 0."""
        config = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=1, Q=2, P=8)
        report = ber_upper_bound(config, 10.0, profile)

        assert report.degenerate_pairs > 0
        assert report.diversity_order == 0

    def test_multi_user_raises(self, profile: DelayDopplerProfile) -> None:
        """La cota es de un solo usuario."""
        multi = SystemConfig(waveform=WaveformKind.DFT_S_OFDM_CM, N=8, M=2, U=4, Q=2, P=2)
        with pytest.raises(InvalidConfigError):
            ber_upper_bound(multi, 10.0, profile)


class TestAveragedBound:
    """Tests de la cota promediada sobre perfiles aleatorios."""

    def test_sample_profiles(self) -> None:
        """Se obtienen `draws` perfiles de L caminos."""
        profiles = sample_profiles(ChannelParams(L=3), 5, np.random.default_rng(0))
        assert len(profiles) == 5
        assert all(p.L == 3 and p.delays == (0, 1, 2) for p in profiles)

    def test_single_profile_average_is_the_bound(
        self, config: SystemConfig, profile: DelayDopplerProfile
    ) -> None:
        """Promediar un solo perfil no cambia la cota."""
        assert averaged_bound(config, 10.0, [profile]) == pytest.approx(
            bound_value(config, 10.0, profile)
        )

    def test_no_profiles_raises(self, config: SystemConfig) -> None:
        """Se necesita al menos un perfil."""
        with pytest.raises(InvalidConfigError):
            averaged_bound(config, 10.0, [])

    def test_bound_curve(self, config: SystemConfig, profile: DelayDopplerProfile) -> None:
        """Un valor por punto de Eb/N0, decreciente."""
        curve = bound_curve(config, [0.0, 10.0, 20.0], [profile])
        assert [ebn0 for ebn0, _ in curve] == [0.0, 10.0, 20.0]
        assert curve[0][1] > curve[1][1] > curve[2][1]
