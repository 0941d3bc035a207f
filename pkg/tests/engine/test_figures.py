"""
Tests de reproducción de las curvas de referencia (lentos).

Cada curva se simula solo en una ventana de Eb/N0 con paso de 1 dB alrededor
de su cruce con BER = 10⁻³; el cruce se interpola en log10(BER) entre los dos
puntos que lo rodean.

Se ejecutan con `pytest -m slow`.
"""

from collections.abc import Sequence

import numpy as np
import pytest

from chirp_sim.analysis.bound import bound_curve, sample_profiles
from chirp_sim.domain import BerRow, ExperimentConfig, load_preset
from chirp_sim.engine import run_sweep
from chirp_sim.engine.streams import BOUND_STREAM, auxiliary_rng

pytestmark = pytest.mark.slow

TARGET_BER = 1e-3
CROSSING_MIN_ERRORS = 400


def _crossing_db(points: Sequence[tuple[float, float]], target: float = TARGET_BER) -> float:
    """Eb/N0 (interpolado en log10 BER) en el que la curva baja de `target`."""
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if y0 > target >= y1:
            log0, log1 = np.log10(max(y0, 1e-12)), np.log10(max(y1, 1e-12))
            return float(x0 + (np.log10(target) - log0) / (log1 - log0) * (x1 - x0))
    pytest.fail(f"La curva no cruza {target:g} en [{points[0][0]}, {points[-1][0]}] dB")


def _experiment(name: str, **updates) -> ExperimentConfig:
    experiment = load_preset(name)
    return ExperimentConfig.model_validate(experiment.model_dump() | {"threads": 4, **updates})


def _simulate(name: str, label: str, window: tuple[int, int], **updates) -> tuple[BerRow, ...]:
    """Simula una curva de un preset en la ventana [lo, hi] dB con paso de 1 dB."""
    lo, hi = window
    experiment = _experiment(
        name,
        ebn0_db_points=[float(x) for x in range(lo, hi + 1)],
        min_errors=CROSSING_MIN_ERRORS,
        **updates,
    )
    curve = next(c for c in experiment.curves if c.label == label)
    return run_sweep(experiment.sweep_spec(curve), label=label).rows


def _sim_crossing(name: str, label: str, window: tuple[int, int]) -> float:
    return _crossing_db([(row.ebn0_db, row.ber) for row in _simulate(name, label, window)])


def _profiles(experiment: ExperimentConfig):
    return sample_profiles(
        experiment.channel,
        experiment.bound_doppler_draws,
        auxiliary_rng(experiment.master_seed, BOUND_STREAM),
    )


@pytest.fixture(scope="module")
def fig5_crossings() -> dict[str, float]:
    """Cruces de las tres curvas de fig5 (N=8, M=2, U=4)."""
    windows = {
        "dft_s_ofdm": (14, 22),
        "chirped_dft_s_ofdm": (8, 15),
        "dft_s_ofdm_cm": (8, 15),
    }
    return {label: _sim_crossing("fig5", label, window) for label, window in windows.items()}


@pytest.fixture(scope="module")
def fig6_crossings() -> dict[str, float]:
    """Cruces de fig6 (misma eficiencia espectral, N=4, M=1, U=4)."""
    windows = {
        "dft_s_ofdm": (18, 27),
        "chirped_dft_s_ofdm": (11, 19),
        "dft_s_ofdm_cm": (9, 17),
    }
    return {label: _sim_crossing("fig6", label, window) for label, window in windows.items()}


@pytest.fixture(scope="module")
def fig8_crossings() -> dict[str, float]:
    """Cruces de fig8 (OFDM, AFDM, AFDM-CM y DFT-s-OFDM-CM)."""
    windows = {
        "ofdm": (16, 28),
        "afdm": (11, 19),
        "afdm_cm": (9, 17),
        "dft_s_ofdm_cm": (9, 17),
    }
    return {label: _sim_crossing("fig8", label, window) for label, window in windows.items()}


class TestSameBitsComparison:
    """Comparaciones a igual número de bits de constelación (fig5)."""

    def test_chirp_modulation_matches_chirped_baseline(
        self, fig5_crossings: dict[str, float]
    ) -> None:
        """DFT-s-OFDM-CM y DFT-s-OFDM con chirp quedan a menos de 0.5 dB a BER 10⁻³."""
        gap = fig5_crossings["dft_s_ofdm_cm"] - fig5_crossings["chirped_dft_s_ofdm"]
        assert abs(gap) < 0.5

    def test_chirped_waveforms_beat_dft_s_ofdm(self, fig5_crossings: dict[str, float]) -> None:
        """Ambas formas de onda con chirp ganan al menos 2 dB a DFT-s-OFDM."""
        for label in ("chirped_dft_s_ofdm", "dft_s_ofdm_cm"):
            assert fig5_crossings["dft_s_ofdm"] - fig5_crossings[label] >= 2.0


class TestSameSpectralEfficiency:
    """Comparaciones a igual eficiencia espectral (fig6 y fig8)."""

    def test_dft_s_ofdm_cm_gains(self, fig6_crossings: dict[str, float]) -> None:
        """Unos 2 dB sobre DFT-s-OFDM con chirp y 8 dB sobre DFT-s-OFDM."""
        cm = fig6_crossings["dft_s_ofdm_cm"]
        assert fig6_crossings["chirped_dft_s_ofdm"] - cm == pytest.approx(2.0, abs=1.0)
        assert fig6_crossings["dft_s_ofdm"] - cm == pytest.approx(8.0, abs=1.5)

    def test_afdm_cm_gains(self, fig8_crossings: dict[str, float]) -> None:
        """Unos 2 dB sobre AFDM y 8 dB sobre OFDM."""
        cm = fig8_crossings["afdm_cm"]
        assert fig8_crossings["afdm"] - cm == pytest.approx(2.0, abs=1.0)
        assert fig8_crossings["ofdm"] - cm == pytest.approx(8.0, abs=1.5)

    def test_afdm_cm_matches_dft_s_ofdm_cm(self, fig8_crossings: dict[str, float]) -> None:
        """AFDM-CM y DFT-s-OFDM-CM quedan a menos de 0.5 dB."""
        assert abs(fig8_crossings["afdm_cm"] - fig8_crossings["dft_s_ofdm_cm"]) < 0.5


class TestSingleUserBound:
    """Cota de un usuario frente a la simulación (fig4)."""

    @pytest.fixture(scope="class")
    def simulated(self) -> tuple[BerRow, ...]:
        experiment = _experiment(
            "fig4",
            ebn0_db_points=[8.0, 10.0, 12.0, 14.0, 16.0, 18.0],
            max_trials=2_000_000,
        )
        spec = experiment.sweep_spec(experiment.curves[0])
        return run_sweep(spec).rows

    @pytest.fixture(scope="class")
    def bound(self, simulated: tuple[BerRow, ...]) -> list[tuple[float, float]]:
        experiment = load_preset("fig4")
        system = experiment.resolve_system(experiment.curves[0].system)
        points = [row.ebn0_db for row in simulated]
        return bound_curve(system, points, _profiles(experiment))

    def test_bound_lies_above_simulation(
        self, simulated: tuple[BerRow, ...], bound: list[tuple[float, float]]
    ) -> None:
        """Desde 8 dB la BER simulada no supera la cota más 3σ binomiales."""
        for row, (_, value) in zip(simulated, bound):
            assert row.ber - 3.0 * row.stderr <= value

    def test_bound_to_simulation_ratio_shrinks(
        self, simulated: tuple[BerRow, ...], bound: list[tuple[float, float]]
    ) -> None:
        """El cociente cota/simulación es menor a Eb/N0 alta que a 8 dB."""
        ratios = [value / row.ber for row, (_, value) in zip(simulated, bound) if row.ber > 0]
        assert len(ratios) >= 2
        assert ratios[-1] < ratios[0]

    def test_high_snr_slope_matches_path_count(self, simulated: tuple[BerRow, ...]) -> None:
        """La pendiente de 12 a 18 dB es de 3 ± 0.5 décadas por 10 dB."""
        high = [row for row in simulated if row.ebn0_db >= 12.0 and row.ber > 0]
        assert len(high) >= 3
        slope = np.polyfit([row.ebn0_db for row in high], np.log10([row.ber for row in high]), 1)[0]
        assert -10.0 * slope == pytest.approx(3.0, abs=0.5)


class TestChirpOrderIndependence:
    """P = 2 y P = 4 con un usuario (fig7)."""

    def test_simulated_curves_coincide(self) -> None:
        """Las BER simuladas de P = 2 y P = 4 cruzan 10⁻³ a menos de 0.3 dB."""
        p2 = _sim_crossing("fig7", "dft_s_ofdm_cm_p2", (4, 16))
        p4 = _sim_crossing("fig7", "dft_s_ofdm_cm_p4", (4, 16))
        assert abs(p2 - p4) < 0.3

    def test_bounds_coincide(self) -> None:
        """Las cotas de P = 2 y P = 4 cruzan 10⁻³ a menos de 0.3 dB."""
        experiment = load_preset("fig7")
        profiles = _profiles(experiment)
        points = [x / 2 for x in range(0, 61)]
        crossings = [
            _crossing_db(bound_curve(experiment.resolve_system(curve.system), points, profiles))
            for curve in experiment.curves
        ]
        assert abs(crossings[0] - crossings[1]) < 0.3
