"""
Tests para las enumeraciones de dominio.

Verifica que:
- Todos los enums tienen los valores esperados
- Los enums son serializables a string
- Las propiedades de familia de forma de onda son coherentes
"""

import json

import pytest

from chirp_sim.domain import ChirpDirection, WaveformKind


class TestWaveformKind:
    """Tests para el enum WaveformKind."""

    def test_has_all_expected_values(self) -> None:
        """Seis formas de onda: tres DFT-s-OFDM, OFDM y dos AFDM."""
        assert {member.value for member in WaveformKind} == {
            "dft_s_ofdm",
            "chirped_dft_s_ofdm",
            "dft_s_ofdm_cm",
            "ofdm",
            "afdm",
            "afdm_cm",
        }

    @pytest.mark.parametrize(
        ("kind", "expected"),
        [
            (WaveformKind.DFT_S_OFDM_CM, True),
            (WaveformKind.AFDM_CM, True),
            (WaveformKind.CHIRPED_DFT_S_OFDM, False),
            (WaveformKind.AFDM, False),
            (WaveformKind.OFDM, False),
        ],
    )
    def test_carries_chirp_bits(self, kind: WaveformKind, expected: bool) -> None:
        """Solo las variantes CM llevan bits en el chirp."""
        assert kind.carries_chirp_bits is expected

    def test_families_are_disjoint(self) -> None:
        """Ninguna forma de onda es a la vez AFDM y DFT-s-OFDM."""
        for kind in WaveformKind:
            assert not (kind.is_afdm and kind.is_dft_spread)

    def test_serializes_as_string(self) -> None:
        """Se serializa a JSON como su valor en minúsculas."""
        assert json.dumps({"w": WaveformKind.AFDM_CM}) == '{"w": "afdm_cm"}'


class TestChirpDirection:
    """Tests para el enum ChirpDirection."""

    def test_values(self) -> None:
        """Ascendente, descendente y combinado."""
        assert [d.value for d in ChirpDirection] == ["up", "down", "combined"]

    def test_built_from_string(self) -> None:
        """Se construye a partir del texto del JSON."""
        assert ChirpDirection("down") is ChirpDirection.DOWN
