"""
Tests de la aplicación de línea de comandos.

Verifica los ficheros producidos por cada comando, la reproducibilidad de la
salida y los códigos de salida ante errores de configuración o de recursos.
"""

import csv
import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from chirp_sim.cli import app
from chirp_sim.cli.app import EXIT_CONFIG_ERROR, EXIT_RESOURCE_CAP, resolve_experiment
from chirp_sim.cli.reports import BER_HEADER
from chirp_sim.domain.errors import ChirpSimError

runner = CliRunner()


def _write_config(folder: Path, **overrides) -> Path:
    document = {
        "name": "mini",
        "curves": [
            {
                "label": "cm",
                "system": {"waveform": "dft_s_ofdm_cm", "N": 8, "M": 2, "U": 1, "Q": 2, "P": 2},
            }
        ],
        "ebn0_db_points": [0.0, 10.0],
        "max_trials": 32,
        "chunk_size": 16,
        "master_seed": 7,
    }
    document.update(overrides)
    path = folder / "mini.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


class TestResolveExperiment:
    """Tests de la carga del experimento y los overrides."""

    def test_overrides_are_applied(self, tmp_path: Path) -> None:
        """--seed, --threads, --max-trials y --out sustituyen al documento."""
        experiment = resolve_experiment(
            None, "fig5", out=tmp_path, seed=1, threads=2, max_trials=10, min_errors=3
        )
        assert experiment.master_seed == 1
        assert experiment.threads == 2
        assert experiment.max_trials == 10
        assert experiment.min_errors == 3
        assert experiment.output_dir == str(tmp_path)

    def test_requires_exactly_one_source(self, tmp_path: Path) -> None:
        """Ni ninguna ni las dos fuentes."""
        with pytest.raises(ChirpSimError):
            resolve_experiment(None, None)
        with pytest.raises(ChirpSimError):
            resolve_experiment(_write_config(tmp_path), "fig5")


class TestSimulateCommand:
    """Tests del comando simulate."""

    def test_writes_one_csv_per_curve(self, tmp_path: Path) -> None:
        """Un CSV con cabecera y una fila por punto de Eb/N0."""
        config = _write_config(tmp_path)
        result = runner.invoke(app, ["simulate", "--config", str(config), "--out", str(tmp_path)])

        assert result.exit_code == 0, result.output
        with (tmp_path / "mini_cm.csv").open(newline="") as handle:
            rows = list(csv.reader(handle))
        assert tuple(rows[0]) == BER_HEADER
        assert [row[0] for row in rows[1:]] == ["cm", "cm"]
        assert [float(row[1]) for row in rows[1:]] == [0.0, 10.0]
        assert all(int(row[2]) == 32 for row in rows[1:])

    def test_output_is_reproducible(self, tmp_path: Path) -> None:
        """Dos ejecuciones con la misma semilla producen ficheros idénticos."""
        config = _write_config(tmp_path)
        first = tmp_path / "a"
        second = tmp_path / "b"
        runner.invoke(app, ["simulate", "--config", str(config), "--out", str(first)])
        runner.invoke(
            app,
            ["simulate", "--config", str(config), "--out", str(second), "--threads", "2"],
        )
        assert (first / "mini_cm.csv").read_bytes() == (second / "mini_cm.csv").read_bytes()

    def test_empty_grid_writes_header_only(self, tmp_path: Path) -> None:
        """Sin puntos de Eb/N0 el CSV solo tiene la cabecera."""
        config = _write_config(tmp_path, ebn0_db_points=[])
        result = runner.invoke(app, ["simulate", "--config", str(config), "--out", str(tmp_path)])

        assert result.exit_code == 0
        assert (tmp_path / "mini_cm.csv").read_text() == ",".join(BER_HEADER) + "\n"

    def test_invalid_config_exits_2(self, tmp_path: Path) -> None:
        """Un documento inválido termina con el código de error de configuración."""
        config = _write_config(
            tmp_path,
            curves=[{"label": "bad", "system": {"waveform": "dft_s_ofdm_cm", "N": 8, "M": 3}}],
        )
        result = runner.invoke(app, ["simulate", "--config", str(config)])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_missing_file_exits_2(self, tmp_path: Path) -> None:
        """Un fichero inexistente es un error de configuración."""
        result = runner.invoke(app, ["simulate", "--config", str(tmp_path / "nope.json")])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_both_sources_exit_2(self, tmp_path: Path) -> None:
        """--config y --preset a la vez no se admiten."""
        config = _write_config(tmp_path)
        result = runner.invoke(app, ["simulate", "--config", str(config), "--preset", "fig5"])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_unknown_preset_exits_2(self) -> None:
        """Un preset desconocido es un error de configuración."""
        result = runner.invoke(app, ["simulate", "--preset", "fig99"])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_search_space_cap_exits_3(self, tmp_path: Path) -> None:
        """Un detector ML con demasiados candidatos termina con el código 3."""
        config = _write_config(
            tmp_path,
            curves=[
                {
                    "label": "huge",
                    "system": {
                        "waveform": "dft_s_ofdm_cm",
                        "N": 16,
                        "M": 4,
                        "U": 4,
                        "Q": 4,
                        "P": 2,
                    },
                }
            ],
            ebn0_db_points=[0.0],
        )
        result = runner.invoke(app, ["simulate", "--config", str(config), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_RESOURCE_CAP


class TestBoundCommand:
    """Tests del comando bound."""

    def test_fig4_full_diversity(self, tmp_path: Path) -> None:
        """El preset de la cota alcanza G_D = 3 y escribe CSV e informe."""
        result = runner.invoke(app, ["bound", "--preset", "fig4", "--out", str(tmp_path)])

        assert result.exit_code == 0, result.output
        assert "diversity_order: 3" in result.stdout
        report = (tmp_path / "fig4_dft_s_ofdm_cm_u1_bound.txt").read_text()
        assert "pairs: 56" in report
        assert "expected=0.125" in report
        with (tmp_path / "fig4_dft_s_ofdm_cm_u1_bound.csv").open(newline="") as handle:
            assert len(list(csv.reader(handle))) == 12

    def test_multi_user_curves_are_skipped(self, tmp_path: Path) -> None:
        """La curva de cuatro usuarios de fig4 no produce cota."""
        result = runner.invoke(app, ["bound", "--preset", "fig4", "--out", str(tmp_path)])

        assert result.exit_code == 0, result.output
        assert sorted(p.name for p in tmp_path.iterdir()) == [
            "fig4_dft_s_ofdm_cm_u1_bound.csv",
            "fig4_dft_s_ofdm_cm_u1_bound.txt",
        ]

    def test_bound_with_simulated_csv(self, tmp_path: Path) -> None:
        """Con --simulated el informe incluye el cociente cota/simulación."""
        config = _write_config(tmp_path, max_trials=64)
        runner.invoke(app, ["simulate", "--config", str(config), "--out", str(tmp_path)])
        result = runner.invoke(
            app,
            [
                "bound",
                "--config",
                str(config),
                "--out",
                str(tmp_path),
                "--simulated",
                str(tmp_path / "mini_cm.csv"),
            ],
        )
        assert result.exit_code == 0, result.output
        assert "bound_over_sim: ebn0_db=0" in (tmp_path / "mini_cm_bound.txt").read_text()

    def test_multi_user_preset_exits_2(self, tmp_path: Path) -> None:
        """Sin ninguna curva de un usuario (fig5, U = 4) es un error de configuración."""
        result = runner.invoke(app, ["bound", "--preset", "fig5", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_CONFIG_ERROR


class TestOptimizeCommand:
    """Tests del comando optimize-p."""

    def test_single_user(self, tmp_path: Path) -> None:
        """Un usuario en N=8, M=2: P★ = 4."""
        config = _write_config(tmp_path)
        result = runner.invoke(app, ["optimize-p", "--config", str(config), "--out", str(tmp_path)])

        assert result.exit_code == 0, result.output
        assert "P_star: 4" in result.stdout
        assert "P_star: 4" in (tmp_path / "mini_cm_pstar.txt").read_text()

    def test_four_users_skips_baselines(self, tmp_path: Path) -> None:
        """fig5: solo la curva con chirp se optimiza y P★ = 2."""
        result = runner.invoke(app, ["optimize-p", "--preset", "fig5", "--out", str(tmp_path)])

        assert result.exit_code == 0, result.output
        assert "P_star: 2" in result.stdout
        assert sorted(p.name for p in tmp_path.iterdir()) == ["fig5_dft_s_ofdm_cm_pstar.txt"]

    def test_no_chirp_curves_exits_2(self, tmp_path: Path) -> None:
        """Sin curvas con modulación de chirp no hay nada que optimizar."""
        result = runner.invoke(app, ["optimize-p", "--preset", "fig3", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_CONFIG_ERROR


class TestPaprCommand:
    """Tests del comando papr."""

    def test_table1_constant_envelope(self, tmp_path: Path) -> None:
        """DFT-s-OFDM-CM tiene PAPR 0 dB para todos los índices de chirp."""
        result = runner.invoke(app, ["papr", "--preset", "table1", "--out", str(tmp_path)])

        assert result.exit_code == 0, result.output
        with (tmp_path / "table1_papr.csv").open(newline="") as handle:
            rows = list(csv.DictReader(handle))
        by_index = [row for row in rows if row["nu"] != ""]
        assert len(by_index) == 8
        assert all(abs(float(row["max_papr_db"])) < 1e-6 for row in rows)
