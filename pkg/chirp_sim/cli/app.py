"""
Aplicación de línea de comandos de ChirpSim.

Comandos:
    simulate     Curvas de BER Monte Carlo (un CSV por curva).
    bound        Cota superior de BER de un usuario y orden de diversidad.
    papr         PAPR por índice de chirp y por forma de onda.
    optimize-p   Búsqueda del orden de chirp sin ambigüedad P★.

Códigos de salida: 0 éxito, 2 error de configuración, 3 límite de recursos.

Example:
    $ python -m chirp_sim simulate --preset fig5 --out results --threads 4
    $ python -m chirp_sim bound --preset fig4
"""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from chirp_sim.analysis.bound import (
    ber_upper_bound,
    bound_curve,
    diversity_order,
    gamma_doubling_ratio,
    sample_profiles,
)
from chirp_sim.analysis.chirp_order import optimize_chirp_order
from chirp_sim.analysis.papr import papr_by_chirp_index, papr_by_waveform
from chirp_sim.cli.logging_setup import configure_logging
from chirp_sim.cli.reports import (
    bound_report_text,
    chirp_order_text,
    papr_table,
    read_ber_csv,
    write_ber_csv,
    write_bound_csv,
    write_papr_csv,
)
from chirp_sim.domain.errors import ChirpSimError, SearchSpaceTooLargeError
from chirp_sim.domain.experiment import ExperimentConfig
from chirp_sim.domain.factory import load_experiment, load_preset
from chirp_sim.engine.run_sweep import run_sweep
from chirp_sim.engine.streams import BOUND_STREAM, PAPR_STREAM, auxiliary_rng
from chirp_sim.phy.channel import noise_variance_for_ebn0

logger = logging.getLogger(__name__)

EXIT_CONFIG_ERROR = 2
EXIT_RESOURCE_CAP = 3

app = typer.Typer(
    name="chirp-sim",
    help="Simulador de DFT-s-OFDM con modulación de chirp.",
    no_args_is_help=True,
    add_completion=False,
)

ConfigOption = Annotated[
    Path | None, typer.Option("--config", help="Fichero JSON de experimento")
]
PresetOption = Annotated[
    str | None, typer.Option("--preset", help="Preset incluido (fig3…fig8, table1)")
]
OutOption = Annotated[Path | None, typer.Option("--out", help="Directorio de salida")]
SeedOption = Annotated[
    int | None, typer.Option("--seed", min=0, help="Semilla maestra de 64 bits")
]
ThreadsOption = Annotated[int | None, typer.Option("--threads", min=1, help="Hilos")]
MaxTrialsOption = Annotated[
    int | None, typer.Option("--max-trials", min=1, help="Máximo de bloques por punto")
]
MinErrorsOption = Annotated[
    int | None, typer.Option("--min-errors", min=1, help="Errores para cerrar un punto")
]


@app.callback()
def main(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Logging a nivel DEBUG")
    ] = False,
) -> None:
    """Simulador de DFT-s-OFDM con modulación de chirp."""
    configure_logging(verbose)


def _stdout() -> Console:
    return Console()


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Traduce los errores de dominio a códigos de salida con diagnóstico en stderr."""
    err = Console(stderr=True)
    try:
        yield
    except SearchSpaceTooLargeError as exc:
        err.print(f"[bold red]Límite de recursos:[/] {escape(str(exc))}")
        raise typer.Exit(EXIT_RESOURCE_CAP) from exc
    except (ValidationError, ChirpSimError, OSError, KeyError) as exc:
        err.print(f"[bold red]Error de configuración:[/] {escape(str(exc))}")
        raise typer.Exit(EXIT_CONFIG_ERROR) from exc


def resolve_experiment(
    config: Path | None,
    preset: str | None,
    out: Path | None = None,
    seed: int | None = None,
    threads: int | None = None,
    max_trials: int | None = None,
    min_errors: int | None = None,
) -> ExperimentConfig:
    """
    Carga el experimento de --config o --preset y aplica los overrides.

    Raises:
        ChirpSimError: Si no se indica exactamente una fuente.
        ValidationError: Si el documento o los overrides no son válidos.
    """
    if (config is None) == (preset is None):
        raise ChirpSimError("Indica exactamente uno de --config o --preset")
    experiment = load_experiment(config) if config is not None else load_preset(preset)
    overrides = {
        "output_dir": str(out) if out is not None else None,
        "master_seed": seed,
        "threads": threads,
        "max_trials": max_trials,
        "min_errors": min_errors,
    }
    update = {key: value for key, value in overrides.items() if value is not None}
    if not update:
        return experiment
    return ExperimentConfig.model_validate(experiment.model_dump() | update)


def _output_path(experiment: ExperimentConfig, *parts: str) -> Path:
    return Path(experiment.output_dir) / "_".join((experiment.name, *parts))


@app.command()
def simulate(
    config: ConfigOption = None,
    preset: PresetOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    threads: ThreadsOption = None,
    max_trials: MaxTrialsOption = None,
    min_errors: MinErrorsOption = None,
) -> None:
    """Simula las curvas de BER del experimento (un CSV por curva)."""
    with _exit_codes():
        experiment = resolve_experiment(
            config, preset, out, seed, threads, max_trials, min_errors
        )
        for curve in experiment.curves:
            spec = experiment.sweep_spec(curve)
            logger.info("Curva %s (%s)", curve.label, spec.config.waveform)
            result = run_sweep(spec, label=curve.label)
            path = write_ber_csv(result, _output_path(experiment, f"{curve.label}.csv"))
            _stdout().print(f"[green]✓[/] {path}")


@app.command()
def bound(
    config: ConfigOption = None,
    preset: PresetOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    simulated: Annotated[
        Path | None,
        typer.Option("--simulated", help="CSV simulado para el cociente cota/BER"),
    ] = None,
) -> None:
    """
    Cota superior de BER, orden de diversidad y comprobación de la pendiente.

    La cota es de un usuario: las curvas multiusuario se omiten con un aviso.
    """
    with _exit_codes():
        experiment = resolve_experiment(config, preset, out, seed)
        eligible = [c for c in experiment.curves if c.system.U == 1]
        if not eligible:
            raise ChirpSimError("Ninguna curva es de un solo usuario")
        for curve in experiment.curves:
            if curve not in eligible:
                logger.warning(
                    "%s: U = %d, la cota es de un usuario, se omite",
                    curve.label,
                    curve.system.U,
                )
        sim_ber = read_ber_csv(simulated) if simulated is not None else None
        profiles = sample_profiles(
            experiment.channel,
            experiment.bound_doppler_draws,
            auxiliary_rng(experiment.master_seed, BOUND_STREAM),
        )
        for curve in eligible:
            system = experiment.resolve_system(curve.system)
            points = experiment.ebn0_db_points
            values = bound_curve(system, points, profiles)
            g_d = min(diversity_order(system, profile) for profile in profiles)
            gamma = 1.0 / noise_variance_for_ebn0(system, points[-1]) if points else 1.0
            report = ber_upper_bound(system, gamma, profiles[0])
            doubling = (
                (gamma, gamma_doubling_ratio(system, gamma, profiles)) if points else None
            )
            text = bound_report_text(curve.label, report, g_d, values, doubling, sim_ber)

            csv_path = write_bound_csv(
                values, _output_path(experiment, f"{curve.label}_bound.csv")
            )
            report_path = _output_path(experiment, f"{curve.label}_bound.txt")
            report_path.write_text(text, encoding="utf-8")
            logger.info("%s: G_D = %d", curve.label, g_d)
            _stdout().print(text)
            _stdout().print(f"[green]✓[/] {csv_path}")


@app.command()
def papr(
    config: ConfigOption = None,
    preset: PresetOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
) -> None:
    """PAPR máximo por índice de chirp y comparación entre formas de onda."""
    with _exit_codes():
        experiment = resolve_experiment(config, preset, out, seed)
        rng = auxiliary_rng(experiment.master_seed, PAPR_STREAM)
        entries = []
        for curve in experiment.curves:
            system = experiment.resolve_system(curve.system)
            if system.uses_chirp_modulation:
                entries.extend(
                    papr_by_chirp_index(system, experiment.papr_draws, rng, curve.label)
                )
            entries.append(papr_by_waveform(system, experiment.papr_draws, rng, curve.label))
        _stdout().print(papr_table(entries))
        path = write_papr_csv(entries, _output_path(experiment, "papr.csv"))
        _stdout().print(f"[green]✓[/] {path}")


@app.command("optimize-p")
def optimize_p(
    config: ConfigOption = None,
    preset: PresetOption = None,
    out: OutOption = None,
) -> None:
    """Busca P★, el mayor orden de chirp sin ambigüedad, para cada curva con chirp."""
    with _exit_codes():
        experiment = resolve_experiment(config, preset, out)
        eligible = [c for c in experiment.curves if c.system.uses_chirp_modulation]
        if not eligible:
            raise ChirpSimError("Ninguna curva usa modulación de chirp")
        for curve in experiment.curves:
            if curve not in eligible:
                logger.warning("%s: sin bits de chirp, se omite", curve.label)
        for curve in eligible:
            result = optimize_chirp_order(experiment.resolve_system(curve.system))
            text = chirp_order_text(curve.label, result)
            path = _output_path(experiment, f"{curve.label}_pstar.txt")
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            _stdout().print(text)
