"""
Escritura de resultados: CSV de BER y de cota, informes de texto y tablas.

Los CSV se escriben con el módulo estándar `csv` y separador coma; los
números en coma flotante usan `repr` para que la salida sea reproducible bit a
bit entre ejecuciones.
"""

import csv
from collections import Counter
from collections.abc import Iterable, Sequence
from pathlib import Path

from rich.table import Table

from chirp_sim.domain.results import BerCurve, BoundReport, ChirpOrderResult, PaprEntry

BER_HEADER = ("waveform", "ebn0_db", "trials", "bit_errors", "ber", "stderr")
BOUND_HEADER = ("ebn0_db", "bound")
PAPR_HEADER = ("label", "nu", "chirp_bits", "max_papr_db", "mean_papr_db", "draws")


def _write_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def write_ber_csv(curve: BerCurve, path: Path) -> Path:
    """CSV `waveform,ebn0_db,trials,bit_errors,ber,stderr` de una curva."""
    return _write_rows(
        path,
        BER_HEADER,
        (
            (
                curve.label,
                repr(row.ebn0_db),
                row.trials,
                row.bit_errors,
                repr(row.ber),
                repr(row.stderr),
            )
            for row in curve.rows
        ),
    )


def read_ber_csv(path: Path) -> dict[float, float]:
    """BER por Eb/N0 de un CSV escrito por `write_ber_csv`."""
    with path.open(newline="", encoding="utf-8") as handle:
        return {float(row["ebn0_db"]): float(row["ber"]) for row in csv.DictReader(handle)}


def write_bound_csv(curve: Sequence[tuple[float, float]], path: Path) -> Path:
    """CSV `ebn0_db,bound`."""
    return _write_rows(
        path, BOUND_HEADER, ((repr(ebn0), repr(bound)) for ebn0, bound in curve)
    )


def write_papr_csv(entries: Sequence[PaprEntry], path: Path) -> Path:
    """CSV con el PAPR máximo y medio de cada entrada."""
    return _write_rows(
        path,
        PAPR_HEADER,
        (
            (
                entry.label,
                "" if entry.nu is None else entry.nu,
                entry.chirp_bits,
                f"{entry.max_papr_db:.6f}",
                f"{entry.mean_papr_db:.6f}",
                entry.draws,
            )
            for entry in entries
        ),
    )


def bound_report_text(
    label: str,
    report: BoundReport,
    diversity_order: int,
    curve: Sequence[tuple[float, float]],
    doubling: tuple[float, float] | None,
    simulated: dict[float, float] | None = None,
) -> str:
    """
    Informe de la cota: orden de diversidad, resumen de pares y comprobaciones.

    Args:
        label: Nombre de la curva.
        report: Cota en el punto de mayor Eb/N0 (para el resumen de pares).
        diversity_order: G_D (mínimo sobre los perfiles evaluados).
        curve: Pares (Eb/N0, cota).
        doubling: (γ, cota(2γ)/cota(γ)) o None si no hay puntos.
        simulated: BER simulada por Eb/N0, para el cociente cota/simulación.
    """
    ranks = Counter(term.rank for term in report.pair_terms)
    lines = [
        f"curve: {label}",
        f"diversity_order: {diversity_order}",
        f"pairs: {len(report.pair_terms)}",
        f"degenerate_pairs: {report.degenerate_pairs}",
        "rank_histogram: "
        + ", ".join(f"R={rank}:{count}" for rank, count in sorted(ranks.items())),
        f"f: {report.f:g}",
    ]
    if doubling is not None:
        gamma, ratio = doubling
        lines.append(
            f"gamma_doubling: gamma={gamma:.6g} ratio={ratio:.6g} "
            f"expected={2.0 ** -diversity_order:.6g}"
        )
    if simulated:
        for ebn0, bound in curve:
            ber = simulated.get(ebn0)
            if ber:
                lines.append(f"bound_over_sim: ebn0_db={ebn0:g} ratio={bound / ber:.6g}")
    return "\n".join(lines) + "\n"


def chirp_order_text(label: str, result: ChirpOrderResult) -> str:
    """Traza de la búsqueda de P★."""
    lines = [f"curve: {label}"]
    for step in result.trace:
        status = "ambiguous" if step.ambiguous else "unique"
        pair = f" pair={step.colliding_pair}" if step.colliding_pair else ""
        lines.append(f"P_tilde={step.p_tilde}: {status}{pair}")
    lines.append(f"P_star: {result.p_star}")
    return "\n".join(lines) + "\n"


def papr_table(entries: Sequence[PaprEntry]) -> Table:
    """Tabla rich con el PAPR de cada entrada."""
    table = Table(title="PAPR (dB)")
    for column in ("curva", "ν", "bits de chirp", "máximo", "medio", "sorteos"):
        table.add_column(column)
    for entry in entries:
        table.add_row(
            entry.label,
            "-" if entry.nu is None else str(entry.nu),
            entry.chirp_bits or "-",
            f"{entry.max_papr_db:.4f}",
            f"{entry.mean_papr_db:.4f}",
            str(entry.draws),
        )
    return table
