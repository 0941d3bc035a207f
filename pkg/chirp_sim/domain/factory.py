"""
Presets de experimentos para ChirpSim.

Este módulo carga las configuraciones de referencia incluidas en el paquete
(`presets/*.json`), una por figura o tabla reproducida, además de la
comparación de PAPR entre formas de onda.

Example:
    >>> from chirp_sim.domain import load_preset
    >>> preset = load_preset("fig5")
    >>> [curve.label for curve in preset.curves]
    ['dft_s_ofdm', 'chirped_dft_s_ofdm', 'dft_s_ofdm_cm']
"""

from importlib import resources
from pathlib import Path

from chirp_sim.domain.experiment import ExperimentConfig

PRESET_PACKAGE = "chirp_sim.domain"
PRESET_DIR = "presets"


def available_presets() -> list[str]:
    """
    Devuelve los nombres de preset disponibles, ordenados alfabéticamente.

    Returns:
        Lista de nombres (sin extensión).
    """
    folder = resources.files(PRESET_PACKAGE) / PRESET_DIR
    return sorted(
        Path(entry.name).stem for entry in folder.iterdir() if entry.name.endswith(".json")
    )


def load_preset(name: str) -> ExperimentConfig:
    """
    Carga un preset por nombre.

    Args:
        name: Nombre del preset (p. ej. "fig5", "table1").

    Returns:
        ExperimentConfig validado.

    Raises:
        KeyError: Si no existe ningún preset con ese nombre.
    """
    resource = resources.files(PRESET_PACKAGE) / PRESET_DIR / f"{name}.json"
    if not resource.is_file():
        raise KeyError(f"Preset desconocido: {name!r} (disponibles: {available_presets()})")
    return ExperimentConfig.model_validate_json(resource.read_text(encoding="utf-8"))


def load_experiment(path: Path) -> ExperimentConfig:
    """
    Carga un documento de experimento desde un fichero JSON.

    Raises:
        OSError: Si el fichero no se puede leer.
        pydantic.ValidationError: Si el documento no es válido.
    """
    return ExperimentConfig.model_validate_json(path.read_text(encoding="utf-8"))
