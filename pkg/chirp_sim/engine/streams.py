"""
Flujos aleatorios deterministas de ChirpSim.

Cada bloque Monte Carlo recibe su propio generador derivado de
(semilla maestra, índice de punto, índice de bloque), de modo que el resultado
no depende del orden de ejecución ni del número de hilos.

Example:
    >>> from chirp_sim.engine.streams import trial_rng
    >>> a = trial_rng(2025, 0, 7).integers(0, 2**32)
    >>> b = trial_rng(2025, 0, 7).integers(0, 2**32)
    >>> bool(a == b)
    True
"""

import numpy as np

# Primer elemento de la clave de los flujos auxiliares; ningún índice de punto
# llega a este valor.
_AUXILIARY_KEY = 2**32 - 1

BOUND_STREAM = 1
PAPR_STREAM = 2


def trial_rng(master_seed: int, point_index: int, trial_index: int) -> np.random.Generator:
    """Generador del bloque `trial_index` del punto `point_index`."""
    sequence = np.random.SeedSequence(master_seed, spawn_key=(point_index, trial_index))
    return np.random.default_rng(sequence)


def auxiliary_rng(master_seed: int, stream: int) -> np.random.Generator:
    """Generador para sorteos fuera del barrido (perfiles de la cota, PAPR)."""
    sequence = np.random.SeedSequence(master_seed, spawn_key=(_AUXILIARY_KEY, stream))
    return np.random.default_rng(sequence)
