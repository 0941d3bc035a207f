"""
Módulo del motor Monte Carlo de ChirpSim.

Contiene la estimación de BER por punto de Eb/N0 y el barrido completo, con
flujos aleatorios deterministas por bloque.
"""

from chirp_sim.engine.run_sweep import run_point, run_sweep
from chirp_sim.engine.streams import auxiliary_rng, trial_rng

__all__ = [
    "auxiliary_rng",
    "run_point",
    "run_sweep",
    "trial_rng",
]
