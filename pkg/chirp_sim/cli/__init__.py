"""
Módulo de línea de comandos de ChirpSim.

Aplicación typer con los comandos simulate, bound, papr y optimize-p.
"""

from chirp_sim.cli.app import app

__all__ = [
    "app",
]
