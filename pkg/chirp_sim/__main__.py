"""Punto de entrada: `python -m chirp_sim`."""

from chirp_sim.cli.app import app

if __name__ == "__main__":
    app()
