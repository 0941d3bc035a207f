"""Tests de la línea de comandos."""
