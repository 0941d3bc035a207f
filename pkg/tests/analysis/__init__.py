"""Tests del módulo de análisis."""
