"""Tests del módulo de dominio."""

