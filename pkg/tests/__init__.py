"""Tests para ChirpSim."""
