"""Tests de la capa física."""
