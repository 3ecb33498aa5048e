"""Quantum-query cost models and verified algorithms for independent set
problems in graphs."""

__version__ = "0.1.0"

from .graphs import Graph  # noqa: F401
