"""Omega-function optimisation of quantum harmonic Otto engines and refrigerators."""

__version__ = "0.1.0"
