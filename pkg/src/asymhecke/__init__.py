"""Exact affine Hecke algebra / lowest two-sided cell computations."""

__version__ = "0.1.0"
