"""Quasi-polynomial representations of the type C^vee C_r double affine Hecke algebra."""

__version__ = "0.1.0"
