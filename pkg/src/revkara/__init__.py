"""Ancilla-free reversible multipliers for binary polynomials and binary fields."""

__version__ = "0.1.0"
