"""Hamiltonicity on tessellation duals: lattices, gadgets, and reductions."""

__version__ = "0.1.0"
