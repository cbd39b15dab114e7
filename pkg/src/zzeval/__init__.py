"""Exact computations with Hecke evaluation maps, cell modules, zigzag
algebras, and homotopy categories of graded projective modules."""

__version__ = "0.1.0"
