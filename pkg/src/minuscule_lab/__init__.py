"""Exact computations around minuscule weights, Dynkin polynomials, the q = -1
fixed-weight count, and the Satake bookkeeping of adapted real forms."""

__version__ = "0.1.0"
