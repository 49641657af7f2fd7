"""Coin models of planar graphs, Koebe orderings and generalized coloring numbers."""

__version__ = "0.1.0"
