"""Annular non-crossing permutations and partitions of types B and D."""

__version__ = "0.1.0"
