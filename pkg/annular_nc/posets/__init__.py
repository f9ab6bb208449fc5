"""Generic finite posets: Hasse diagrams, lattices, Moebius function, isomorphism checks."""

from .finite_poset import UNDEFINED, FinitePoset, PosetCheck, check_order_iso

__all__ = ["UNDEFINED", "FinitePoset", "PosetCheck", "check_order_iso"]
