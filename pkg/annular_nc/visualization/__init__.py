"""Graph exports of the posets."""

from .hasse import hasse_to_dot, hasse_to_json

__all__ = ["hasse_to_dot", "hasse_to_json"]
