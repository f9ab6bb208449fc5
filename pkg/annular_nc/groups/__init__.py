"""The groups B_n and D_n: signed permutations, lengths and the absolute order."""

from .notation import format_cycles, parse_cycles
from .signed_perm import (
    OrbitSet,
    SignedPermutation,
    absolute_order_matrix,
    compose,
    covers_B,
    enumerate_B,
    enumerate_D,
    image_array,
    inverse,
    is_gamma_connected_perm,
    is_in_D,
    le_B,
    le_D,
    length_B,
    length_B_oracle,
    length_D_oracle,
    lengths_B,
    orbits,
    reflections_B,
    reflections_D,
)

__all__ = [
    "OrbitSet",
    "SignedPermutation",
    "absolute_order_matrix",
    "compose",
    "covers_B",
    "enumerate_B",
    "enumerate_D",
    "format_cycles",
    "image_array",
    "inverse",
    "is_gamma_connected_perm",
    "is_in_D",
    "le_B",
    "le_D",
    "length_B",
    "length_B_oracle",
    "length_D_oracle",
    "lengths_B",
    "orbits",
    "parse_cycles",
    "reflections_B",
    "reflections_D",
]
