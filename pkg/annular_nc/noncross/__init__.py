"""Genus and crossing-pattern tests for permutations against a disc or annulus."""

from .annulus import AnnulusConfig, ac_test_perm, is_gamma_connected, restrict_to_circle
from .ground import (
    DisjointSet,
    GroundPermutation,
    genus,
    induced,
    is_noncrossing,
    joint_orbit_count,
)
from .patterns import (
    CrossingWitness,
    WitnessKind,
    check_compatible,
    find_crossing_pattern,
    is_noncrossing_by_patterns,
)

__all__ = [
    "AnnulusConfig",
    "CrossingWitness",
    "DisjointSet",
    "GroundPermutation",
    "WitnessKind",
    "ac_test_perm",
    "check_compatible",
    "find_crossing_pattern",
    "genus",
    "induced",
    "is_gamma_connected",
    "is_noncrossing",
    "is_noncrossing_by_patterns",
    "joint_orbit_count",
    "restrict_to_circle",
]
