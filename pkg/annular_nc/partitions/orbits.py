"""Canonical permutations of orbits and the orbit family O^B_nc(p, q)."""

from dataclasses import dataclass
from typing import Iterable

from annular_nc.errors import NotInPosetError
from annular_nc.noncross.annulus import AnnulusConfig, ac_test_perm, is_gamma_connected
from annular_nc.noncross.ground import GroundPermutation, genus, induced
from annular_nc.points import negate, point_key


@dataclass(frozen=True)
class CanonicalOrbitPerm:
    """The cyclic order mu_A that every annular non-crossing permutation induces on A."""

    subset: frozenset[int]
    perm: GroundPermutation

    def __post_init__(self):
        if self.perm.ground != self.subset or self.perm.cycle_count != 1:
            raise ValueError(f"{self.perm} is not a single cycle on {sorted(self.subset)}")

    def __str__(self):
        return str(self.perm) if len(self.subset) > 1 else f"({next(iter(self.subset))})"


def canonical_perm(
    subset: Iterable[int],
    cfg: AnnulusConfig,
    y: int | None = None,
    z: int | None = None,
) -> CanonicalOrbitPerm:
    """
    Return mu_A.

    For A inside one circle this is gamma restricted to A. For A meeting both
    circles it is lambda_{-y,-z} restricted to A with y in A∩Y and z in A∩Z
    (the least ones by default); A must then be disjoint from -A.
    """
    subset = frozenset(subset)
    if not subset:
        raise NotInPosetError("canonical permutation of the empty set")
    if not subset <= frozenset(cfg.points):
        raise NotInPosetError(f"{sorted(subset)} is not a subset of ±1..±{cfg.n}")
    if not is_gamma_connected(subset, cfg):
        return CanonicalOrbitPerm(subset, induced(cfg.gamma, subset))
    if subset & negate(subset):
        raise NotInPosetError(
            f"{sorted(subset, key=point_key)} meets both circles and its own negative"
        )
    if y is None:
        y = min(subset & cfg.outer, key=point_key)
    if z is None:
        z = min(subset & cfg.inner, key=point_key)
    if y not in subset & cfg.outer or z not in subset & cfg.inner:
        raise ValueError(f"need y in A∩Y and z in A∩Z, got y={y}, z={z}")
    return CanonicalOrbitPerm(subset, induced(ac_test_perm(cfg.gamma, -y, -z), subset))


def orbit_witness(subset: Iterable[int], cfg: AnnulusConfig) -> GroundPermutation | None:
    """
    The permutation with A (and -A) as its only nontrivial orbits, cycled by mu_A.

    None when A cannot be an orbit of a signed permutation at all.
    """
    subset = frozenset(subset)
    if not subset or not subset <= frozenset(cfg.points):
        return None
    mirror = negate(subset)
    if subset == mirror:
        if is_gamma_connected(subset, cfg):
            return None
        return GroundPermutation.from_mapping(induced(cfg.gamma, subset).mapping, cfg.points)
    if subset & mirror:
        return None
    mu = canonical_perm(subset, cfg).perm
    mapping = dict(mu.mapping)
    mapping.update({-a: -b for a, b in mu.mapping.items()})
    return GroundPermutation.from_mapping(mapping, cfg.points)


def orbit_family_member(subset: Iterable[int], cfg: AnnulusConfig) -> bool:
    """True iff A is an orbit of some element of S^B_nc(p, q)."""
    witness = orbit_witness(subset, cfg)
    return witness is not None and genus(witness, cfg.gamma) == 0
