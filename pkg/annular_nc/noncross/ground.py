"""Permutations of an arbitrary finite ground set and the genus test."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from annular_nc.errors import InternalInvariantError, RankMismatchError
from annular_nc.points import point_key, sort_points


class DisjointSet:
    """Union-find over 0..count-1 with path compression and union by rank."""

    def __init__(self, count: int):
        self.parent = list(range(count))
        self.rank = [0] * count
        self.groups = count

    def find(self, element: int) -> int:
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        """Merge the sets of two elements; False if they were already joined."""
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False
        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
        self.groups -= 1
        return True

    def __len__(self) -> int:
        return self.groups


@dataclass(frozen=True)
class GroundPermutation:
    """
    A bijection of a finite set of integers onto itself.

    Points are kept in canonical order (positives, then negatives by absolute
    value) with images aligned, so equal maps compare equal.
    """

    points: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.points) != len(self.images):
            raise ValueError("points and images must have the same length")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")
        if set(self.images) != set(self.points):
            raise ValueError("images must be a rearrangement of the points")
        order = sorted(range(len(self.points)), key=lambda k: point_key(self.points[k]))
        object.__setattr__(self, "points", tuple(self.points[k] for k in order))
        object.__setattr__(self, "images", tuple(self.images[k] for k in order))

    @classmethod
    def from_mapping(
        cls, mapping: Mapping[int, int], points: Iterable[int] | None = None
    ) -> "GroundPermutation":
        """Points outside the mapping (when points are given) are fixed."""
        ground = sort_points(mapping if points is None else points)
        return cls(ground, tuple(mapping.get(x, x) for x in ground))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], points: Iterable[int]) -> "GroundPermutation":
        mapping = {}
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                mapping[a] = b
        return cls.from_mapping(mapping, points)

    @classmethod
    def identity(cls, points: Iterable[int]) -> "GroundPermutation":
        ground = sort_points(points)
        return cls(ground, ground)

    @cached_property
    def mapping(self) -> dict[int, int]:
        return dict(zip(self.points, self.images))

    @cached_property
    def ground(self) -> frozenset[int]:
        return frozenset(self.points)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self):
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "id"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in moved)

    def compose(self, other: "GroundPermutation") -> "GroundPermutation":
        """x -> self(other(x))."""
        check_same_ground(self, other)
        return GroundPermutation(other.points, tuple(self(y) for y in other.images))

    def inverse(self) -> "GroundPermutation":
        return GroundPermutation(self.images, self.points)

    @cached_property
    def _cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = set()
        result = []
        for x in self.points:
            if x in seen:
                continue
            cycle = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cycle.append(y)
                seen.add(y)
                y = self(y)
            result.append(tuple(cycle))
        return tuple(result)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles including fixed points, each starting at its least point."""
        return self._cycles

    def orbits(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(c) for c in self._cycles)

    @property
    def cycle_count(self) -> int:
        return len(self._cycles)


def check_same_ground(tau: GroundPermutation, gamma: GroundPermutation) -> None:
    if tau.ground != gamma.ground:
        raise RankMismatchError("permutations act on different ground sets")


def induced(tau: GroundPermutation, subset: Iterable[int]) -> GroundPermutation:
    """The permutation of A sending a to the first of tau(a), tau^2(a), ... in A."""
    subset = frozenset(subset)
    if not subset:
        raise ValueError("cannot induce a permutation on the empty set")
    if not subset <= tau.ground:
        raise ValueError(f"{sorted(subset)} is not a subset of the ground set")
    mapping = {}
    for a in subset:
        b = tau(a)
        while b not in subset:
            b = tau(b)
        mapping[a] = b
    return GroundPermutation.from_mapping(mapping)


def joint_orbit_count(tau: GroundPermutation, gamma: GroundPermutation) -> int:
    """Number of orbits of the group generated by tau and gamma."""
    check_same_ground(tau, gamma)
    index = {x: k for k, x in enumerate(tau.points)}
    components = DisjointSet(len(index))
    for x in tau.points:
        components.unite(index[x], index[tau(x)])
        components.unite(index[x], index[gamma(x)])
    return len(components)


def genus(tau: GroundPermutation, gamma: GroundPermutation) -> int:
    """
    Genus of tau relative to gamma.

    2g = |X| + 2#(tau,gamma) - #(tau) - #(tau^-1 gamma) - #(gamma)
    """
    check_same_ground(tau, gamma)
    bracket = (len(tau) + 2 * joint_orbit_count(tau, gamma)) - (
        tau.cycle_count + tau.inverse().compose(gamma).cycle_count + gamma.cycle_count
    )
    if bracket < 0 or bracket % 2:
        raise InternalInvariantError(
            f"genus bracket {bracket} for tau={tau}, gamma={gamma} is not even and non-negative"
        )
    return bracket // 2


def is_noncrossing(tau: GroundPermutation, gamma: GroundPermutation) -> bool:
    return genus(tau, gamma) == 0
