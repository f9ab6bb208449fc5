"""Compatibility and crossing-pattern tests for disc and annulus references.

These are the combinatorial counterparts of the genus test: a permutation is
non-crossing iff it is compatible with gamma and shows none of the patterns.
Patterns are searched DC/AC-1 first, then AC-2, then AC-3, each over tuples
in lexicographic order under the canonical point order, so the first hit is
the smallest witness.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from annular_nc.errors import UnsupportedReferenceError
from annular_nc.noncross.annulus import ac_test_perm
from annular_nc.noncross.ground import GroundPermutation, check_same_ground, induced
from annular_nc.points import sort_points


class WitnessKind(str, Enum):
    DC = "DC"
    AC1 = "AC1"
    AC2 = "AC2"
    AC3 = "AC3"
    INCOMPATIBLE = "INCOMPATIBLE"


@dataclass(frozen=True)
class CrossingWitness:
    """
    Evidence that a permutation is not non-crossing.

    For AC2 the points are (a, b, c, y, z), for AC3 (a, b, c, d, y, z) with
    y on the outer and z on the inner circle. For INCOMPATIBLE they are the
    failing orbit and ``detail`` names the clause.
    """

    kind: WitnessKind
    points: tuple[int, ...]
    detail: str | None = None

    def to_json(self) -> dict:
        data = {"kind": self.kind.value, "points": list(self.points)}
        if self.detail is not None:
            data["detail"] = self.detail
        return data

    @classmethod
    def from_json(cls, data: dict) -> "CrossingWitness":
        return cls(WitnessKind(data["kind"]), tuple(data["points"]), data.get("detail"))

    def __str__(self):
        text = f"{self.kind.value}{self.points}"
        return f"{text}: {self.detail}" if self.detail else text


class _Positions:
    """Cycle membership and position of every point of a permutation."""

    def __init__(self, perm: GroundPermutation):
        self.cycle = {}
        self.index = {}
        for label, cycle in enumerate(perm.cycles()):
            for k, x in enumerate(cycle):
                self.cycle[x] = label
                self.index[x] = k

    def same(self, x: int, y: int) -> bool:
        return self.cycle[x] == self.cycle[y]

    def in_cyclic_order(self, seq: Sequence[int]) -> bool:
        """True iff the points lie on one cycle and the induced cycle is seq."""
        label = self.cycle[seq[0]]
        if any(self.cycle[x] != label for x in seq):
            return False
        pos = [self.index[x] for x in seq]
        descents = sum(pos[k] > pos[(k + 1) % len(pos)] for k in range(len(pos)))
        return descents == 1


def _circles(gamma: GroundPermutation) -> tuple[frozenset[int], ...]:
    """Cycles of gamma, the one holding the least point first."""
    if gamma.cycle_count > 2:
        raise UnsupportedReferenceError(
            f"reference permutation has {gamma.cycle_count} cycles; at most 2 are supported"
        )
    return gamma.orbits()


def check_compatible(tau: GroundPermutation, gamma: GroundPermutation) -> CrossingWitness | None:
    """
    Return None if tau is compatible with gamma, else an INCOMPATIBLE witness.

    Every orbit A must induce the same cyclic order as gamma on A (disc) or on
    each nonempty A∩Y and A∩Z (annulus), and in the annulus may jump from Y to Z
    at most once.
    """
    check_same_ground(tau, gamma)
    circles = _circles(gamma)
    for orbit in tau.orbits():
        points = sort_points(orbit)
        if len(circles) == 1:
            if induced(tau, orbit) != induced(gamma, orbit):
                return CrossingWitness(
                    WitnessKind.INCOMPATIBLE, points, "clause (i): order differs from gamma"
                )
            continue
        for name, circle in zip("YZ", circles):
            part = orbit & circle
            if part and induced(tau, part) != induced(gamma, part):
                return CrossingWitness(
                    WitnessKind.INCOMPATIBLE,
                    points,
                    f"clause (i): order on A∩{name} differs from gamma",
                )
        outer = circles[0]
        jumps = sum(1 for a in orbit & outer if tau(a) not in outer)
        if jumps > 1:
            return CrossingWitness(
                WitnessKind.INCOMPATIBLE,
                points,
                f"clause (ii): {jumps} jumps from Y to Z",
            )
    return None


def _scan_four(order, tau_pos, check_gamma) -> tuple[int, int, int, int] | None:
    """Smallest (a,b,c,d) with tau inducing (a,c)(b,d) and check_gamma((a,b,c,d))."""
    for a in order:
        for b in order:
            if tau_pos.same(a, b):
                continue
            for c in order:
                if c == a or not tau_pos.same(a, c):
                    continue
                for d in order:
                    if d == b or not tau_pos.same(b, d):
                        continue
                    if check_gamma((a, b, c, d)):
                        return (a, b, c, d)
    return None


def find_crossing_pattern(
    tau: GroundPermutation, gamma: GroundPermutation
) -> CrossingWitness | None:
    """Return the first crossing pattern of tau relative to gamma, or None."""
    check_same_ground(tau, gamma)
    circles = _circles(gamma)
    order = sort_points(tau.points)
    tau_pos = _Positions(tau)
    gamma_pos = _Positions(gamma)

    hit = _scan_four(order, tau_pos, gamma_pos.in_cyclic_order)
    if hit:
        kind = WitnessKind.DC if len(circles) == 1 else WitnessKind.AC1
        return CrossingWitness(kind, hit)
    if len(circles) == 1:
        return None

    outer, inner = circles
    outer_order = [y for y in order if y in outer]
    inner_order = [z for z in order if z in inner]
    lambdas: dict[tuple[int, int], _Positions] = {}

    def lam(y, z):
        if (y, z) not in lambdas:
            lambdas[y, z] = _Positions(ac_test_perm(gamma, y, z))
        return lambdas[y, z]

    def test_pairs(excluded_orbits):
        for y in outer_order:
            if any(tau_pos.same(y, x) for x in excluded_orbits):
                continue
            for z in inner_order:
                if tau_pos.same(y, z):
                    yield y, z

    # AC-2: tau induces (a,c,b)(y,z) and lambda_{y,z} induces (a,b,c)
    for a in order:
        for b in order:
            if b == a or not tau_pos.same(a, b):
                continue
            for c in order:
                if c in (a, b) or not tau_pos.in_cyclic_order((a, c, b)):
                    continue
                for y, z in test_pairs((a,)):
                    if lam(y, z).in_cyclic_order((a, b, c)):
                        return CrossingWitness(WitnessKind.AC2, (a, b, c, y, z))

    # AC-3: tau induces (a,c)(b,d)(y,z) and lambda_{y,z} induces (a,b,c,d)
    for a in order:
        for b in order:
            if tau_pos.same(a, b):
                continue
            for c in order:
                if c == a or not tau_pos.same(a, c):
                    continue
                for d in order:
                    if d == b or not tau_pos.same(b, d):
                        continue
                    for y, z in test_pairs((a, b)):
                        if lam(y, z).in_cyclic_order((a, b, c, d)):
                            return CrossingWitness(WitnessKind.AC3, (a, b, c, d, y, z))
    return None


def is_noncrossing_by_patterns(tau: GroundPermutation, gamma: GroundPermutation) -> bool:
    return check_compatible(tau, gamma) is None and find_crossing_pattern(tau, gamma) is None
