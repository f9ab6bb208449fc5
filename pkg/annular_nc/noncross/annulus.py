"""The annulus (and disc) reference permutations and the AC-test permutations."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from annular_nc.errors import UnsupportedReferenceError
from annular_nc.noncross.ground import GroundPermutation, induced
from annular_nc.points import signed_points


@dataclass(frozen=True)
class AnnulusConfig:
    """
    The pair (p, q) with n = p + q and gamma = (1..p,-1..-p)(p+1..n,-(p+1)..-n).

    Y (outer circle) holds ±1..±p, Z (inner circle) holds ±(p+1)..±n. The disc
    reference (1..n,-1..-n) is the degenerate configuration q = 0, built with
    :meth:`disc`.

    Args:
        p: Number of positive points on the outer circle
        q: Number of positive points on the inner circle (0 for the disc)
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise ValueError(f"need p >= 1 and q >= 0, got p={self.p}, q={self.q}")

    @classmethod
    def disc(cls, n: int) -> "AnnulusConfig":
        return cls(n, 0)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def is_disc(self) -> bool:
        return self.q == 0

    @cached_property
    def points(self) -> tuple[int, ...]:
        return signed_points(self.n)

    @cached_property
    def outer(self) -> frozenset[int]:
        """Y."""
        return frozenset(x for x in self.points if abs(x) <= self.p)

    @cached_property
    def inner(self) -> frozenset[int]:
        """Z; empty for the disc."""
        return frozenset(x for x in self.points if abs(x) > self.p)

    @cached_property
    def circles(self) -> tuple[frozenset[int], ...]:
        return (self.outer,) if self.is_disc else (self.outer, self.inner)

    @cached_property
    def gamma(self) -> GroundPermutation:
        outer = list(range(1, self.p + 1))
        inner = list(range(self.p + 1, self.n + 1))
        cycles = [outer + [-x for x in outer]]
        if inner:
            cycles.append(inner + [-x for x in inner])
        return GroundPermutation.from_cycles(cycles, self.points)


def ac_test_perm(gamma: GroundPermutation, y: int, z: int) -> GroundPermutation:
    """
    The AC-test permutation lambda_{y,z}.

    It fixes y and z and cycles gamma(y), ..., gamma^{|Y|-1}(y),
    gamma(z), ..., gamma^{|Z|-1}(z), where Y and Z are the two cycles of
    gamma through y and z.
    """
    if gamma.cycle_count != 2:
        raise UnsupportedReferenceError("AC-test permutations need a two-cycle reference")
    if y not in gamma.ground or z not in gamma.ground:
        raise ValueError(f"{y} or {z} is not a point of the reference permutation")

    def walk(start):
        orbit = [start]
        x = gamma(start)
        while x != start:
            orbit.append(x)
            x = gamma(x)
        return orbit

    orbit_y = walk(y)
    if z in orbit_y:
        raise ValueError(f"{y} and {z} lie on the same circle")
    cycle = orbit_y[1:] + walk(z)[1:]
    return GroundPermutation.from_cycles([cycle] if cycle else [], gamma.points)


def is_gamma_connected(subset: Iterable[int], cfg: AnnulusConfig) -> bool:
    """True iff the set meets both circles."""
    subset = frozenset(subset)
    return bool(subset & cfg.outer) and bool(subset & cfg.inner)


def restrict_to_circle(
    tau: GroundPermutation, cfg: AnnulusConfig, circle: str
) -> tuple[GroundPermutation, GroundPermutation]:
    """Return (tau restricted to the circle, gamma restricted to the circle)."""
    points = cfg.outer if circle == "Y" else cfg.inner
    if not points:
        raise ValueError(f"circle {circle} is empty")
    return induced(tau, points), induced(cfg.gamma, points)
