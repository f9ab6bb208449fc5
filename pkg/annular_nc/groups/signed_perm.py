"""Signed permutations: the hyperoctahedral group B_n and its subgroup D_n."""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Mapping, Sequence

import numpy as np
from tqdm import tqdm

from annular_nc.config import ENUMERATION_CAP, Settings, resolve
from annular_nc.errors import BoundExceededError, NotInGroupError, RankMismatchError
from annular_nc.noncross.ground import GroundPermutation
from annular_nc.points import point_index, point_key, signed_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitSet:
    """
    The cycles of a signed permutation acting on X.

    Orbits are listed by their least element in canonical order; ``zero`` flags
    the inversion-invariant orbits (A = -A).
    """

    orbits: tuple[frozenset[int], ...]
    zero: tuple[bool, ...]

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    @property
    def zero_blocks(self) -> tuple[frozenset[int], ...]:
        return tuple(a for a, z in zip(self.orbits, self.zero) if z)

    @property
    def zero_count(self) -> int:
        return sum(self.zero)

    @property
    def pair_count(self) -> int:
        """Number of pairs {A, -A} with A != -A."""
        return (len(self.orbits) - self.zero_count) // 2


@dataclass(frozen=True)
class SignedPermutation:
    """
    An element of B_n, stored as the images of 1..n.

    The image of a negative point is implied by tau(-i) = -tau(i).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("a signed permutation needs rank n >= 1")
        if sorted(abs(v) for v in images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not the image vector of a signed permutation")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], n: int | None = None) -> "SignedPermutation":
        """
        Build from a map on (part of) X; unmapped points are fixed.

        Raises ValueError when the map breaks tau(-x) = -tau(x).
        """
        if n is None:
            n = max((abs(x) for x in mapping), default=1)
        for x, y in mapping.items():
            if -x in mapping and mapping[-x] != -y:
                raise ValueError(f"mapping sends {x} -> {y} but {-x} -> {mapping[-x]}")
        images = []
        for i in range(1, n + 1):
            if i in mapping:
                images.append(mapping[i])
            elif -i in mapping:
                images.append(-mapping[-i])
            else:
                images.append(i)
        return cls(tuple(images))

    @classmethod
    def from_ground(cls, perm: GroundPermutation) -> "SignedPermutation":
        return cls.from_mapping(perm.mapping)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1] if x > 0 else -self.images[-x - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __str__(self):
        from annular_nc.groups.notation import format_cycles

        return format_cycles(self)

    @property
    def sort_key(self) -> tuple[tuple[int, int], ...]:
        """Key of the canonical enumeration order."""
        return tuple(point_key(v) for v in self.images)

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def to_ground(self) -> GroundPermutation:
        """The same permutation viewed as an element of S(X)."""
        points = signed_points(self.n)
        return GroundPermutation(points, tuple(self(x) for x in points))

    def inverse(self) -> "SignedPermutation":
        return inverse(self)

    @cached_property
    def orbits(self) -> OrbitSet:
        return orbits(self)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """All cycles on X, each starting at its least point, sorted by start."""
        seen = set()
        result = []
        for x in signed_points(self.n):
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

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cycles": [list(c) for c in self.cycles() if len(c) > 1],
        }


def _check_rank(sigma: SignedPermutation, tau: SignedPermutation) -> None:
    if sigma.n != tau.n:
        raise RankMismatchError(f"rank mismatch: {sigma.n} != {tau.n}")


def compose(sigma: SignedPermutation, tau: SignedPermutation) -> SignedPermutation:
    """Return sigma∘tau, i.e. x -> sigma(tau(x))."""
    _check_rank(sigma, tau)
    return SignedPermutation(tuple(sigma(v) for v in tau.images))


def inverse(tau: SignedPermutation) -> SignedPermutation:
    inv = [0] * tau.n
    for i, v in enumerate(tau.images, start=1):
        if v > 0:
            inv[v - 1] = i
        else:
            inv[-v - 1] = -i
    return SignedPermutation(tuple(inv))


def orbits(tau: SignedPermutation) -> OrbitSet:
    blocks = tuple(frozenset(c) for c in tau.cycles())
    return OrbitSet(blocks, tuple(b == frozenset(-x for x in b) for b in blocks))


def length_B(tau: SignedPermutation) -> int:
    """Absolute length: n minus the number of non-zero orbit pairs."""
    return tau.n - orbits(tau).pair_count


def _signed_transposition(n: int, a: int, b: int) -> SignedPermutation:
    """The reflection swapping a <-> b and -a <-> -b; (a,-a) when b = -a."""
    mapping = {a: b, b: a, -a: -b, -b: -a}
    return SignedPermutation.from_mapping(mapping, n)


def reflections_D(n: int) -> tuple[SignedPermutation, ...]:
    """(i,j)(-i,-j) and (i,-j)(-i,j) for 1 <= i < j <= n."""
    gens = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(_signed_transposition(n, i, j))
            gens.append(_signed_transposition(n, i, -j))
    return tuple(gens)


def reflections_B(n: int) -> tuple[SignedPermutation, ...]:
    """The D_n reflections together with the sign changes (i,-i)."""
    return reflections_D(n) + tuple(
        _signed_transposition(n, i, -i) for i in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def _word_lengths(n: int, kind: str) -> dict[tuple[int, ...], int]:
    """Breadth-first search from the identity over the reflections of B_n or D_n."""
    gens = reflections_B(n) if kind == "B" else reflections_D(n)
    start = SignedPermutation.identity(n)
    dist = {start.images: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        d = dist[current.images]
        for g in gens:
            nxt = compose(g, current)
            if nxt.images not in dist:
                dist[nxt.images] = d + 1
                queue.append(nxt)
    logger.debug("word-length table for %s_%d: %d elements", kind, n, len(dist))
    return dist


def length_B_oracle(tau: SignedPermutation, settings: Settings | None = None) -> int:
    """Shortest factorisation of tau into B_n reflections."""
    settings = resolve(settings)
    settings.require(tau.n, settings.oracle_bound, "oracle rank")
    return _word_lengths(tau.n, "B")[tau.images]


def is_in_D(tau: SignedPermutation) -> bool:
    """Even sign as a permutation of the 2n points of X."""
    return (2 * tau.n - len(orbits(tau))) % 2 == 0


def length_D_oracle(tau: SignedPermutation, settings: Settings | None = None) -> int:
    """Shortest factorisation of tau into D_n reflections."""
    if not is_in_D(tau):
        raise NotInGroupError(f"{tau} is not in D_{tau.n}")
    settings = resolve(settings)
    settings.require(tau.n, settings.oracle_bound, "oracle rank")
    return _word_lengths(tau.n, "D")[tau.images]


def le_B(sigma: SignedPermutation, tau: SignedPermutation) -> bool:
    """Absolute order: l(tau) = l(sigma) + l(sigma^-1 tau)."""
    _check_rank(sigma, tau)
    return length_B(tau) == length_B(sigma) + length_B(compose(inverse(sigma), tau))


def le_D(
    sigma: SignedPermutation, tau: SignedPermutation, settings: Settings | None = None
) -> bool:
    """Absolute order of D_n measured with the D-reflection word length."""
    _check_rank(sigma, tau)
    return length_D_oracle(tau, settings) == length_D_oracle(
        sigma, settings
    ) + length_D_oracle(compose(inverse(sigma), tau), settings)


def covers_B(sigma: SignedPermutation, tau: SignedPermutation) -> bool:
    """
    True iff tau covers sigma in the absolute order.

    sigma^-1 tau must be a reflection, and the orbits of sigma must sit
    in one of four configurations:
    (a) (i,-i) with i and -i in different orbits;
    (b) (i,j)(-i,-j) with i, -i in one orbit but j, -j not;
    (c) (i,j)(-i,-j) with i, -i, j, -j in four different orbits;
    (d) (i,j)(-i,-j) with i and -j in one orbit which is not a zero orbit.
    """
    _check_rank(sigma, tau)
    rho = compose(inverse(sigma), tau)
    moved = [x for x in signed_points(rho.n) if rho(x) != x]
    orbit_of = {x: a for a in orbits(sigma) for x in a}

    def same(x, y):
        return orbit_of[x] is orbit_of[y]

    if len(moved) == 2:
        i = moved[0]
        if rho(i) != -i:
            return False
        return not same(i, -i)
    if len(moved) != 4:
        return False
    i = moved[0]
    j = rho(i)
    if rho(j) != i or rho(-i) != -j or j in (i, -i):
        return False
    for a, b in ((i, j), (j, i)):
        if same(a, -a) and not same(b, -b):
            return True
        if same(a, -b) and not same(a, -a):
            return True
    return len({id(orbit_of[x]) for x in (i, -i, j, -j)}) == 4


def _check_cap(n: int) -> None:
    if not 1 <= n <= ENUMERATION_CAP:
        raise BoundExceededError(f"rank {n} outside 1..{ENUMERATION_CAP}")


def enumerate_B(n: int, prefix: Sequence[int] = ()) -> Iterator[SignedPermutation]:
    """
    Yield B_n in canonical order: lexicographic on the image vector under
    1 < ... < n < -1 < ... < -n.

    A prefix restricts the stream to elements whose first images match it;
    worker pools split the group this way.
    """
    _check_cap(n)
    values = signed_points(n)
    prefix = tuple(prefix)
    if len({abs(v) for v in prefix}) != len(prefix) or any(
        not 1 <= abs(v) <= n for v in prefix
    ):
        raise ValueError(f"invalid prefix {prefix} for rank {n}")

    def extend(head, used):
        if len(head) == n:
            yield SignedPermutation(head)
            return
        for v in values:
            if abs(v) not in used:
                yield from extend(head + (v,), used | {abs(v)})

    yield from extend(prefix, frozenset(abs(v) for v in prefix))


def enumerate_D(n: int) -> Iterator[SignedPermutation]:
    return (tau for tau in enumerate_B(n) if is_in_D(tau))


def image_array(perms: Sequence[SignedPermutation]) -> np.ndarray:
    """(N, 2n) array whose row k sends index(x) to index(tau_k(x))."""
    if not perms:
        return np.zeros((0, 0), dtype=np.intp)
    n = perms[0].n
    points = signed_points(n)
    rows = []
    for tau in perms:
        if tau.n != n:
            raise RankMismatchError("all permutations must share one rank")
        rows.append([point_index(tau(x), n) for x in points])
    return np.asarray(rows, dtype=np.intp)


def _lengths_from_array(arr: np.ndarray, n: int) -> np.ndarray:
    count, width = arr.shape
    idx = np.arange(width)
    mins = np.broadcast_to(idx, (count, width)).copy()
    jump = arr.copy()
    # pointer doubling: after k rounds mins covers 2^k steps of each orbit
    for _ in range(int(np.ceil(np.log2(max(width, 2)))) + 1):
        mins = np.minimum(mins, np.take_along_axis(mins, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
    is_min = mins == idx
    neg = np.array([point_index(-x, n) for x in signed_points(n)], dtype=np.intp)
    zero = is_min & (mins[:, neg] == idx)
    pairs = (is_min.sum(axis=1) - zero.sum(axis=1)) // 2
    return n - pairs


def lengths_B(perms: Sequence[SignedPermutation]) -> np.ndarray:
    """Vectorised length_B over a batch of equal-rank elements."""
    if not perms:
        return np.zeros(0, dtype=int)
    return _lengths_from_array(image_array(perms), perms[0].n)


def absolute_order_matrix(
    perms: Sequence[SignedPermutation], progress: bool = False
) -> np.ndarray:
    """Boolean matrix M with M[s, t] iff perms[s] <= perms[t] in the absolute order."""
    size = len(perms)
    leq = np.zeros((size, size), dtype=bool)
    if not size:
        return leq
    n = perms[0].n
    arr = image_array(perms)
    inv = np.argsort(arr, axis=1)
    lengths = _lengths_from_array(arr, n)
    rows = range(size)
    if progress:
        rows = tqdm(rows, desc="absolute order", leave=False)
    for s in rows:
        quotient = inv[s][arr]
        leq[s] = lengths == lengths[s] + _lengths_from_array(quotient, n)
    return leq


def is_gamma_connected_perm(tau: SignedPermutation, p: int) -> bool:
    """True iff some orbit of tau meets both {±1..±p} and {±(p+1)..±n}."""
    return any(
        any(abs(x) <= p for x in a) and any(abs(x) > p for x in a) for a in orbits(tau)
    )
