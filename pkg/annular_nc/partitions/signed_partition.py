"""Set partitions of X = {±1..±n} in canonical form, the maps Omega and Omega~."""

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from annular_nc.errors import RankMismatchError
from annular_nc.groups.signed_perm import SignedPermutation, orbits
from annular_nc.noncross.annulus import AnnulusConfig, is_gamma_connected
from annular_nc.points import negate, point_index, point_key, signed_points, sort_points


@dataclass(frozen=True)
class SignedPartition:
    """
    A partition of X = {±1..±n}.

    Each block is sorted in the canonical point order and blocks are sorted by
    their least element, so equal partitions are equal values.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sort_points(b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        flat = [x for b in blocks for x in b]
        if len(flat) != len(set(flat)) or set(flat) != set(signed_points(self.n)):
            raise ValueError(f"blocks do not partition ±1..±{self.n}: {blocks}")
        object.__setattr__(
            self, "blocks", tuple(sorted(blocks, key=lambda b: point_key(b[0])))
        )

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SignedPartition":
        return cls(n, tuple(tuple(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> "SignedPartition":
        return cls(n, tuple((x,) for x in signed_points(n)))

    @classmethod
    def full(cls, n: int) -> "SignedPartition":
        return cls(n, (signed_points(n),))

    @cached_property
    def block_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b) for b in self.blocks)

    @cached_property
    def _block_index(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def block_of(self, x: int) -> frozenset[int]:
        return self.block_sets[self._block_index[x]]

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Block number of each point of signed_points(n)."""
        return tuple(self._block_index[x] for x in signed_points(self.n))

    @property
    def is_symmetric(self) -> bool:
        blocks = set(self.block_sets)
        return all(negate(b) in blocks for b in blocks)

    @property
    def zero_blocks(self) -> tuple[frozenset[int], ...]:
        return zero_blocks(self)

    def is_gamma_connected(self, cfg: AnnulusConfig) -> bool:
        return any(is_gamma_connected(b, cfg) for b in self.block_sets)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self):
        return "".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict | str) -> "SignedPartition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_blocks(data["n"], data["blocks"])


def _check_rank(pi: SignedPartition, rho: SignedPartition) -> None:
    if pi.n != rho.n:
        raise RankMismatchError(f"rank mismatch: {pi.n} != {rho.n}")


def omega(tau: SignedPermutation) -> SignedPartition:
    """The partition of X into the orbits of tau."""
    return SignedPartition(tau.n, tuple(tuple(a) for a in orbits(tau)))


def omega_tilde(tau: SignedPermutation) -> SignedPartition:
    """Omega(tau) with all zero-blocks merged into a single block."""
    orbit_set = orbits(tau)
    blocks = [tuple(a) for a, z in zip(orbit_set.orbits, orbit_set.zero) if not z]
    merged = [x for a in orbit_set.zero_blocks for x in a]
    if merged:
        blocks.append(tuple(merged))
    return SignedPartition(tau.n, tuple(blocks))


def zero_blocks(pi: SignedPartition) -> tuple[frozenset[int], ...]:
    return tuple(b for b in pi.block_sets if b == negate(b))


def le_refinement(pi: SignedPartition, rho: SignedPartition) -> bool:
    """Reverse refinement: every block of rho is a union of blocks of pi."""
    _check_rank(pi, rho)
    return all(len({rho._block_index[x] for x in block}) == 1 for block in pi.blocks)


def meet(pi: SignedPartition, rho: SignedPartition) -> SignedPartition:
    """Intersection meet: the nonempty intersections of a block of pi with one of rho."""
    _check_rank(pi, rho)
    groups: dict[tuple[int, int], list[int]] = {}
    for x in signed_points(pi.n):
        groups.setdefault((pi._block_index[x], rho._block_index[x]), []).append(x)
    return SignedPartition(pi.n, tuple(tuple(g) for g in groups.values()))


def refinement_matrix(partitions: Sequence[SignedPartition]) -> np.ndarray:
    """Boolean matrix M with M[i, j] iff partitions[i] <= partitions[j]."""
    size = len(partitions)
    leq = np.zeros((size, size), dtype=bool)
    if not size:
        return leq
    n = partitions[0].n
    if any(p.n != n for p in partitions):
        raise RankMismatchError("all partitions must share one rank")
    labels = np.asarray([p.labels for p in partitions], dtype=np.intp)
    for i, pi in enumerate(partitions):
        ok = np.ones(size, dtype=bool)
        for block in pi.blocks:
            cols = labels[:, [point_index(x, n) for x in block]]
            ok &= (cols == cols[:, :1]).all(axis=1)
        leq[i] = ok
    return leq
