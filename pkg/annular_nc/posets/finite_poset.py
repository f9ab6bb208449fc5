"""Finite posets over a boolean order matrix."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Hashable, Mapping, Sequence

import networkx as nx
import numpy as np

from annular_nc.errors import NotAPartialOrderError, NotInPosetError

logger = logging.getLogger(__name__)

UNDEFINED = -1


@dataclass(frozen=True)
class PosetCheck:
    """Outcome of a poset-level check; falsy on failure, with the offending pair."""

    ok: bool
    witness: tuple[Any, ...] | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


class FinitePoset:
    """
    An immutable finite poset.

    Elements are hashable keys (signed permutations, partitions, strings);
    ``leq[i, j]`` is True iff ``elements[i] <= elements[j]``. The matrix is
    validated on construction and stored read-only.
    """

    def __init__(self, elements: Sequence[Hashable], leq: np.ndarray):
        elements = tuple(elements)
        leq = np.array(leq, dtype=bool)
        size = len(elements)
        if len(set(elements)) != size:
            raise NotAPartialOrderError("poset elements must be distinct")
        if leq.shape != (size, size):
            raise NotAPartialOrderError(f"order matrix shape {leq.shape} != ({size}, {size})")
        reason = self.partial_order_violation(leq)
        if reason:
            raise NotAPartialOrderError(reason)
        leq.flags.writeable = False
        self.elements = elements
        self.leq = leq
        self.index = {x: k for k, x in enumerate(elements)}

    @classmethod
    def build(
        cls, elements: Sequence[Hashable], leq_predicate: Callable[[Any, Any], bool]
    ) -> "FinitePoset":
        """Evaluate the predicate on every ordered pair."""
        elements = tuple(elements)
        leq = np.array([[leq_predicate(a, b) for b in elements] for a in elements], dtype=bool)
        return cls(elements, leq.reshape(len(elements), len(elements)))

    @classmethod
    def from_matrix(cls, elements: Sequence[Hashable], leq: np.ndarray) -> "FinitePoset":
        return cls(elements, leq)

    @staticmethod
    def partial_order_violation(rel: np.ndarray) -> str | None:
        """Return why rel is not a partial order, or None."""
        if not rel[np.diag_indices_from(rel)].all():
            return "relation is not reflexive"
        if (rel & rel.T).sum() > len(rel):
            return "relation is not antisymmetric"
        closure = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
        if (closure & ~rel).any():
            return "relation is not transitive"
        return None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        return item in self.index

    def _idx(self, item) -> int:
        try:
            return self.index[item]
        except KeyError:
            raise NotInPosetError(f"{item} is not an element of the poset") from None

    def le(self, a, b) -> bool:
        return bool(self.leq[self._idx(a), self._idx(b)])

    # Hasse diagram

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """cover[i, j] iff j covers i."""
        lt = self.leq.copy()
        lt[np.diag_indices_from(lt)] = False
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cover = lt & ~between
        cover.flags.writeable = False
        return cover

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges as index pairs (lower, upper) in row-major order."""
        return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix)))

    @cached_property
    def hasse_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from(self.covers)
        return graph

    def check_hasse_closure(self) -> bool:
        """The reflexive-transitive closure of the covers gives back leq."""
        closure = nx.transitive_closure_dag(self.hasse_graph)
        rebuilt = np.eye(len(self), dtype=bool)
        for i, j in closure.edges:
            rebuilt[i, j] = True
        return bool((rebuilt == self.leq).all())

    @cached_property
    def bottom(self):
        """The least element, or None."""
        below = self.leq.sum(axis=0)
        hits = np.nonzero(below == 1)[0]
        if len(hits) == 1 and self.leq[hits[0]].all():
            return self.elements[hits[0]]
        return None

    @cached_property
    def top(self):
        """The greatest element, or None."""
        hits = np.nonzero(self.leq.all(axis=0))[0]
        return self.elements[hits[0]] if len(hits) == 1 else None

    # meets and joins

    @staticmethod
    def _bound_table(leq: np.ndarray) -> np.ndarray:
        """
        table[i, j] = greatest common lower bound of i and j, UNDEFINED if none.

        The meet exists iff the common down-set is itself the down-set of some
        element, which is then the meet.
        """
        size = len(leq)
        down_id = {leq[:, k].tobytes(): k for k in range(size)}
        table = np.full((size, size), UNDEFINED, dtype=np.int64)
        for i in range(size):
            common = leq[:, i][:, None] & leq
            for j in range(i, size):
                k = down_id.get(common[:, j].tobytes(), UNDEFINED)
                table[i, j] = table[j, i] = k
        table.flags.writeable = False
        return table

    @cached_property
    def meet_table(self) -> np.ndarray:
        return self._bound_table(self.leq)

    @cached_property
    def join_table(self) -> np.ndarray:
        return self._bound_table(np.ascontiguousarray(self.leq.T))

    def meet_of(self, a, b):
        k = self.meet_table[self._idx(a), self._idx(b)]
        return None if k == UNDEFINED else self.elements[k]

    def join_of(self, a, b):
        k = self.join_table[self._idx(a), self._idx(b)]
        return None if k == UNDEFINED else self.elements[k]

    def is_lattice(self) -> PosetCheck:
        """Every pair has a meet and a join; on failure the first bad pair is returned."""
        for table, what in ((self.meet_table, "meet"), (self.join_table, "join")):
            bad = np.argwhere(table == UNDEFINED)
            if len(bad):
                i, j = (int(v) for v in bad[0])
                logger.debug("not a lattice: no %s for elements %d and %d", what, i, j)
                return PosetCheck(False, (self.elements[i], self.elements[j]), f"no {what}")
        return PosetCheck(True)

    # ranks and Moebius

    def rank_polynomial(self, rank_fn: Callable[[Any], int]) -> list[int]:
        """Coefficient k counts the elements of rank k."""
        ranks = [rank_fn(x) for x in self.elements]
        if not ranks:
            return []
        coefficients = [0] * (max(ranks) + 1)
        for r in ranks:
            coefficients[r] += 1
        return coefficients

    @cached_property
    def _mobius_cache(self) -> dict[tuple[int, int], int]:
        return {}

    def _mobius(self, i: int, j: int) -> int:
        key = (i, j)
        cache = self._mobius_cache
        if key not in cache:
            if i == j:
                cache[key] = 1
            else:
                inside = np.nonzero(self.leq[i] & self.leq[:, j])[0]
                cache[key] = -sum(self._mobius(i, int(k)) for k in inside if k != j)
        return cache[key]

    def moebius(self, a, b) -> int:
        i, j = self._idx(a), self._idx(b)
        if not self.leq[i, j]:
            raise NotInPosetError(f"moebius needs a <= b, got {a} and {b}")
        # fill the cache bottom-up over the interval
        for k in sorted(np.nonzero(self.leq[i] & self.leq[:, j])[0], key=lambda k: self.leq[:, k].sum()):
            self._mobius(i, int(k))
        return self._mobius(i, j)

    def moebius_bottom_top(self) -> int | None:
        if self.bottom is None or self.top is None:
            return None
        return self.moebius(self.bottom, self.top)

    def to_json(self, label: Callable[[Any], str] = str) -> dict:
        return {
            "elements": [label(x) for x in self.elements],
            "covers": [list(edge) for edge in self.covers],
        }


def check_order_iso(
    source: FinitePoset, target: FinitePoset, f: Mapping[Any, Any] | Callable[[Any], Any]
) -> PosetCheck:
    """
    Check that f is a bijection source -> target with a <= b iff f(a) <= f(b).

    The witness is the offending element or pair.
    """
    fn = f.__getitem__ if isinstance(f, Mapping) else f
    images = []
    for x in source.elements:
        y = fn(x)
        if y not in target:
            return PosetCheck(False, (x, y), "image outside the target poset")
        images.append(target.index[y])
    if len(set(images)) != len(images):
        seen = {}
        for x, k in zip(source.elements, images):
            if k in seen:
                return PosetCheck(False, (seen[k], x), "map is not injective")
            seen[k] = x
    if len(images) != len(target):
        return PosetCheck(False, None, "map is not surjective")
    order = np.asarray(images, dtype=np.intp)
    pulled = target.leq[np.ix_(order, order)]
    mismatch = np.argwhere(pulled != source.leq)
    if len(mismatch):
        i, j = (int(v) for v in mismatch[0])
        return PosetCheck(
            False,
            (source.elements[i], source.elements[j]),
            "order relation not preserved" if source.leq[i, j] else "order relation not reflected",
        )
    return PosetCheck(True)
