"""The annular model: S^B_nc(p, q), NC^B(p, q) and their type-D analogues."""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import cached_property, lru_cache

from tqdm import tqdm

from annular_nc.config import OPT_IN_BOUND, Settings, resolve
from annular_nc.errors import BoundExceededError, ConfigurationError
from annular_nc.groups.signed_perm import (
    SignedPermutation,
    absolute_order_matrix,
    enumerate_B,
    is_in_D,
    le_B,
    length_B,
)
from annular_nc.noncross.annulus import AnnulusConfig
from annular_nc.noncross.ground import genus
from annular_nc.partitions.signed_partition import (
    SignedPartition,
    omega_tilde,
    refinement_matrix,
)
from annular_nc.points import point_key, signed_points
from annular_nc.posets.finite_poset import FinitePoset

logger = logging.getLogger(__name__)


def check_params(p: int, q: int, limit: int = OPT_IN_BOUND) -> None:
    """Validate an annulus (p, q) with p, q >= 1 and p + q <= limit."""
    if p < 1 or q < 1:
        raise ConfigurationError(f"need p >= 1 and q >= 1, got p={p}, q={q}")
    if p + q > limit:
        raise BoundExceededError(f"p+q = {p + q} exceeds the bound {limit}")


def _scan_chunk(p: int, q: int, first: int) -> tuple[list, list]:
    """
    Genus-test the elements of B_n whose image of 1 is `first`.

    Returns the image vectors of the genus-0 elements and of the elements where
    genus 0 and tau <= gamma disagree.
    """
    cfg = AnnulusConfig(p, q)
    gamma = SignedPermutation.from_ground(cfg.gamma)
    members, mismatches = [], []
    for tau in enumerate_B(cfg.n, prefix=(first,)):
        flat = genus(tau.to_ground(), cfg.gamma) == 0
        if flat:
            members.append(tau.images)
        if flat != le_B(tau, gamma):
            mismatches.append(tau.images)
    return members, mismatches


class AnnularModel:
    """
    Everything built over one annulus (p, q).

    The sets are computed on first access and kept; posets are built from
    them with the vectorised order matrices.

    Args:
        p: Points on the outer circle
        q: Points on the inner circle
        settings: Bounds, jobs and progress options (default from the environment)
    """

    def __init__(self, p: int, q: int, settings: Settings | None = None):
        check_params(p, q)
        self.p = p
        self.q = q
        self.n = p + q
        self.settings = resolve(settings)
        self.config = AnnulusConfig(p, q)
        self.gamma = SignedPermutation.from_ground(self.config.gamma)
        self.identity = SignedPermutation.identity(self.n)

    def __repr__(self):
        return f"AnnularModel(p={self.p}, q={self.q})"

    def _chunks(self):
        firsts = signed_points(self.n)
        args = [(self.p, self.q, first) for first in firsts]
        if self.settings.jobs > 1:
            with ProcessPoolExecutor(max_workers=self.settings.jobs) as pool:
                results = pool.map(_scan_chunk, *zip(*args))
                yield from self._progress(results, len(args))
        else:
            yield from self._progress((_scan_chunk(*a) for a in args), len(args))

    def _progress(self, iterable, total):
        if self.settings.progress:
            return tqdm(iterable, total=total, desc=f"S^B_nc({self.p},{self.q})", leave=False)
        return iterable

    @cached_property
    def _scan(self) -> tuple[tuple[SignedPermutation, ...], tuple[SignedPermutation, ...]]:
        members, mismatches = [], []
        for chunk_members, chunk_mismatches in self._chunks():
            members += chunk_members
            mismatches += chunk_mismatches
        if mismatches:
            logger.warning(
                "genus-0 and tau <= gamma disagree on %d elements of B_%d", len(mismatches), self.n
            )
        logger.info("S^B_nc(%d,%d) has %d elements", self.p, self.q, len(members))
        return (
            tuple(SignedPermutation(images) for images in members),
            tuple(SignedPermutation(images) for images in mismatches),
        )

    @property
    def snc_b(self) -> tuple[SignedPermutation, ...]:
        """S^B_nc(p, q): the genus-0 elements of B_n in canonical order."""
        return self._scan[0]

    @property
    def interval_mismatches(self) -> tuple[SignedPermutation, ...]:
        """Elements of B_n where genus 0 and tau <= gamma disagree; empty when consistent."""
        return self._scan[1]

    @cached_property
    def ncb(self) -> tuple[SignedPartition, ...]:
        """NC^B(p, q) = Omega~(S^B_nc(p, q)), listed in the order of S^B_nc."""
        return self._images(self.snc_b)

    @cached_property
    def snc_d(self) -> tuple[SignedPermutation, ...]:
        return tuple(tau for tau in self.snc_b if is_in_D(tau))

    @cached_property
    def ncd(self) -> tuple[SignedPartition, ...]:
        return self._images(self.snc_d)

    @staticmethod
    def _images(perms) -> tuple[SignedPartition, ...]:
        return tuple(omega_tilde(tau) for tau in perms)

    @staticmethod
    def _collision(perms, images) -> tuple[SignedPermutation, SignedPermutation] | None:
        seen = {}
        for tau, pi in zip(perms, images):
            if pi in seen:
                return seen[pi], tau
            seen[pi] = tau
        return None

    @cached_property
    def ncb_collision(self) -> tuple[SignedPermutation, SignedPermutation] | None:
        """Two elements of S^B_nc with the same Omega~ image, or None."""
        return self._collision(self.snc_b, self.ncb)

    @cached_property
    def ncd_collision(self) -> tuple[SignedPermutation, SignedPermutation] | None:
        return self._collision(self.snc_d, self.ncd)

    @cached_property
    def partition_rank(self) -> dict[SignedPartition, int]:
        """Rank of a partition of NC^B(p, q): the length of its permutation."""
        return {pi: length_B(tau) for pi, tau in zip(self.ncb, self.snc_b)}

    @cached_property
    def interval_poset(self) -> FinitePoset:
        return FinitePoset.from_matrix(
            self.snc_b, absolute_order_matrix(self.snc_b, self.settings.progress)
        )

    @cached_property
    def ncb_poset(self) -> FinitePoset:
        return FinitePoset.from_matrix(self.ncb, refinement_matrix(self.ncb))

    @cached_property
    def d_interval_poset(self) -> FinitePoset:
        return FinitePoset.from_matrix(
            self.snc_d, absolute_order_matrix(self.snc_d, self.settings.progress)
        )

    @cached_property
    def ncd_poset(self) -> FinitePoset:
        return FinitePoset.from_matrix(self.ncd, refinement_matrix(self.ncd))

    def orbit_family(self) -> list[frozenset[int]]:
        """O^B_nc(p, q): all orbits of elements of S^B_nc(p, q), by size then canonically."""
        self.settings.require(self.n, self.settings.orbit_family_bound, "p+q")
        family = {a for tau in self.snc_b for a in tau.orbits}
        return sorted(family, key=lambda a: (len(a), [point_key(x) for x in sorted(a, key=point_key)]))


@lru_cache(maxsize=32)
def _cached_model(p: int, q: int, settings: Settings) -> AnnularModel:
    return AnnularModel(p, q, settings)


def get_model(p: int, q: int, settings: Settings | None = None) -> AnnularModel:
    """Shared AnnularModel per (p, q, settings)."""
    check_params(p, q)
    return _cached_model(p, q, resolve(settings))


def build_snc_B(p: int, q: int, settings: Settings | None = None) -> list[SignedPermutation]:
    return list(get_model(p, q, settings).snc_b)


def build_ncb(p: int, q: int, settings: Settings | None = None) -> list[SignedPartition]:
    return list(get_model(p, q, settings).ncb)


def build_snc_D(p: int, q: int, settings: Settings | None = None) -> list[SignedPermutation]:
    return list(get_model(p, q, settings).snc_d)


def build_ncd(p: int, q: int, settings: Settings | None = None) -> list[SignedPartition]:
    return list(get_model(p, q, settings).ncd)


def orbit_family(p: int, q: int, settings: Settings | None = None) -> list[frozenset[int]]:
    return get_model(p, q, settings).orbit_family()
