"""The type-B non-crossing partitions NC^B(n) of the disc 1 < ... < n < -1 < ... < -n."""

import logging
from functools import lru_cache

from annular_nc.config import Settings, resolve
from annular_nc.groups.signed_perm import SignedPermutation, enumerate_B
from annular_nc.noncross.annulus import AnnulusConfig
from annular_nc.noncross.ground import genus, induced
from annular_nc.partitions.signed_partition import SignedPartition, omega

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _nc_disc(n: int) -> tuple[SignedPartition, ...]:
    gamma = AnnulusConfig.disc(n).gamma
    found = {}
    for tau in enumerate_B(n):
        if genus(tau.to_ground(), gamma) == 0:
            pi = omega(tau)
            found.setdefault(pi, None)
    logger.debug("NC^B(%d) has %d partitions", n, len(found))
    return tuple(found)


def nc_disc_B(n: int, settings: Settings | None = None) -> list[SignedPartition]:
    """NC^B(n) in the order its permutations appear in B_n."""
    settings = resolve(settings)
    settings.require(n, settings.disc_bound, "disc rank")
    return list(_nc_disc(n))


def disc_permutation(pi: SignedPartition) -> SignedPermutation:
    """The element of B_n cycling each block of pi in disc order."""
    gamma = AnnulusConfig.disc(pi.n).gamma
    mapping = {}
    for block in pi.block_sets:
        mapping.update(induced(gamma, block).mapping)
    return SignedPermutation.from_mapping(mapping, pi.n)


def is_in_nc_disc(pi: SignedPartition) -> bool:
    """Membership in NC^B(n) without enumerating it."""
    if not pi.is_symmetric:
        return False
    tau = disc_permutation(pi)
    return genus(tau.to_ground(), AnnulusConfig.disc(pi.n).gamma) == 0