"""Constructions relating NC^B(p, q) to the disc posets and to permutations.

phi glues a pair of disc partitions along the annulus, psi1/psi2 cut a
partition back onto the two circles, tau_from_partition reassembles a
permutation from canonical orbit permutations.
"""

from annular_nc.errors import NotInPosetError, RankMismatchError
from annular_nc.groups.signed_perm import SignedPermutation
from annular_nc.noncross.annulus import AnnulusConfig, is_gamma_connected
from annular_nc.noncross.ground import genus
from annular_nc.partitions.disc import is_in_nc_disc
from annular_nc.partitions.orbits import canonical_perm, orbit_family_member
from annular_nc.partitions.signed_partition import SignedPartition, omega_tilde
from annular_nc.points import negate, signed_points


def _shift(x: int, by: int) -> int:
    """Move a point by `by` in absolute value, keeping its sign."""
    return x + by if x > 0 else x - by


def phi(theta: SignedPartition, omega: SignedPartition) -> SignedPartition:
    """
    Glue theta in NC^B(p) and omega in NC^B(q) into an element of NC^B(p+q).

    The non-zero blocks of theta stay, those of omega move to ±(p+1..p+q), and
    every remaining point goes into one block.
    """
    if not is_in_nc_disc(theta):
        raise NotInPosetError(f"{theta} is not in NC^B({theta.n})")
    if not is_in_nc_disc(omega):
        raise NotInPosetError(f"{omega} is not in NC^B({omega.n})")
    p = theta.n
    n = p + omega.n
    blocks = [b for b in theta.blocks if frozenset(b) != negate(b)]
    blocks += [
        tuple(_shift(x, p) for x in b) for b in omega.blocks if frozenset(b) != negate(b)
    ]
    used = {x for b in blocks for x in b}
    rest = tuple(x for x in signed_points(n) if x not in used)
    if rest:
        blocks.append(rest)
    return SignedPartition(n, tuple(blocks))


def _check_split(pi: SignedPartition, p: int) -> None:
    if not 1 <= p < pi.n:
        raise ValueError(f"split point p={p} must lie in 1..{pi.n - 1}")


def psi1(pi: SignedPartition, p: int) -> SignedPartition:
    """The partition of ±1..±p cut out by the outer circle."""
    _check_split(pi, p)
    blocks = [tuple(x for x in b if abs(x) <= p) for b in pi.blocks]
    return SignedPartition(p, tuple(b for b in blocks if b))


def psi2(pi: SignedPartition, p: int) -> SignedPartition:
    """The partition of ±1..±q cut out by the inner circle, shifted down by p."""
    _check_split(pi, p)
    blocks = [tuple(_shift(x, -p) for x in b if abs(x) > p) for b in pi.blocks]
    return SignedPartition(pi.n - p, tuple(b for b in blocks if b))


def tau_from_partition(nu: SignedPartition, cfg: AnnulusConfig) -> SignedPermutation:
    """
    The signed permutation whose orbits are the blocks of nu, each cycled by mu_A.

    Raises NotInPosetError if some block is not in O^B_nc(p, q).
    """
    if nu.n != cfg.n:
        raise RankMismatchError(f"partition rank {nu.n} != annulus rank {cfg.n}")
    mapping = {}
    for block in nu.block_sets:
        if not orbit_family_member(block, cfg):
            raise NotInPosetError(f"block {sorted(block)} is not in O^B_nc({cfg.p},{cfg.q})")
        mapping.update(canonical_perm(block, cfg).perm.mapping)
    return SignedPermutation.from_mapping(mapping, cfg.n)


def _split_zero_block(pi: SignedPartition, cfg: AnnulusConfig) -> SignedPartition:
    blocks = []
    for block in pi.block_sets:
        if block == negate(block) and is_gamma_connected(block, cfg):
            blocks += [tuple(block & cfg.outer), tuple(block & cfg.inner)]
        else:
            blocks.append(tuple(block))
    return SignedPartition(pi.n, tuple(blocks))


def is_in_ncb(pi: SignedPartition, cfg: AnnulusConfig) -> bool:
    """Membership in NC^B(p, q) by rebuilding the permutation it must come from."""
    if pi.n != cfg.n or not pi.is_symmetric or len(pi.zero_blocks) > 1:
        return False
    try:
        tau = tau_from_partition(_split_zero_block(pi, cfg), cfg)
    except NotInPosetError:
        return False
    return genus(tau.to_ground(), cfg.gamma) == 0 and omega_tilde(tau) == pi


def recover_omega(pi: SignedPartition, cfg: AnnulusConfig) -> SignedPartition:
    """
    Omega(tau) for the unique tau in S^B_nc(p, q) with Omega~(tau) = pi.

    A zero-block meeting both circles is split into its two circle parts.
    """
    if not is_in_ncb(pi, cfg):
        raise NotInPosetError(f"{pi} is not in NC^B({cfg.p},{cfg.q})")
    return _split_zero_block(pi, cfg)
