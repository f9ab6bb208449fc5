"""Signed set partitions: Omega, refinement, meets, disc posets and the annular constructions."""

from .constructions import is_in_ncb, phi, psi1, psi2, recover_omega, tau_from_partition
from .disc import disc_permutation, is_in_nc_disc, nc_disc_B
from .orbits import CanonicalOrbitPerm, canonical_perm, orbit_family_member, orbit_witness
from .signed_partition import (
    SignedPartition,
    le_refinement,
    meet,
    omega,
    omega_tilde,
    refinement_matrix,
    zero_blocks,
)

__all__ = [
    "CanonicalOrbitPerm",
    "SignedPartition",
    "canonical_perm",
    "disc_permutation",
    "is_in_nc_disc",
    "is_in_ncb",
    "le_refinement",
    "meet",
    "nc_disc_B",
    "omega",
    "omega_tilde",
    "orbit_family_member",
    "orbit_witness",
    "phi",
    "psi1",
    "psi2",
    "recover_omega",
    "refinement_matrix",
    "tau_from_partition",
    "zero_blocks",
]
