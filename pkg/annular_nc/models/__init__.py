"""Annular models, their exhaustive verifiers and the non-lattice counterexample."""

from annular_nc.partitions.orbits import orbit_family_member

from .annular import (
    AnnularModel,
    build_ncb,
    build_ncd,
    build_snc_B,
    build_snc_D,
    check_params,
    get_model,
    orbit_family,
)
from .counterexample import counterexample, counterexample_ncb22, counterexample_perms
from .reports import ReportCollector, VerificationReport
from .verifiers import (
    verify_canonical_permutations,
    verify_meet_identities,
    verify_ncb_membership,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_typeD,
)

__all__ = [
    "AnnularModel",
    "ReportCollector",
    "VerificationReport",
    "build_ncb",
    "build_ncd",
    "build_snc_B",
    "build_snc_D",
    "check_params",
    "counterexample",
    "counterexample_ncb22",
    "counterexample_perms",
    "get_model",
    "orbit_family",
    "orbit_family_member",
    "verify_canonical_permutations",
    "verify_meet_identities",
    "verify_ncb_membership",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_typeD",
]
