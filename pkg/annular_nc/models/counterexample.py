"""Two partitions of NC^B(p, q), p, q >= 2, without a meet."""

import logging

from annular_nc.config import Settings, resolve
from annular_nc.errors import ConfigurationError
from annular_nc.groups.signed_perm import SignedPermutation
from annular_nc.models.annular import check_params, get_model
from annular_nc.models.reports import ReportCollector, VerificationReport
from annular_nc.models.verifiers import model_consistent
from annular_nc.noncross.patterns import WitnessKind, check_compatible, find_crossing_pattern
from annular_nc.partitions import meet, omega, tau_from_partition

logger = logging.getLogger(__name__)


def counterexample_perms(p: int, q: int) -> dict[str, SignedPermutation]:
    """sigma, tau and the two transpositions sigma_o, tau_o below both of them."""
    if p < 2 or q < 2:
        raise ConfigurationError(f"need p >= 2 and q >= 2, got p={p}, q={q}")
    n = p + q
    a, b = p + 1, p + 2

    def pair(*cycle):
        return [cycle, tuple(-x for x in cycle)]

    def perm(cycles):
        mapping = {}
        for cycle in cycles:
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                mapping[x] = y
        return SignedPermutation.from_mapping(mapping, n)

    return {
        "sigma": perm(pair(1, 2, a, b)),
        "tau": perm(pair(1, -b, a, -2)),
        "sigma_o": perm(pair(1, a)),
        "tau_o": perm(pair(2, b)),
    }


def counterexample(p: int = 2, q: int = 2, settings: Settings | None = None) -> VerificationReport:
    """
    Show that NC^B(p, q) is not a lattice.

    pi_o, rho_o lie below both pi and rho but no element of NC^B(p, q) sits
    between them; the intersection meet of pi and rho rebuilds into a
    permutation displaying the AC-3 pattern.
    """
    settings = resolve(settings)
    perms = counterexample_perms(p, q)
    check_params(p, q, limit=settings.bound)
    model = get_model(p, q, settings)
    cfg = model.config
    poset = model.ncb_poset
    collector = ReportCollector("NCB-not-lattice", p=p, q=q)
    if not model_consistent(collector, model):
        return collector.report()

    parts = {
        "pi": omega(perms["sigma"]),
        "rho": omega(perms["tau"]),
        "pi_o": omega(perms["sigma_o"]),
        "rho_o": omega(perms["tau_o"]),
    }
    collector.details["permutations"] = {k: str(v) for k, v in perms.items()}
    collector.details["partitions"] = {k: str(v) for k, v in parts.items()}

    for name, pi in parts.items():
        collector.check(pi in poset, "membership", partition=name)
    if collector.witness is not None:
        return collector.report()

    relations = [(low, high) for low in ("pi_o", "rho_o") for high in ("pi", "rho")]
    for low, high in relations:
        collector.check(poset.le(parts[low], parts[high]), "below", pair=[low, high])
    collector.details["relations"] = [f"{low} <= {high}" for low, high in relations]

    sandwiched = [
        nu
        for nu in poset.elements
        if all(poset.le(parts[low], nu) and poset.le(nu, parts[high]) for low, high in relations)
    ]
    collector.set_count("sandwiched", len(sandwiched))
    collector.check(
        not sandwiched, "no-sandwich", partition=str(sandwiched[0]) if sandwiched else None
    )
    collector.check(poset.meet_of(parts["pi"], parts["rho"]) is None, "no-meet")
    collector.check(poset.join_of(parts["pi_o"], parts["rho_o"]) is None, "no-join")

    nu = meet(parts["pi"], parts["rho"])
    collector.details["meet"] = str(nu)
    collector.check(nu not in poset, "meet-outside", meet=str(nu))
    rebuilt = tau_from_partition(nu, cfg)
    collector.details["meet_permutation"] = str(rebuilt)
    ground = rebuilt.to_ground()
    collector.check(check_compatible(ground, cfg.gamma) is None, "meet-compatible")
    pattern = find_crossing_pattern(ground, cfg.gamma)
    if collector.check(
        pattern is not None and pattern.kind is WitnessKind.AC3,
        "meet-shows-ac3",
        pattern=pattern.to_json() if pattern else None,
    ):
        collector.details["pattern"] = pattern.to_json()
        logger.debug("rebuilt meet %s displays %s", rebuilt, pattern)
    return collector.report()


def counterexample_ncb22(settings: Settings | None = None) -> VerificationReport:
    return counterexample(2, 2, settings)
