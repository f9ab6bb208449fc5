"""Exhaustive verifiers for the annular non-crossing theory at small rank.

Each verifier recomputes both sides of a statement by independent code paths
(genus against the length order, numpy order matrices against scalar
predicates) and returns a VerificationReport; none of them raises on a
failed statement.
"""

import logging
from itertools import combinations

import numpy as np

from annular_nc.config import OPT_IN_BOUND, Settings, resolve
from annular_nc.errors import BoundExceededError, ConfigurationError, NotInPosetError
from annular_nc.groups.signed_perm import (
    absolute_order_matrix,
    compose,
    enumerate_B,
    enumerate_D,
    inverse,
    is_gamma_connected_perm,
    le_B,
    le_D,
)
from annular_nc.models.annular import check_params, get_model
from annular_nc.models.reports import ReportCollector, VerificationReport
from annular_nc.noncross.annulus import is_gamma_connected, restrict_to_circle
from annular_nc.noncross.ground import genus, induced
from annular_nc.noncross.patterns import WitnessKind, check_compatible, find_crossing_pattern
from annular_nc.partitions import (
    canonical_perm,
    is_in_ncb,
    le_refinement,
    meet,
    nc_disc_B,
    omega,
    omega_tilde,
    orbit_family_member,
    phi,
    psi1,
    psi2,
    refinement_matrix,
    tau_from_partition,
)
from annular_nc.points import negate, point_key
from annular_nc.posets.finite_poset import UNDEFINED, check_order_iso

logger = logging.getLogger(__name__)


def _within_bound(p: int, q: int, settings: Settings) -> None:
    check_params(p, q, limit=settings.bound)


def _pair_text(check) -> list[str] | None:
    return [str(x) for x in check.witness] if check.witness else None


def model_consistent(collector: ReportCollector, model, type_d: bool = False) -> bool:
    """Record whether the model built cleanly: genus 0 matched tau <= gamma and Omega~ was injective."""
    mismatches = model.interval_mismatches
    agreed = collector.check(
        not mismatches, "genus-vs-order", element=str(mismatches[0]) if mismatches else None
    )
    collision = model.ncd_collision if type_d else model.ncb_collision
    injective = collector.check(
        collision is None,
        "omega-injective",
        pair=[str(tau) for tau in collision] if collision else None,
    )
    return agreed and injective


def _check_hasse(collector: ReportCollector, **posets) -> None:
    for name, poset in posets.items():
        collector.check(poset.check_hasse_closure(), "hasse-closure", poset=name)


def verify_theorem1(p: int, q: int, settings: Settings | None = None) -> VerificationReport:
    """
    Genus 0 against gamma equals the interval [id, gamma] of the absolute order.

    Also checks, per element: the three-way equivalence for gamma-disconnected
    permutations (genus, both circles separately, length order); for
    gamma-connected members that no orbit is a zero orbit and that
    tau^-1 gamma is again a member.
    """
    settings = resolve(settings)
    _within_bound(p, q, settings)
    model = get_model(p, q, settings)
    cfg, gamma = model.config, model.gamma
    collector = ReportCollector("B-interval", p=p, q=q)

    for tau in enumerate_B(model.n):
        collector.count("elements")
        ground = tau.to_ground()
        flat = genus(ground, cfg.gamma) == 0
        below = le_B(tau, gamma)
        collector.check(flat == below, "genus-vs-order", element=str(tau), genus_zero=flat)
        if flat:
            collector.count("snc")
        if not is_gamma_connected_perm(tau, p):
            split = all(
                genus(*restrict_to_circle(ground, cfg, circle)) == 0 for circle in ("Y", "Z")
            )
            collector.check(
                split == flat == below, "disconnected-equivalence", element=str(tau)
            )
            collector.count("disconnected", flat)
        elif flat:
            collector.count("connected")
            collector.check(
                not tau.orbits.zero_count, "connected-zero-orbit", element=str(tau)
            )
            complement = compose(inverse(tau), gamma)
            collector.check(
                genus(complement.to_ground(), cfg.gamma) == 0,
                "complement",
                element=str(tau),
            )
    return collector.report()


def verify_theorem2(p: int, q: int, settings: Settings | None = None) -> VerificationReport:
    """
    Omega~ is a poset isomorphism from S^B_nc(p, q) onto NC^B(p, q).

    The negative control requires an element below gamma whose plain orbit
    partition is not below Omega(gamma).
    """
    settings = resolve(settings)
    _within_bound(p, q, settings)
    model = get_model(p, q, settings)
    collector = ReportCollector("B-isomorphism", p=p, q=q)
    if not model_consistent(collector, model):
        return collector.report()

    perms = model.snc_b
    images = model.ncb
    collector.set_count("elements", len(perms))
    collector.set_count("pairs", len(perms) ** 2)
    source, target = model.interval_poset, model.ncb_poset
    collector.set_count("covers", len(source.covers))

    collector.check(
        all(source.le(tau, model.gamma) and source.le(model.identity, tau) for tau in perms),
        "interval-bounds",
    )
    iso = check_order_iso(source, target, dict(zip(perms, images)))
    collector.check(bool(iso), "order-isomorphism", pair=_pair_text(iso), reason=iso.reason)
    _check_hasse(collector, interval=source, ncb=target)
    moebius = target.moebius_bottom_top()
    if moebius is not None:
        collector.details["moebius"] = int(moebius)

    if model.n <= settings.oracle_bound:
        group = list(enumerate_B(model.n))
        below = absolute_order_matrix(group, settings.progress)
        refined = refinement_matrix([omega_tilde(tau) for tau in group])
        bad = np.argwhere(below & ~refined)
        collector.set_count("group-pairs", int(below.sum()))
        collector.check(
            not len(bad),
            "omega-tilde-monotone",
            pair=[str(group[k]) for k in bad[0]] if len(bad) else None,
        )

    top = omega(model.gamma)
    control = next((tau for tau in perms if not le_refinement(omega(tau), top)), None)
    collector.check(
        control is not None,
        "negative-control",
        reason="Omega preserved the order below gamma",
    )
    if control is not None:
        collector.details["omega_not_monotone"] = str(control)
    return collector.report()


def verify_theorem3(n: int, settings: Settings | None = None) -> VerificationReport:
    """NC^B(n-1, 1) is closed under intersection meets and is a lattice with that meet."""
    settings = resolve(settings)
    if n < 2:
        raise ConfigurationError(f"need n >= 2, got {n}")
    if n > OPT_IN_BOUND:
        raise BoundExceededError(f"n = {n} exceeds the bound {OPT_IN_BOUND}")
    model = get_model(n - 1, 1, settings)
    collector = ReportCollector("B-lattice", n=n)
    if not model_consistent(collector, model):
        return collector.report()

    parts = model.ncb
    poset = model.ncb_poset
    index = poset.index
    table = poset.meet_table
    collector.set_count("elements", len(parts))
    for i, j in combinations(range(len(parts)), 2):
        collector.count("pairs")
        nu = meet(parts[i], parts[j])
        k = index.get(nu, UNDEFINED)
        if not collector.check(
            k != UNDEFINED, "meet-closed", pair=[str(parts[i]), str(parts[j])], meet=str(nu)
        ):
            continue
        collector.check(
            table[i, j] == k, "poset-meet", pair=[str(parts[i]), str(parts[j])], meet=str(nu)
        )
    lattice = poset.is_lattice()
    collector.check(bool(lattice), "lattice", pair=_pair_text(lattice), reason=lattice.reason)
    _check_hasse(collector, ncb=poset)
    moebius = poset.moebius_bottom_top()
    if moebius is not None:
        collector.details["moebius"] = int(moebius)
    return collector.report()


def verify_typeD(p: int, q: int, settings: Settings | None = None) -> VerificationReport:
    """
    S^D_nc(p, q) is the interval [id, gamma] of D_n and Omega~ maps it
    isomorphically onto NC^D(p, q); for q = 1 the latter is a lattice whose
    zero-blocks contain ±n.
    """
    settings = resolve(settings)
    _within_bound(p, q, settings)
    model = get_model(p, q, settings)
    n, gamma = model.n, model.gamma
    collector = ReportCollector("D-analogues", p=p, q=q)
    if not model_consistent(collector, model, type_d=True):
        return collector.report()

    members = set(model.snc_d)
    collector.set_count("elements", len(members))
    below = set()
    for tau in enumerate_D(n):
        collector.count("group")
        if le_B(tau, gamma):
            below.add(tau)
    extra = sorted(below ^ members, key=lambda t: t.sort_key)
    collector.check(not extra, "D-interval", element=str(extra[0]) if extra else None)

    if n <= settings.oracle_bound:
        by_d_length = {tau for tau in enumerate_D(n) if le_D(tau, gamma, settings)}
        collector.check(by_d_length == members, "D-length-order")

    iso = check_order_iso(model.d_interval_poset, model.ncd_poset, dict(zip(model.snc_d, model.ncd)))
    collector.check(bool(iso), "order-isomorphism", pair=_pair_text(iso), reason=iso.reason)
    _check_hasse(collector, d_interval=model.d_interval_poset, ncd=model.ncd_poset)

    if q == 1:
        lattice = model.ncd_poset.is_lattice()
        collector.check(bool(lattice), "lattice", pair=_pair_text(lattice), reason=lattice.reason)
        for pi in model.ncd:
            for block in pi.zero_blocks:
                collector.check(n in block, "zero-block-holds-n", partition=str(pi))
        for tau in model.snc_d:
            zeros = tau.orbits.zero_blocks
            if zeros:
                collector.count("with-zero-orbits")
                inner = frozenset({n, -n})
                collector.check(
                    len(zeros) == 2
                    and inner in zeros
                    and all(z == inner or all(abs(x) < n for x in z) for z in zeros),
                    "zero-orbit-shape",
                    element=str(tau),
                )
    return collector.report()


def verify_meet_identities(p: int, q: int, settings: Settings | None = None) -> VerificationReport:
    """
    The gluing and cutting maps against intersection meets.

    phi is injective with image the gamma-disconnected part of NC^B(p, q) and
    commutes with meets; psi1/psi2 land in the disc posets and commute with
    meets; a meet with a zero-block or without a connected block stays in
    NC^B(p, q); otherwise its rebuilt permutation is compatible and at worst
    shows AC-3, and for q = 1 it is non-crossing.
    """
    settings = resolve(settings)
    check_params(p, q, limit=settings.orbit_family_bound)
    model = get_model(p, q, settings)
    cfg = model.config
    collector = ReportCollector("meet-identities", p=p, q=q)
    if not model_consistent(collector, model):
        return collector.report()

    outer_disc = nc_disc_B(p, settings)
    inner_disc = nc_disc_B(q, settings)
    ncb = set(model.ncb)

    glued = {}
    for theta in outer_disc:
        for omega_ in inner_disc:
            glued[theta, omega_] = phi(theta, omega_)
    collector.set_count("phi-pairs", len(glued))
    collector.check(len(set(glued.values())) == len(glued), "phi-injective")
    disconnected = {pi for pi in model.ncb if not pi.is_gamma_connected(cfg)}
    collector.check(set(glued.values()) == disconnected, "phi-range")

    for (t1, w1), first in glued.items():
        for (t2, w2), second in glued.items():
            collector.count("phi-meets")
            collector.check(
                phi(meet(t1, t2), meet(w1, w2)) == meet(first, second),
                "phi-meet",
                pair=[str(first), str(second)],
            )

    outer_set, inner_set = set(outer_disc), set(inner_disc)
    for pi in model.ncb:
        collector.check(psi1(pi, p) in outer_set, "psi1-membership", partition=str(pi))
        collector.check(psi2(pi, p) in inner_set, "psi2-membership", partition=str(pi))

    for pi, rho in combinations(model.ncb, 2):
        collector.count("pairs")
        nu = meet(pi, rho)
        pair = [str(pi), str(rho)]
        collector.check(nu.is_symmetric, "meet-symmetric", pair=pair)
        for cut in (psi1, psi2):
            collector.check(
                cut(nu, p) == meet(cut(pi, p), cut(rho, p)), f"{cut.__name__}-meet", pair=pair
            )
        if nu.zero_blocks or not nu.is_gamma_connected(cfg):
            collector.check(nu in ncb, "meet-membership", pair=pair, meet=str(nu))
            continue
        collector.count("connected-meets")
        if not collector.check(
            all(orbit_family_member(b, cfg) for b in nu.block_sets),
            "meet-blocks-in-orbit-family",
            pair=pair,
        ):
            continue
        tau = tau_from_partition(nu, cfg)
        ground = tau.to_ground()
        collector.check(check_compatible(ground, cfg.gamma) is None, "meet-compatible", pair=pair)
        pattern = find_crossing_pattern(ground, cfg.gamma)
        collector.check(
            pattern is None or pattern.kind is WitnessKind.AC3,
            "meet-pattern",
            pair=pair,
            pattern=pattern.to_json() if pattern else None,
        )
        if nu not in ncb:
            collector.count("meets-outside")
            collector.check(pattern is not None, "meet-outside-needs-ac3", pair=pair)
        if q == 1:
            collector.check(genus(ground, cfg.gamma) == 0, "meet-noncrossing", pair=pair)
    return collector.report()


def verify_canonical_permutations(
    p: int, q: int, settings: Settings | None = None
) -> VerificationReport:
    """
    Canonical orbit permutations and the orbit family O^B_nc(p, q).

    Covers: the constructive membership test against the orbit family built
    from S^B_nc, independence of mu_A from the chosen (y, z), mu_B restricted
    to A equals mu_A, every orbit of every member induces mu_A, unions of
    orbits inside the family induce non-crossing permutations relative to
    mu_A, and downward closure of the non-symmetric members.
    """
    settings = resolve(settings)
    check_params(p, q, limit=settings.orbit_family_bound)
    model = get_model(p, q, settings)
    cfg = model.config
    collector = ReportCollector("canonical-permutations", p=p, q=q)
    if not model_consistent(collector, model):
        return collector.report()

    family = set(model.orbit_family())
    collector.set_count("family", len(family))
    points = cfg.points
    for size in range(1, len(points) + 1):
        for subset in combinations(points, size):
            subset = frozenset(subset)
            collector.count("subsets")
            collector.check(
                orbit_family_member(subset, cfg) == (subset in family),
                "membership-test",
                subset=sorted(subset, key=point_key),
            )

    mu = {a: canonical_perm(a, cfg).perm for a in family}
    for a in family:
        if is_gamma_connected(a, cfg):
            for y in a & cfg.outer:
                for z in a & cfg.inner:
                    collector.check(
                        canonical_perm(a, cfg, y, z).perm == mu[a],
                        "choice-independence",
                        subset=sorted(a, key=point_key),
                        y=y,
                        z=z,
                    )
        for b in family:
            if a < b:
                collector.check(
                    induced(mu[b], a) == mu[a], "restriction", inner=sorted(a), outer=sorted(b)
                )
        if a.isdisjoint(negate(a)):
            for size in range(1, len(a)):
                for part in combinations(sorted(a), size):
                    collector.check(
                        frozenset(part) in family, "downward-closure", subset=list(part)
                    )

    for tau in model.snc_b:
        ground = tau.to_ground()
        orbit_list = list(tau.orbits)
        for orbit in orbit_list:
            collector.check(
                induced(ground, orbit) == mu[orbit], "orbit-order", element=str(tau)
            )
        for size in range(2, len(orbit_list) + 1):
            for group in combinations(orbit_list, size):
                union = frozenset().union(*group)
                if union not in family:
                    continue
                collector.count("unions")
                collector.check(
                    genus(induced(ground, union), mu[union]) == 0,
                    "union-noncrossing",
                    element=str(tau),
                    union=sorted(union, key=point_key),
                )
        for zero_outer in tau.orbits.zero_blocks:
            for zero_inner in tau.orbits.zero_blocks:
                if zero_outer <= cfg.outer and zero_inner <= cfg.inner:
                    union = zero_outer | zero_inner
                    collector.count("zero-pairs")
                    collector.check(
                        genus(induced(ground, union), induced(cfg.gamma, union)) == 0,
                        "zero-pair-noncrossing",
                        element=str(tau),
                    )
    return collector.report()


def verify_ncb_membership(p: int, q: int, settings: Settings | None = None) -> VerificationReport:
    """The reconstruction test is_in_ncb agrees with the enumerated NC^B(p, q)."""
    settings = resolve(settings)
    check_params(p, q, limit=settings.orbit_family_bound)
    model = get_model(p, q, settings)
    collector = ReportCollector("ncb-membership", p=p, q=q)
    if not model_consistent(collector, model):
        return collector.report()
    ncb = set(model.ncb)
    for pi in model.ncb:
        collector.check(is_in_ncb(pi, model.config), "member-accepted", partition=str(pi))
    for tau in enumerate_B(model.n):
        candidate = omega(tau)
        collector.count("candidates")
        try:
            accepted = is_in_ncb(candidate, model.config)
        except NotInPosetError:
            accepted = False
        collector.check(
            accepted == (candidate in ncb), "candidate-agrees", partition=str(candidate)
        )
    return collector.report()
