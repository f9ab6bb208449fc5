"""
Command-line front end.

    annular-nc enumerate --type B-perm -p 1 -q 1
    annular-nc verify t3 -n 4
    annular-nc hasse --poset ncb -p 2 -q 1 --format dot --output ncb.gv
    annular-nc counterexample
    annular-nc check "(1,2,3,5)(4,-6)" -p 4 -q 2

Exit codes: 0 passed, 1 verified false, 2 usage, bound or parse error.
"""

import argparse
import json
import logging
import sys

from annular_nc import __version__
from annular_nc.config import Settings
from annular_nc.errors import AnnularNCError, ConfigurationError, InternalInvariantError
from annular_nc.groups import SignedPermutation, format_cycles, le_B, length_B, parse_cycles
from annular_nc.models import (
    check_params,
    counterexample,
    get_model,
    verify_canonical_permutations,
    verify_meet_identities,
    verify_ncb_membership,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_typeD,
)
from annular_nc.noncross import AnnulusConfig, check_compatible, find_crossing_pattern, genus
from annular_nc.visualization import hasse_to_dot, hasse_to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2

ENUMERATE_TYPES = ("B-perm", "B-part", "D-perm", "D-part")
VERIFIERS = {
    "t1": verify_theorem1,
    "t2": verify_theorem2,
    "d": verify_typeD,
    "meet": verify_meet_identities,
    "canonical": verify_canonical_permutations,
    "membership": verify_ncb_membership,
}
POSETS = ("ncb", "ncd", "interval")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, help="points on the outer circle")
    common.add_argument("-q", type=int, help="points on the inner circle")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--bound", type=int, help="exhaustive p+q bound (overrides ANNULAR_NC_BOUND)")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--jobs", type=int, help="worker processes for the B_n scans")
    common.add_argument("--progress", action="store_true", help="show progress bars")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="annular-nc",
        description="Annular non-crossing permutations and partitions of types B and D.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_ = commands.add_parser(
        "enumerate", parents=[common], help="list S^B_nc, NC^B, S^D_nc or NC^D"
    )
    enumerate_.add_argument("--type", choices=ENUMERATE_TYPES, default="B-perm")

    verify = commands.add_parser("verify", parents=[common], help="run an exhaustive verifier")
    verify.add_argument("theorem", choices=("t1", "t2", "t3", "d", "meet", "canonical", "membership"))
    verify.add_argument("-n", type=int, help="rank for t3")

    hasse = commands.add_parser("hasse", parents=[common], help="export a Hasse diagram")
    hasse.add_argument("--poset", choices=POSETS, default="ncb")

    commands.add_parser(
        "counterexample", parents=[common], help="show that NC^B(p, q) is not a lattice"
    )

    check = commands.add_parser("check", parents=[common], help="test one permutation")
    check.add_argument("perm", help='cycle notation, e.g. "(1,2,3,5)(4,-6)"')
    return parser


def _setup_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _annulus(args) -> tuple[int, int]:
    if args.p is None or args.q is None:
        raise ConfigurationError(f"{args.command} needs -p and -q")
    if args.p < 1 or args.q < 1:
        raise ConfigurationError(f"need p >= 1 and q >= 1, got p={args.p}, q={args.q}")
    return args.p, args.q


def _dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def cmd_enumerate(args, settings: Settings) -> tuple[str, int]:
    p, q = _annulus(args)
    check_params(p, q, limit=settings.bound)
    model = get_model(p, q, settings)
    elements = {
        "B-perm": model.snc_b,
        "B-part": model.ncb,
        "D-perm": model.snc_d,
        "D-part": model.ncd,
    }[args.type]
    logger.info("%s(%d,%d): %d elements", args.type, p, q, len(elements))
    if args.format == "json":
        return _dumps(
            {
                "type": args.type,
                "p": p,
                "q": q,
                "count": len(elements),
                "elements": [x.to_json() for x in elements],
            }
        ), EXIT_OK
    return "".join(f"{x}\n" for x in elements), EXIT_OK


def cmd_verify(args, settings: Settings) -> tuple[str, int]:
    if args.theorem == "t3":
        if args.n is None:
            raise ConfigurationError("verify t3 needs -n")
        report = verify_theorem3(args.n, settings)
    else:
        p, q = _annulus(args)
        report = VERIFIERS[args.theorem](p, q, settings)
    if args.format == "json":
        text = report.dumps(include_elapsed=False) + "\n"
    else:
        params = ", ".join(f"{k}={v}" for k, v in report.params.items())
        lines = [f"{report.theorem}({params}): {'passed' if report.passed else 'FAILED'}"]
        lines += [f"  {name}: {value}" for name, value in report.counts.items()]
        if report.witness:
            lines.append(f"  witness: {json.dumps(report.witness, ensure_ascii=False)}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if report.passed else EXIT_FALSE


def cmd_hasse(args, settings: Settings) -> tuple[str, int]:
    p, q = _annulus(args)
    check_params(p, q, limit=settings.bound)
    model = get_model(p, q, settings)
    if args.poset == "interval":
        poset = model.interval_poset
        label = lambda tau: format_cycles(tau, mirror_shorthand=True)  # noqa: E731
        rank = length_B
    else:
        poset = model.ncb_poset if args.poset == "ncb" else model.ncd_poset
        label = str
        rank = model.partition_rank.__getitem__
    if args.format == "json":
        return hasse_to_json(poset, str), EXIT_OK
    return hasse_to_dot(poset, label=label, rank=rank, name=args.poset), EXIT_OK


def cmd_counterexample(args, settings: Settings) -> tuple[str, int]:
    p = 2 if args.p is None else args.p
    q = 2 if args.q is None else args.q
    report = counterexample(p, q, settings)
    if args.format == "json":
        return report.dumps(include_elapsed=False) + "\n", EXIT_OK if report.passed else EXIT_FALSE

    details = report.details
    perms, parts = details["permutations"], details["partitions"]
    lines = [f"NC^B({p},{q}) is not a lattice" if report.passed else report.summary()]
    for part_name, perm_name in (("pi", "sigma"), ("rho", "tau"), ("pi_o", "sigma_o"), ("rho_o", "tau_o")):
        lines.append(f"  {perm_name} = {perms[perm_name]}")
        lines.append(f"  {part_name} = Omega({perms[perm_name]}) = {parts[part_name]}")
    for relation in details.get("relations", []):
        lines.append(f"  {relation}")
    if "meet" in details:
        lines.append(f"  pi ∧ rho = {details['meet']}, not in NC^B({p},{q})")
        lines.append(f"  rebuilt permutation: {details['meet_permutation']}")
    if "pattern" in details:
        pattern = details["pattern"]
        points = ", ".join(str(x) for x in pattern["points"])
        lines.append(f"  {pattern['kind']} witness: ({points})")
    if report.witness:
        lines.append(f"  failed: {json.dumps(report.witness, ensure_ascii=False)}")
    return "\n".join(lines) + "\n", EXIT_OK if report.passed else EXIT_FALSE


def cmd_check(args, settings: Settings) -> tuple[str, int]:
    p, q = _annulus(args)
    cfg = AnnulusConfig(p, q)
    tau = parse_cycles(args.perm, cfg.n)
    ground = tau.to_ground()
    gamma = SignedPermutation.from_ground(cfg.gamma)
    surface = genus(ground, cfg.gamma)
    member = surface == 0
    witness = check_compatible(ground, cfg.gamma) or find_crossing_pattern(ground, cfg.gamma)
    below = le_B(tau, gamma)
    if args.format == "json":
        data = {
            "perm": tau.to_json(),
            "p": p,
            "q": q,
            "member": member,
            "genus": surface,
            "below_gamma": below,
            "witness": witness.to_json() if witness else None,
        }
        return _dumps(data), EXIT_OK if member else EXIT_FALSE
    verdict = "in" if member else "not in"
    lines = [f"{tau} is {verdict} S^B_nc({p},{q})"]
    if witness:
        lines.append(f"  witness: {witness}")
    lines.append(f"  tau <= gamma: {'yes' if below else 'no'}")
    return "\n".join(lines) + "\n", EXIT_OK if member else EXIT_FALSE


COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "hasse": cmd_hasse,
    "counterexample": cmd_counterexample,
    "check": cmd_check,
}


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _setup_logging(args.verbose)

    try:
        settings = Settings.from_env(bound=args.bound, jobs=args.jobs, progress=args.progress or None)
        text, code = COMMANDS[args.command](args, settings)
    except InternalInvariantError as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (AnnularNCError, ValueError) as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
