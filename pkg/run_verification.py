#!/usr/bin/env python3
"""
Run every verifier for all annuli up to the configured bound.

Set ANNULAR_NC_BOUND (default 5, at most 6) to widen the scan; the summary
table lists one row per verifier run.
"""

import sys

from annular_nc.config import Settings
from annular_nc.errors import BoundExceededError
from annular_nc.models import (
    counterexample,
    verify_canonical_permutations,
    verify_meet_identities,
    verify_ncb_membership,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_typeD,
)


def runs(settings: Settings):
    annuli = [
        (p, n - p) for n in range(2, settings.bound + 1) for p in range(n - 1, 0, -1)
    ]
    for p, q in annuli:
        yield verify_theorem1, (p, q)
        yield verify_theorem2, (p, q)
        yield verify_typeD, (p, q)
        if p + q <= settings.orbit_family_bound:
            yield verify_meet_identities, (p, q)
            yield verify_canonical_permutations, (p, q)
            yield verify_ncb_membership, (p, q)
    for n in range(2, settings.bound + 1):
        yield verify_theorem3, (n,)
    if settings.bound >= 4:
        yield counterexample, (2, 2)


def main():
    """Run the verifiers and print a summary table."""
    settings = Settings.from_env()
    print(f"Running all verifiers up to p+q = {settings.bound}...\n")
    print(f"{'check':<24}{'params':<12}{'result':<8}{'seconds':>8}")

    failed = 0
    for verifier, args in runs(settings):
        try:
            report = verifier(*args, settings)
        except BoundExceededError as exc:
            print(f"{verifier.__name__:<24}{str(args):<12}skipped ({exc})")
            continue
        params = ",".join(str(v) for v in report.params.values())
        verdict = "ok" if report.passed else "FAILED"
        print(f"{report.theorem:<24}{params:<12}{verdict:<8}{report.elapsed_ms / 1000:>8.2f}")
        if not report.passed:
            failed += 1
            print(f"    witness: {report.witness}")

    print(f"\n{failed} failed" if failed else "\nAll checks passed!")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
