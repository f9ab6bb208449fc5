"""Cycle notation for signed permutations.

Input is whitespace-insensitive, e.g. ``(1,2,3,5)(4,-6)``; a missing mirror
cycle -C is completed from C. Output lists the zero cycles and one cycle of
each mirror pair, ordered by their least point, followed by the mirrors.
"""

import re

from annular_nc.errors import CycleNotationError
from annular_nc.groups.signed_perm import SignedPermutation
from annular_nc.points import point_key

IDENTITY_SPELLINGS = ("", "()", "id")

_CYCLES_RE = re.compile(r"(\(-?[1-9][0-9]*(,-?[1-9][0-9]*)*\))+")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> SignedPermutation:
    """
    Parse cycle notation into an element of B_n.

    Raises CycleNotationError on bad syntax, points outside ±1..±n, a point
    used twice, or an explicit cycle that contradicts an implied mirror.
    """
    compact = re.sub(r"\s+", "", text)
    if compact in IDENTITY_SPELLINGS:
        return SignedPermutation.identity(n)
    if not _CYCLES_RE.fullmatch(compact):
        raise CycleNotationError(f"cannot parse cycle notation {text!r}")

    mapping: dict[int, int] = {}
    for body in _CYCLE_RE.findall(compact):
        cycle = [int(v) for v in body.split(",")]
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if not 1 <= abs(a) <= n:
                raise CycleNotationError(f"point {a} outside ±1..±{n}")
            if a in mapping:
                raise CycleNotationError(f"point {a} appears twice")
            mapping[a] = b

    explicit = dict(mapping)
    for a, b in explicit.items():
        if -a not in mapping:
            mapping[-a] = -b
        elif mapping[-a] != -b:
            raise CycleNotationError(
                f"cycle through {a} conflicts with its mirror ({-a} -> {mapping[-a]})"
            )
    try:
        return SignedPermutation.from_mapping(mapping, n)
    except ValueError as exc:
        raise CycleNotationError(f"{text!r} is not a signed permutation: {exc}") from exc


def _cycle_text(cycle) -> str:
    return "(" + ",".join(str(x) for x in cycle) + ")"


def format_cycles(tau: SignedPermutation, mirror_shorthand: bool = False) -> str:
    """
    Render tau in cycle notation, ``id`` for the identity.

    With mirror_shorthand a mirror pair C, -C is written once as ((C)).
    """
    cycles = [c for c in tau.cycles() if len(c) > 1]
    if not cycles:
        return "id"
    reps = []
    for cycle in cycles:
        mirror_start = min((-x for x in cycle), key=point_key)
        if set(cycle) == {-x for x in cycle}:
            reps.append((cycle, True))
        elif point_key(cycle[0]) < point_key(mirror_start):
            reps.append((cycle, False))
    reps.sort(key=lambda item: point_key(item[0][0]))

    if mirror_shorthand:
        return "".join(
            _cycle_text(c) if zero else "(" + _cycle_text(c) + ")" for c, zero in reps
        )
    mirrors = [tuple(-x for x in c) for c, zero in reps if not zero]
    return "".join(_cycle_text(c) for c, _ in reps) + "".join(
        _cycle_text(c) for c in mirrors
    )
