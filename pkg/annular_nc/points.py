"""Canonical point order on X = {±1, …, ±n}.

All listings, witnesses and serialisations use the order
1 < 2 < … < n < -1 < -2 < … < -n. For ground sets of positive integers only
this is the usual integer order.
"""

from typing import Iterable


def point_key(x: int) -> tuple[int, int]:
    """Sort key placing positive points first, then negatives by absolute value."""
    return (0, x) if x > 0 else (1, -x)


def sort_points(points: Iterable[int]) -> tuple[int, ...]:
    """Return the points as a tuple in canonical order."""
    return tuple(sorted(points, key=point_key))


def signed_points(n: int) -> tuple[int, ...]:
    """Return X = (1, …, n, -1, …, -n)."""
    return tuple(range(1, n + 1)) + tuple(range(-1, -n - 1, -1))


def point_index(x: int, n: int) -> int:
    """Position of x in signed_points(n); used to address numpy image arrays."""
    return x - 1 if x > 0 else n - x - 1


def negate(points: Iterable[int]) -> frozenset[int]:
    """Return -A for a set of points A."""
    return frozenset(-x for x in points)
