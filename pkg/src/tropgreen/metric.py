"""Tropical Hilbert projective metric, chart distances and Euclidean comparison."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import NEG_INF, POS_INF, DimensionMismatch, Flavor, is_finite, t_mul
from .linalg import TropVector, proj_equal, projectivize, scalar_product

FULL = "full"
CHART = "chart"
MODES = (FULL, CHART)


def d_hilbert(x: TropVector, y: TropVector):
    """Hilbert projective distance; a nonnegative rational or ``POS_INF``."""
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)} differ")
    if proj_equal(x, y):
        return 0
    d = -t_mul(scalar_product(x, y), scalar_product(y, x))
    assert d is not NEG_INF
    return d


def d_chart(u: Sequence, v: Sequence):
    """Hilbert distance of two chart points read as affine vectors themselves."""
    if len(u) != len(v):
        raise DimensionMismatch(f"chart dimensions {len(u)} and {len(v)} differ")
    if not all(is_finite(a) for a in (*u, *v)):
        raise ValueError("chart points must have rational coordinates")
    if not u:
        return 0
    return d_hilbert(TropVector(Flavor.FT, tuple(u)), TropVector(Flavor.FT, tuple(v)))


def chart_coordinate(points: Sequence[TropVector]) -> int:
    """The last coordinate on which all points agree and are finite.

    Normalizing at such a coordinate is the same as dropping it, which is how
    planar pictures of row and column spaces are usually read off.  Falls
    back to the last coordinate.
    """
    n = len(points[0])
    for k in range(n - 1, -1, -1):
        first = points[0][k]
        if is_finite(first) and all(p[k] == first for p in points):
            return k
    return n - 1


def distance_multiset(points: Sequence[TropVector], mode: str = FULL,
                      coord: int | None = None) -> list:
    """Sorted pairwise distances.

    ``mode="full"`` uses the Hilbert metric on the vectors; ``mode="chart"``
    projects every point with :func:`projectivize` (at ``coord``, or at
    :func:`chart_coordinate` when omitted) and measures with :func:`d_chart`.
    """
    if len(points) < 2:
        raise ValueError("need at least two points")
    if mode == FULL:
        dist = [d_hilbert(a, b) for a, b in combinations(points, 2)]
    elif mode == CHART:
        k = chart_coordinate(points) if coord is None else coord
        charts = [projectivize(p, k) for p in points]
        dist = [d_chart(a, b) for a, b in combinations(charts, 2)]
    else:
        raise ValueError(f"unknown metric mode {mode!r}")
    return sorted(dist)


def diameter(points: Sequence[TropVector], mode: str = FULL):
    if len(points) < 2:
        return 0
    return distance_multiset(points, mode)[-1]


def lipschitz_check(u: Sequence, v: Sequence) -> bool:
    """Check d_H <= sqrt(2) d_E and d_E <= sqrt(n-1) d_H in squared form.

    ``d_H`` is measured between the representatives ``(u, 0)`` and ``(v, 0)``
    and ``d_E`` is the Euclidean distance of the chart points.
    """
    if len(u) != len(v):
        raise DimensionMismatch("chart dimensions differ")
    x = TropVector(Flavor.FT, tuple(u) + (0,))
    y = TropVector(Flavor.FT, tuple(v) + (0,))
    dh = d_hilbert(x, y)
    de2 = sum((Fraction(a) - b) ** 2 for a, b in zip(u, v))
    return dh * dh <= 2 * de2 and de2 <= len(u) * dh * dh


def is_distance(d) -> bool:
    return d is POS_INF or (is_finite(d) and d >= 0)
