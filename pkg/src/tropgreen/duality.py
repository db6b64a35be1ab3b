"""The duality maps between the row and column space of a matrix."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .convex import NotAMember, col_space, member, row_space
from .core import NEG_INF, Flavor, TropicalError
from .linalg import TropMatrix, TropVector, combine, mat_vec, vec_mat
from .metric import d_hilbert


class FlavorUnsupported(TropicalError):
    pass


def _negate(x: TropVector) -> TropVector:
    return TropVector(x.flavor, tuple(-a for a in x.entries))


def _check_flavor(a: TropMatrix):
    if a.flavor is Flavor.T:
        raise FlavorUnsupported("the duality maps need FT or TBar; T lacks -(-inf)")


def theta(a: TropMatrix, x: TropVector, *, check: bool = True) -> TropVector:
    """Row-space point ``x`` to the column vector ``a (x) (-x)^T``."""
    _check_flavor(a)
    if check and not member(x, row_space(a)):
        raise NotAMember(f"{x} is not in the row space")
    return mat_vec(a, _negate(x))


def theta_prime(a: TropMatrix, y: TropVector, *, check: bool = True) -> TropVector:
    """Column-space point ``y`` to the row vector ``(-y)^T (x) a``."""
    _check_flavor(a)
    if check and not member(y, col_space(a)):
        raise NotAMember(f"{y} is not in the column space")
    return vec_mat(_negate(y), a)


def sample_points(generators, flavor: Flavor, rng: random.Random, count: int,
                  spread: int = 6) -> list[TropVector]:
    """The generators followed by ``count`` seeded random tropical combinations."""
    pts = list(generators)
    k = len(pts)
    if k == 0:
        return pts
    for _ in range(count):
        coeffs = [rng.randint(-spread, spread) for _ in range(k)]
        if flavor is not Flavor.FT:
            coeffs = [NEG_INF if rng.random() < 0.2 else c for c in coeffs]
            if all(c is NEG_INF for c in coeffs):
                coeffs[rng.randrange(k)] = 0
        pts.append(combine(coeffs, pts[:k]).with_flavor(flavor))
    return pts


@dataclass
class DualityReport:
    passed: bool = True
    checked_pairs: int = 0
    checked_points: int = 0
    failures: list = field(default_factory=list)

    def fail(self, what: str, *data):
        self.passed = False
        self.failures.append((what,) + tuple(str(d) for d in data))


def check_duality(a: TropMatrix, samples: int = 20, seed: int = 0) -> DualityReport:
    """Check the inverse, order-reversing, scaling and isometry properties on
    weak-basis points and ``samples`` random points of each space."""
    _check_flavor(a)
    rng = random.Random(seed)
    report = DualityReport()
    rs, cs = row_space(a), col_space(a)
    xs = sample_points(rs.weak_basis, a.flavor, rng, samples)
    ys = sample_points(cs.weak_basis, a.flavor, rng, samples)
    tx = [theta(a, x, check=False) for x in xs]
    ty = [theta_prime(a, y, check=False) for y in ys]
    for x, t in zip(xs, tx):
        report.checked_points += 1
        if not member(t, cs):
            report.fail("theta leaves the column space", x)
        if theta_prime(a, t, check=False).entries != x.entries:
            report.fail("theta' o theta != id", x)
        lam = rng.randint(-5, 5)
        if theta(a, x.scale(lam), check=False).entries != t.scale(-lam).entries:
            report.fail("theta does not anti-commute with scaling", x, lam)
    for y, t in zip(ys, ty):
        report.checked_points += 1
        if not member(t, rs):
            report.fail("theta' leaves the row space", y)
        if theta(a, t, check=False).entries != y.entries:
            report.fail("theta o theta' != id", y)
        lam = rng.randint(-5, 5)
        if theta_prime(a, y.scale(lam), check=False).entries != t.scale(-lam).entries:
            report.fail("theta' does not anti-commute with scaling", y, lam)
    for (x1, t1), (x2, t2) in combinations(list(zip(xs, tx)), 2):
        report.checked_pairs += 1
        if x1.leq(x2) != t2.leq(t1):
            report.fail("theta is not order reversing", x1, x2)
        if d_hilbert(x1, x2) != d_hilbert(t1, t2):
            report.fail("theta is not an isometry", x1, x2)
    for (y1, s1), (y2, s2) in combinations(list(zip(ys, ty)), 2):
        if y1.leq(y2) != s2.leq(s1):
            report.fail("theta' is not order reversing", y1, y2)
    return report


def check_metric_duality(a: TropMatrix, samples: int = 20, seed: int = 0) -> DualityReport:
    """Compare Hilbert distances of sampled row-space pairs with their images."""
    _check_flavor(a)
    rng = random.Random(seed)
    report = DualityReport()
    xs = sample_points(row_space(a).weak_basis, a.flavor, rng, samples)
    images = [theta(a, x, check=False) for x in xs]
    for (x1, t1), (x2, t2) in combinations(list(zip(xs, images)), 2):
        report.checked_pairs += 1
        if d_hilbert(x1, x2) != d_hilbert(t1, t2):
            report.fail("distance not preserved", x1, x2)
    return report
