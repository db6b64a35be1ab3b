"""Seeded property suites over random inputs.

Every suite returns a :class:`~tropgreen.ranks.FuzzReport`; a non-empty
``violations`` list is a finding, never an expected outcome.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import greens, ranks
from .convex import ConvexSet, GeneratorMap, map_extends, violation_holds
from .core import NEG_INF, POS_INF, Flavor, is_finite
from .duality import check_duality, check_metric_duality
from .linalg import TropMatrix, TropVector, _combine, _sp, mat_mul
from .metric import d_hilbert, is_distance, lipschitz_check
from .ranks import FuzzReport, random_matrix

SUITES = ("duality", "metric-duality", "metric", "rank-product", "greens-consistency",
          "finitize", "map-extends-oracle")


def _rational(rng: random.Random, lo=-6, hi=6, denom=4):
    q = Fraction(rng.randint(lo * denom, hi * denom), rng.randint(1, denom))
    return int(q) if q.denominator == 1 else q


def _random_vector(rng, n, flavor, p_neg=0.25, p_pos=0.15) -> TropVector:
    out = []
    for _ in range(n):
        u = rng.random()
        if flavor is not Flavor.FT and u < p_neg:
            out.append(NEG_INF)
        elif flavor is Flavor.TBAR and u < p_neg + p_pos:
            out.append(POS_INF)
        else:
            out.append(_rational(rng))
    return TropVector(flavor, tuple(out))


def duality_suite(trials: int = 200, seed: int = 0, samples: int = 20) -> FuzzReport:
    rng = random.Random(seed)
    report = FuzzReport("duality")
    for t in range(trials):
        a = random_matrix(rng, rng.randint(1, 4), Flavor.FT)
        report.trials += 1
        r = check_duality(a, samples=samples, seed=rng.randrange(2**31))
        if not r.passed:
            report.violations.append((str(a), r.failures[:3]))
    return report


def metric_duality_suite(trials: int = 200, seed: int = 0, samples: int = 20) -> FuzzReport:
    rng = random.Random(seed)
    report = FuzzReport("metric-duality")
    for t in range(trials):
        flavor = Flavor.FT if t % 2 == 0 else Flavor.TBAR
        a = random_matrix(rng, rng.randint(1, 4), flavor)
        report.trials += 1
        r = check_metric_duality(a, samples=samples, seed=rng.randrange(2**31))
        if not r.passed:
            report.violations.append((str(a), r.failures[:3]))
    return report


def metric_suite(trials: int = 500, seed: int = 0) -> FuzzReport:
    """Opposite residuals, metric axioms and the squared Lipschitz bounds."""
    rng = random.Random(seed)
    report = FuzzReport("metric")
    for _ in range(trials):
        report.trials += 1
        n = rng.randint(1, 5)
        x, y = _random_vector(rng, n, Flavor.TBAR), _random_vector(rng, n, Flavor.TBAR)
        if x.entries != y.entries and _sp(x.entries, y.entries) is POS_INF \
                and _sp(y.entries, x.entries) is not NEG_INF:
            report.violations.append(("opposite residual", str(x), str(y)))
        if not is_distance(d_hilbert(x, y)):
            report.violations.append(("not a distance", str(x), str(y)))
        a, b, c = (_random_vector(rng, n, Flavor.FT) for _ in range(3))
        lam = _rational(rng)
        dab = d_hilbert(a, b)
        if dab != d_hilbert(b, a) or dab != d_hilbert(a.scale(lam), b):
            report.violations.append(("symmetry/scaling", str(a), str(b), str(lam)))
        if dab > d_hilbert(a, c) + d_hilbert(c, b):
            report.violations.append(("triangle", str(a), str(b), str(c)))
        m = rng.randint(1, 4)
        u = tuple(_rational(rng) for _ in range(m))
        v = tuple(_rational(rng) for _ in range(m))
        if not lipschitz_check(u, v):
            report.violations.append(("lipschitz", u, v))
    return report


RANK_PRODUCT_CASES = (
    ("tropical", Flavor.T), ("determinantal", Flavor.FT), ("determinantal", Flavor.T),
    ("gm_row", Flavor.T), ("gm_col", Flavor.T), ("factor-bracket", Flavor.T),
)


def rank_product_suite(trials: int = 200, seed: int = 0, size: int = 3) -> FuzzReport:
    report = FuzzReport("rank-product")
    for k, (name, flavor) in enumerate(RANK_PRODUCT_CASES):
        sub = ranks.rank_product_fuzz(name, trials, size, flavor, seed + k)
        report.trials += sub.trials
        report.violations.extend((sub.name,) + v for v in sub.violations)
    return report


def _near_diagonal(rng, n, delta):
    """A finite stand-in for a tropical diagonal matrix: off-diagonal entries
    equal to ``delta``, which is chosen far below everything else."""
    d = [rng.randint(-3, 3) for _ in range(n)]
    rows = tuple(tuple(d[i] if i == j else delta for j in range(n)) for i in range(n))
    inv = tuple(tuple(-d[i] if i == j else delta for j in range(n)) for i in range(n))
    return TropMatrix(Flavor.FT, rows), TropMatrix(Flavor.FT, inv)


def conjugate_pair(rng: random.Random, n: int = 3):
    """A finite pair ``(a, b)`` with ``b = D a E`` and ``a = D' b E'`` exactly."""
    a = random_matrix(rng, n, Flavor.FT)
    delta = -100
    d, d_inv = _near_diagonal(rng, n, delta)
    e, e_inv = _near_diagonal(rng, n, delta)
    b = mat_mul(mat_mul(d, a), e)
    return a, b, (d, e, d_inv, e_inv)


def greens_consistency_suite(trials: int = 200, seed: int = 0, pairs: int = 12) -> FuzzReport:
    rng = random.Random(seed)
    report = FuzzReport("greens-consistency")
    for _ in range(trials):
        report.trials += 1
        flavor = rng.choice((Flavor.FT, Flavor.T, Flavor.TBAR))
        n = rng.randint(1, 3)
        a = random_matrix(rng, n, flavor)
        p = random_matrix(rng, n, flavor)
        q = random_matrix(rng, n, flavor)
        pa, aq = mat_mul(p, a), mat_mul(a, q)
        if not greens.leq_L(pa, a).holds:
            report.violations.append(("leq_L(PA, A)", str(p), str(a)))
        if not greens.leq_R(aq, a).holds:
            report.violations.append(("leq_R(AQ, A)", str(a), str(q)))
        for small in (pa, aq):
            obs = greens.j_order_obstruction(small, a)
            if obs is not None:
                report.violations.append(("obstruction on a witnessed pair", obs.kind, str(a)))
    for _ in range(pairs):
        report.trials += 1
        a, b, (d, e, d_inv, e_inv) = conjugate_pair(rng)
        if mat_mul(mat_mul(d_inv, b), e_inv) != a:
            report.violations.append(("conjugation is not invertible", str(a)))
            continue
        if ranks.row_rank(a) != ranks.row_rank(b) or ranks.col_rank(a) != ranks.col_rank(b):
            report.violations.append(("row/col rank differs on a J-pair", str(a), str(b)))
        for x, y in ((a, b), (b, a)):
            obs = greens.j_order_obstruction(x, y)
            if obs is not None:
                report.violations.append(("obstruction on a J-pair", obs.kind, str(x)))
        if greens.rel_J_decide(a, b).fails:
            report.violations.append(("rel_J_decide fails on a J-pair", str(a), str(b)))
    return report


def _t_factor(rng, n, row_finite: bool):
    m = random_matrix(rng, n, Flavor.T, p_neg_inf=0.4)
    rows = [list(r) for r in m.rows]
    for i in range(n):
        line = rows[i] if row_finite else [rows[j][i] for j in range(n)]
        if all(x is NEG_INF for x in line):
            k = rng.randrange(n)
            if row_finite:
                rows[i][k] = rng.randint(-3, 3)
            else:
                rows[k][i] = rng.randint(-3, 3)
    return TropMatrix(Flavor.T, tuple(tuple(r) for r in rows))


def finitize_suite(trials: int = 100, seed: int = 0) -> FuzzReport:
    """Both witness finitizations, ``trials`` accepted instances each."""
    rng = random.Random(seed)
    report = FuzzReport("finitize")
    done = 0
    while done < trials:
        n = rng.randint(1, 4)
        b = random_matrix(rng, n, Flavor.FT)
        p, q = _t_factor(rng, n, True), _t_factor(rng, n, False)
        a = mat_mul(mat_mul(p, b), q)
        done += 1
        report.trials += 1
        try:
            p2, q2 = greens.finitize_t_witness(p, b, q, a.with_flavor(Flavor.FT))
        except (AssertionError, greens.PreconditionViolated) as e:
            report.violations.append(("T->FT", str(p), str(b), str(q), str(e)))
            continue
        if mat_mul(mat_mul(p2, b), q2).rows != a.rows:
            report.violations.append(("T->FT product", str(p), str(b), str(q)))
    done = attempts = 0
    while done < trials and attempts < 200 * trials:
        attempts += 1
        n = rng.randint(1, 4)
        b = random_matrix(rng, n, Flavor.T, p_neg_inf=0.4)
        p = random_matrix(rng, n, Flavor.TBAR, p_neg_inf=0.3, p_pos_inf=0.2)
        q = random_matrix(rng, n, Flavor.TBAR, p_neg_inf=0.3, p_pos_inf=0.2)
        if not any(x is POS_INF for m in (p, q) for x in m.entries()):
            continue
        a = mat_mul(mat_mul(p, b), q)
        if any(x is POS_INF for x in a.entries()):
            continue
        done += 1
        report.trials += 1
        try:
            p2, q2 = greens.finitize_tbar_witness(p, b, q, a)
        except (AssertionError, greens.PreconditionViolated) as e:
            report.violations.append(("TBar->T", str(p), str(b), str(q), str(e)))
            continue
        if mat_mul(mat_mul(p2, b), q2).rows != a.rows:
            report.violations.append(("TBar->T product", str(p), str(b), str(q)))
    if done < trials:
        report.violations.append(("too few TBar instances", done))
    return report


def _random_coeffs(rng, k, flavor):
    out = []
    for _ in range(k):
        u = rng.random()
        if u < 0.2:
            out.append(NEG_INF)
        elif flavor is Flavor.TBAR and u < 0.3:
            out.append(POS_INF)
        else:
            out.append(_rational(rng))
    return out


def _below(rng, bound, flavor):
    """A random coefficient no larger than ``bound``."""
    if bound is NEG_INF or rng.random() < 0.15:
        return NEG_INF
    if bound is POS_INF:
        if flavor is Flavor.TBAR and rng.random() < 0.3:
            return POS_INF
        return _rational(rng, -12, 12)
    return bound - rng.choice((0, 0, Fraction(1, 2), 1, 3))


def map_extends_oracle_suite(trials: int = 100, seed: int = 0, pairs: int = 1000) -> FuzzReport:
    """Cross-check the extension criterion against sampled coefficient pairs.

    Whenever ``sum a_i w_i <= sum b_i w_i`` the images must compare the same
    way if the map extends; a reported violation must check out directly.
    """
    rng = random.Random(seed)
    report = FuzzReport("map-extends-oracle")
    for t in range(trials):
        flavor = (Flavor.FT, Flavor.T, Flavor.TBAR)[t % 3]
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        vecs = [_random_vector(rng, n, flavor) for _ in range(rng.randint(1, 4))]
        if all(v.is_zero() for v in vecs):
            vecs.append(_random_vector(rng, n, Flavor.FT).with_flavor(flavor))
        domain = ConvexSet.span(vecs, flavor)
        W = [w.entries for w in domain.weak_basis]
        k = len(W)
        if t % 2 == 0:
            mat = random_matrix(rng, n, flavor if flavor is not Flavor.FT else Flavor.T)
            mat = TropMatrix(mat.flavor, tuple(r[:m] for r in mat.rows))
            images = [_combine(w, [r for r in mat.rows], m) for w in W]
            truly_linear = True
        else:
            images = [_random_vector(rng, m, flavor).entries for _ in range(k)]
            truly_linear = False
        V = images
        gmap = GeneratorMap(domain, tuple(TropVector(Flavor.TBAR, v) for v in V))
        report.trials += 1
        verdict = map_extends(gmap)
        if truly_linear and not verdict:
            report.violations.append(("restriction of a matrix map rejected", W, V))
            continue
        if not verdict:
            if not violation_holds(W, V, verdict.violation):
                report.violations.append(("unverifiable violation", W, V, verdict.violation))
            continue
        for _ in range(pairs):
            beta = _random_coeffs(rng, k, flavor)
            y = _combine(beta, W, n)
            alpha = [_below(rng, _sp(w, y), flavor) for w in W]
            x = _combine(alpha, W, n)
            if not all(a <= b for a, b in zip(x, y)):
                report.violations.append(("sampler broke", W, alpha, beta))
                break
            lhs, rhs = _combine(alpha, V, m), _combine(beta, V, m)
            if not all(a <= b for a, b in zip(lhs, rhs)):
                report.violations.append(("extension contradicted", W, V, alpha, beta))
                break
    return report


def run_suite(name: str, trials: int | None = None, seed: int = 0) -> FuzzReport:
    table = {
        "duality": duality_suite,
        "metric-duality": metric_duality_suite,
        "metric": metric_suite,
        "rank-product": rank_product_suite,
        "greens-consistency": greens_consistency_suite,
        "finitize": finitize_suite,
        "map-extends-oracle": map_extends_oracle_suite,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn = table[name]
    return fn(seed=seed) if trials is None else fn(trials=trials, seed=seed)
