"""Rank functions of tropical matrices and the rank-product harness."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from . import diffcons
from .convex import col_space, generator_dimension, row_space
from .core import NEG_INF, POS_INF, Flavor, TropicalError, is_finite, t_mul
from .linalg import TropMatrix, TropVector, _combine, left_residual, mat_mul, right_residual
from .verdict import Obstruction, Outcome, Verdict, WitnessBundle

DEFAULT_MAX_N = 5


class FlavorUnsupported(TropicalError):
    pass


class SizeLimitExceeded(TropicalError):
    pass


def _check_size(a: TropMatrix, max_n: int):
    if max(a.shape) > max_n:
        raise SizeLimitExceeded(f"{a.shape} exceeds the enumeration cap {max_n}; raise max_n")


# --- row and column rank ----------------------------------------------------

def row_rank(a: TropMatrix) -> int:
    return generator_dimension(row_space(a))


def col_rank(a: TropMatrix) -> int:
    return generator_dimension(col_space(a))


# --- permutation expansions ---------------------------------------------------

def _sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


_PERMS: dict = {}


def _perms(k: int):
    if k not in _PERMS:
        _PERMS[k] = [(p, _sign(p)) for p in permutations(range(k))]
    return _PERMS[k]


def permutation_weights(m) -> list:
    """``(sigma, sign, weight)`` for every permutation of a square grid."""
    k = len(m)
    out = []
    for p, s in _perms(k):
        w = 0
        for i in range(k):
            w = t_mul(w, m[i][p[i]])
            if w is NEG_INF:
                break
        out.append((p, s, w))
    return out


def _rows_of(m):
    return m.rows if isinstance(m, TropMatrix) else tuple(tuple(r) for r in m)


def strongly_regular(m) -> bool:
    """Optimal assignment weight is above -inf and attained by one permutation."""
    weights = [w for _, _, w in permutation_weights(_rows_of(m))]
    best = max(weights)
    return best is not NEG_INF and sum(1 for w in weights if w == best) == 1


def strongly_regular_bruteforce(m) -> bool:
    """Subset definition: no non-empty T with equal tropical sums over T and its complement."""
    weights = [w for _, _, w in permutation_weights(_rows_of(m))]
    n = len(weights)
    for mask in range(1, 1 << n):
        inside = [w for i, w in enumerate(weights) if mask >> i & 1]
        outside = [w for i, w in enumerate(weights) if not mask >> i & 1]
        if max(inside) == max(outside, default=NEG_INF):
            return False
    return True


def bideterminant(m) -> tuple:
    """``(|M|+, |M|-)``: tropical sums over even and odd permutations."""
    plus = minus = NEG_INF
    for _, s, w in permutation_weights(_rows_of(m)):
        if s > 0:
            plus = max(plus, w)
        else:
            minus = max(minus, w)
    return plus, minus


def _largest_minor(a: TropMatrix, test, max_n: int) -> int:
    _check_size(a, max_n)
    for k in range(min(a.shape), 0, -1):
        for rows in combinations(range(a.n_rows), k):
            for cols in combinations(range(a.n_cols), k):
                if test(a.submatrix(rows, cols)):
                    return k
    return 0


def tropical_rank(a: TropMatrix, max_n: int = DEFAULT_MAX_N) -> int:
    return _largest_minor(a, strongly_regular, max_n)


def determinantal_rank(a: TropMatrix, max_n: int = DEFAULT_MAX_N,
                       allow_tbar: bool = False) -> int:
    if a.flavor is Flavor.TBAR and not allow_tbar and a.narrowest_flavor() is Flavor.TBAR:
        raise FlavorUnsupported("determinantal rank is only used over FT and T")

    def nonsingular(m):
        plus, minus = bideterminant(m)
        return plus != minus
    return _largest_minor(a, nonsingular, max_n)


def factor_rank_bounds(a: TropMatrix, max_n: int = DEFAULT_MAX_N) -> tuple[int, int]:
    """Interval containing the factor rank.

    Lower end is the tropical rank (at least 1 for a nonzero matrix) when the
    matrix has no +inf entries, else 1; upper end is min(row rank, col rank).
    """
    if a.is_zero():
        return (0, 0)
    ub = min(row_rank(a), col_rank(a))
    lb = 1
    if a.narrowest_flavor() is not Flavor.TBAR:
        lb = max(1, tropical_rank(a, max_n))
    return (lb, ub)


# --- Gondran-Minoux independence -----------------------------------------------

def _side_terms(vectors, side, coeff_inf, r):
    """Split coordinate ``r`` of one side into finite terms and a +inf flag."""
    terms = []
    top = False
    for k in side:
        x = vectors[k][r]
        if x is NEG_INF:
            continue
        if k in coeff_inf or x is POS_INF:
            top = True
        else:
            terms.append((k, x))
    return terms, top


def _two_sided(vectors, left, right, coeff_inf, n):
    """Finite coefficients (for indices not in ``coeff_inf``) solving
    sum_left = sum_right, or None."""
    finite = [k for k in (*left, *right) if k not in coeff_inf]
    index = {k: i for i, k in enumerate(finite)}
    clauses = []
    for r in range(n):
        lt, ltop = _side_terms(vectors, left, coeff_inf, r)
        rt, rtop = _side_terms(vectors, right, coeff_inf, r)
        if ltop or rtop:
            if ltop != rtop:
                return None
            continue
        if not lt and not rt:
            continue
        if not lt or not rt:
            return None
        everyone = lt + rt
        alts = []
        for (i, xi), (j, xj) in product(lt, rt):
            # alpha_i + xi = alpha_j + xj, and both dominate every other term
            cons = [(index[i], index[j], xj - xi), (index[j], index[i], xi - xj)]
            for (h, xh) in everyone:
                if h != i:
                    cons.append((index[h], index[i], xi - xh))
            alts.append(cons)
        clauses.append(alts)
    if not finite:
        return {}
    sol, _ = diffcons.search_disjunctive(len(finite), [], clauses, budget=10 ** 7)
    if sol == "budget":
        raise SizeLimitExceeded("Gondran-Minoux search exceeded its node budget")
    if sol is None:
        return None
    return {k: sol[index[k]] for k in finite}


def _support_dependency(vectors, support, flavor, n):
    s = list(support)
    if len(s) == 1:
        return {s[0]: 0} if all(a is NEG_INF for a in vectors[s[0]]) else None
    first, rest = s[0], s[1:]
    inf_choices = [()]
    if flavor is Flavor.TBAR:
        inf_choices = [c for size in range(len(s) + 1) for c in combinations(s, size)]
    for mask in range(1 << len(rest)):
        left = [first] + [k for b, k in enumerate(rest) if mask >> b & 1]
        right = [k for b, k in enumerate(rest) if not mask >> b & 1]
        if not right:
            continue
        for infs in inf_choices:
            sol = _two_sided(vectors, left, right, set(infs), n)
            if sol is not None:
                alpha = dict(sol)
                alpha.update({k: POS_INF for k in infs})
                return alpha, left, right
    return None


def gm_dependency(vectors, flavor: Flavor):
    """A Gondran-Minoux dependency ``(alpha, I, J)`` among ``vectors``, or None.

    Exact: each coordinate's maximum must be attained on both sides, so every
    choice of maximizing pair per coordinate is a system of difference
    constraints, searched with pruning.
    """
    if flavor is Flavor.FT:
        raise FlavorUnsupported("Gondran-Minoux independence needs a zero element (T or TBar)")
    vecs = [tuple(v.entries) if isinstance(v, TropVector) else tuple(v) for v in vectors]
    t = len(vecs)
    if t == 0:
        return None
    n = len(vecs[0])
    for k, v in enumerate(vecs):
        if all(a is NEG_INF for a in v):
            alpha = [NEG_INF] * t
            alpha[k] = 0
            return tuple(alpha), [k], []
    dependent_masks = []
    for size in range(2, t + 1):
        for support in combinations(range(t), size):
            mask = sum(1 << k for k in support)
            if any(d & mask == d for d in dependent_masks):
                continue
            found = _support_dependency(vecs, support, flavor, n)
            if found is not None:
                sol, left, right = found
                alpha = [NEG_INF] * t
                for k, a in sol.items():
                    alpha[k] = a
                return tuple(alpha), left, right
    return None


def _dependency_holds(vecs, alpha, left, right) -> bool:
    n = len(vecs[0])
    if all(a is NEG_INF for a in alpha):
        return False
    lhs = _combine([alpha[k] for k in left], [vecs[k] for k in left], n)
    rhs = _combine([alpha[k] for k in right], [vecs[k] for k in right], n)
    return lhs == rhs


def gm_independent(vectors, flavor: Flavor) -> Verdict:
    """Holds when the vectors are Gondran-Minoux independent; Fails carries the
    dependency ``alpha`` with its index split."""
    vecs = [tuple(v.entries) if isinstance(v, TropVector) else tuple(v) for v in vectors]
    dep = gm_dependency(vecs, flavor)
    if dep is None:
        return Verdict(Outcome.HOLDS,
                       witness=WitnessBundle("gm-independent", extra={"search": "exhaustive"}))
    alpha, left, right = dep
    if not _dependency_holds(vecs, alpha, left, right):
        raise AssertionError("internal error: dependency does not verify")
    return Verdict(Outcome.FAILS, obstruction=Obstruction(
        "gm-dependency", {"alpha": list(alpha), "I": left, "J": right}))


def gm_rank(a: TropMatrix, axis: str = "columns", flavor: Flavor | None = None,
            max_n: int = DEFAULT_MAX_N) -> int:
    """Maximal number of Gondran-Minoux independent columns (or rows)."""
    flavor = flavor or a.flavor
    if flavor is Flavor.FT:
        flavor = Flavor.T
    _check_size(a, max_n)
    vecs = [v.entries for v in (a.col_vectors() if axis.startswith("col") else a.row_vectors())]
    t = len(vecs)
    for size in range(t, 0, -1):
        for subset in combinations(range(t), size):
            if gm_dependency([vecs[k] for k in subset], flavor) is None:
                return size
    return 0


def gm_alternating_search(vectors, budget: int = 200):
    """Second route for GM dependence over T: alternating residuation on each
    split ``U u = V v`` started from zero coefficients.  Returns a verified
    dependency or None; None proves nothing."""
    vecs = [tuple(v.entries) if isinstance(v, TropVector) else tuple(v) for v in vectors]
    t = len(vecs)
    for mask in range(1, (1 << t) - 1):
        if not mask & 1:
            continue
        left = [k for k in range(t) if mask >> k & 1]
        right = [k for k in range(t) if not mask >> k & 1]
        U = TropMatrix(Flavor.TBAR, tuple(zip(*[vecs[k] for k in left])))
        V = TropMatrix(Flavor.TBAR, tuple(zip(*[vecs[k] for k in right])))
        u = TropMatrix(Flavor.TBAR, tuple((0,) for _ in left))
        for _ in range(budget):
            v = left_residual(V, mat_mul(U, u))
            u_next = left_residual(U, mat_mul(V, v))
            if mat_mul(U, u_next) == mat_mul(V, v):
                alpha = [NEG_INF] * t
                for k, row in zip(left, u_next.rows):
                    alpha[k] = row[0]
                for k, row in zip(right, v.rows):
                    alpha[k] = row[0]
                alpha = [0 if a is POS_INF else a for a in alpha]
                if _dependency_holds(vecs, alpha, left, right):
                    return tuple(alpha), left, right
                break
            if u_next == u:
                break
            u = u_next
    return None


# --- reports and the rank-product harness ---------------------------------------

@dataclass
class RankReport:
    flavor: Flavor
    row_rank: int
    col_rank: int
    factor_rank: tuple
    gm_row: int
    gm_col: int
    determinantal: int | None
    tropical: int
    flags: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "semiring": self.flavor.value,
            "row_rank": self.row_rank,
            "col_rank": self.col_rank,
            "factor_rank": list(self.factor_rank),
            "gm_row": self.gm_row,
            "gm_col": self.gm_col,
            "determinantal": self.determinantal,
            "tropical": self.tropical,
            "flags": dict(self.flags),
        }


def rank_report(a: TropMatrix, flavor: Flavor | None = None,
                max_n: int = DEFAULT_MAX_N) -> RankReport:
    flavor = flavor or a.flavor
    m = a.with_flavor(flavor) if flavor is not a.flavor else a
    _check_size(m, max_n)
    trop = tropical_rank(m, max_n)
    det = None
    if flavor is not Flavor.TBAR or m.narrowest_flavor() is not Flavor.TBAR:
        det = determinantal_rank(m, max_n, allow_tbar=True)
    # over FT the Gondran-Minoux ranks are those of the same matrix over T
    gm_r = gm_rank(m, "rows", flavor, max_n)
    gm_c = gm_rank(m, "columns", flavor, max_n)
    fr = factor_rank_bounds(m, max_n)
    flags = {
        "factor_lb_le_ub": fr[0] <= fr[1],
        "tropical_le_determinantal": det is None or trop <= det,
        "factor_exact": fr[0] == fr[1],
    }
    return RankReport(flavor, row_rank(m), col_rank(m), fr, gm_r, gm_c, det, trop, flags)


RANK_NAMES = ("tropical", "determinantal", "gm_row", "gm_col", "factor-bracket")


def random_matrix(rng: random.Random, n: int, flavor: Flavor, lo: int = -3, hi: int = 3,
                  p_neg_inf: float = 0.2, p_pos_inf: float = 0.1) -> TropMatrix:
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            u = rng.random()
            if flavor is not Flavor.FT and u < p_neg_inf:
                row.append(NEG_INF)
            elif flavor is Flavor.TBAR and u < p_neg_inf + p_pos_inf:
                row.append(POS_INF)
            else:
                row.append(rng.randint(lo, hi))
        rows.append(tuple(row))
    return TropMatrix(flavor, tuple(rows))


def rank_value(name: str, a: TropMatrix):
    if name == "tropical":
        return tropical_rank(a)
    if name == "determinantal":
        return determinantal_rank(a)
    if name == "gm_row":
        return gm_rank(a, "rows")
    if name == "gm_col":
        return gm_rank(a, "columns")
    if name == "factor-bracket":
        return factor_rank_bounds(a)
    raise ValueError(f"unknown rank {name!r}; choose from {RANK_NAMES}")


def rank_product_holds(name: str, a: TropMatrix, b: TropMatrix) -> bool:
    ab = mat_mul(a, b)
    if name == "factor-bracket":
        return rank_value(name, ab)[0] <= min(rank_value(name, a)[1], rank_value(name, b)[1])
    return rank_value(name, ab) <= min(rank_value(name, a), rank_value(name, b))


@dataclass
class FuzzReport:
    name: str
    trials: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def rank_product_fuzz(name: str, trials: int = 200, size: int = 3,
                      flavor: Flavor = Flavor.T, seed: int = 0) -> FuzzReport:
    rng = random.Random(seed)
    report = FuzzReport(f"rank-product/{name}/{flavor.value}")
    for _ in range(trials):
        a = random_matrix(rng, size, flavor)
        b = random_matrix(rng, size, flavor)
        report.trials += 1
        if not rank_product_holds(name, a, b):
            report.violations.append((str(a), str(b)))
    return report
