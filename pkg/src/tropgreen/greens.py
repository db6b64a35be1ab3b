"""Deciders for Green's relations on square tropical matrices.

``L``, ``R`` and ``H`` are decided exactly by residuation.  ``J`` and ``D``
are semi-decided: rank invariants give sound obstructions, witness searches
give re-verified certificates, and anything else is reported as Unknown.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, islice, permutations

from . import diffcons, ranks
from .convex import (ConvexSet, GeneratorMap, apply_map, col_space, map_extends, member,
                     row_space)
from .core import NEG_INF, POS_INF, DimensionMismatch, Flavor, TropicalError, is_finite
from .linalg import TropMatrix, TropVector, left_residual, mat_mul, right_residual
from .metric import CHART, FULL, distance_multiset
from .verdict import Obstruction, Outcome, Verdict, WitnessBundle

DEFAULT_SEEDS = 3
DEFAULT_ROUNDS = 200
DEFAULT_D_BUDGET = 200_000
MAX_REALIZE_TRIES = 5000


class PreconditionViolated(TropicalError):
    pass


def _pair_flavor(a: TropMatrix, b: TropMatrix) -> Flavor:
    if a.shape != b.shape:
        raise DimensionMismatch(f"matrices of shapes {a.shape} and {b.shape}")
    return a.flavor.join(b.flavor)


def _has(m: TropMatrix, value) -> bool:
    return any(x is value for x in m.entries())


def _prod(p, b, q):
    out = b
    if p is not None:
        out = mat_mul(p, out)
    if q is not None:
        out = mat_mul(out, q)
    return out


def verify_sandwich(a: TropMatrix, p, b: TropMatrix, q, flavor: Flavor) -> bool:
    """``a = p b q`` exactly, with ``p``/``q`` legal for ``flavor`` (None = identity)."""
    for m in (p, q):
        if m is None:
            continue
        if flavor is Flavor.FT and (_has(m, NEG_INF) or _has(m, POS_INF)):
            return False
        if flavor is Flavor.T and _has(m, POS_INF):
            return False
    return _prod(p, b, q).rows == a.rows


# --- finitization of witnesses ---------------------------------------------------

def finitize_tbar_witness(p: TropMatrix, b: TropMatrix, q: TropMatrix, a: TropMatrix):
    """Replace +inf entries of ``p`` and ``q`` by 0; ``a = p b q`` must survive."""
    if _has(a, POS_INF) or _has(b, POS_INF):
        raise PreconditionViolated("A and B must be matrices over T")
    if _prod(p, b, q).rows != a.rows:
        raise PreconditionViolated("A != PBQ")
    fix = lambda x: 0 if x is POS_INF else x  # noqa: E731
    p2 = p.map(fix).with_flavor(Flavor.T)
    q2 = q.map(fix).with_flavor(Flavor.T)
    if _prod(p2, b, q2).rows != a.rows:
        raise AssertionError("replacing +inf by 0 broke the factorization")
    return p2, q2


def finitize_delta(p: TropMatrix, b: TropMatrix, q: TropMatrix):
    """The value substituted for -inf: the least bound from the three
    families of inequalities between finite entries of ``p``, ``b``, ``q``."""
    fp = [x for x in p.entries() if is_finite(x)]
    fq = [x for x in q.entries() if is_finite(x)]
    fb = [x for x in b.entries() if is_finite(x)]
    if not (fp and fq and fb):
        return 0
    base = min(fp) + min(fb) + min(fq) - max(fb)
    delta = min(base - max(fp), base - max(fq), Fraction(base) / 2)
    if isinstance(delta, Fraction) and delta.denominator == 1:
        delta = int(delta)
    return delta


def finitize_t_witness(p: TropMatrix, b: TropMatrix, q: TropMatrix, a: TropMatrix):
    """Turn a witness over T for finite ``a = p b q`` into one over FT."""
    for m, name in ((a, "A"), (b, "B")):
        if any(not is_finite(x) for x in m.entries()):
            raise PreconditionViolated(f"{name} must be a matrix over FT")
    if _has(p, POS_INF) or _has(q, POS_INF):
        raise PreconditionViolated("P and Q must be matrices over T")
    if _prod(p, b, q).rows != a.rows:
        raise PreconditionViolated("A != PBQ")
    delta = finitize_delta(p, b, q)
    fix = lambda x: delta if x is NEG_INF else x  # noqa: E731
    p2 = p.map(fix).with_flavor(Flavor.FT)
    q2 = q.map(fix).with_flavor(Flavor.FT)
    if _prod(p2, b, q2).rows != a.rows:
        raise AssertionError("finitization broke the factorization")
    return p2, q2


def _narrow_sandwich(a, p, b, q, flavor):
    """Bring a TBar witness into ``flavor``; None if that is impossible here."""
    if flavor is Flavor.TBAR:
        return (p and p.with_flavor(flavor)), (q and q.with_flavor(flavor))
    ident = lambda m: m if m is not None else TropMatrix.identity(a.n_rows, Flavor.TBAR)  # noqa
    pp, qq = p, q
    if (pp is not None and _has(pp, POS_INF)) or (qq is not None and _has(qq, POS_INF)):
        if _has(a, POS_INF) or _has(b, POS_INF):
            return None
        pp, qq = finitize_tbar_witness(ident(pp), b, ident(qq), a)
        if p is None:
            pp = None
        if q is None:
            qq = None
    if flavor is Flavor.T:
        return (pp and pp.with_flavor(flavor)), (qq and qq.with_flavor(flavor))
    if (pp is not None and _has(pp, NEG_INF)) or (qq is not None and _has(qq, NEG_INF)):
        if pp is None or qq is None:
            # a one-sided witness over FT never needs -inf
            return None
        pp, qq = finitize_t_witness(pp.with_flavor(Flavor.T), b, qq.with_flavor(Flavor.T), a)
    return (pp and pp.with_flavor(flavor)), (qq and qq.with_flavor(flavor))


def _sandwich_verdict(a, p, b, q, flavor, relation, **extra) -> Verdict | None:
    narrowed = _narrow_sandwich(a, p, b, q, flavor)
    if narrowed is None:
        return None
    p2, q2 = narrowed
    if not verify_sandwich(a, p2, b, q2, flavor):
        return None
    return Verdict(Outcome.HOLDS, witness=WitnessBundle(relation, {"P": p2, "Q": q2}),
                   budget_used=extra)


# --- one-sided orders ------------------------------------------------------------

def leq_L(a: TropMatrix, b: TropMatrix) -> Verdict:
    """``a <=_L b``: the row space of ``a`` lies in that of ``b``."""
    flavor = _pair_flavor(a, b)
    if a.rows == b.rows:
        return Verdict(Outcome.HOLDS, witness=WitnessBundle("<=L", {"P": None}))
    p = right_residual(a, b)
    if mat_mul(p, b).rows == a.rows:
        v = _sandwich_verdict(a, p, b, None, flavor, "<=L")
        if v is not None:
            v.witness.matrices.pop("Q")
            return v
    rs = row_space(b.with_flavor(flavor))
    for i in range(a.n_rows):
        if not member(a.row(i).with_flavor(flavor), rs):
            return Verdict(Outcome.FAILS, obstruction=Obstruction(
                "row-not-in-row-space", {"row": i, "vector": a.row(i)},
                f"row {i} of A is not a tropical combination of the rows of B"))
    raise AssertionError("residual failed although every row is a member")


def _transpose_verdict(v: Verdict, relation: str) -> Verdict:
    if v.holds:
        p = v.witness.matrices.get("P")
        return Verdict(Outcome.HOLDS, witness=WitnessBundle(
            relation, {"Q": None if p is None else p.T}))
    obs = v.obstruction
    kind = "column-not-in-column-space" if obs.kind == "row-not-in-row-space" else obs.kind
    values = dict(obs.values)
    if "row" in values:
        values = {"column": values["row"], "vector": values["vector"]}
    return Verdict(Outcome.FAILS, obstruction=Obstruction(
        kind, values, obs.details.replace("row", "column")))


def leq_R(a: TropMatrix, b: TropMatrix) -> Verdict:
    """``a <=_R b``: the column space of ``a`` lies in that of ``b``."""
    return _transpose_verdict(leq_L(a.T, b.T), "<=R")


def _both(relation, first: Verdict, second: Verdict, names) -> Verdict:
    if first.fails:
        return first
    if second.fails:
        return second
    matrices = {}
    for name, v in zip(names, (first, second)):
        for k, m in v.witness.matrices.items():
            matrices[f"{k}_{name}"] = m
    return Verdict(Outcome.HOLDS, witness=WitnessBundle(relation, matrices))


def rel_L(a, b) -> Verdict:
    return _both("L", leq_L(a, b), leq_L(b, a), ("AB", "BA"))


def rel_R(a, b) -> Verdict:
    return _both("R", leq_R(a, b), leq_R(b, a), ("AB", "BA"))


def rel_H(a, b) -> Verdict:
    first = rel_L(a, b)
    if first.fails:
        return first
    second = rel_R(a, b)
    if second.fails:
        return second
    return Verdict(Outcome.HOLDS, witness=WitnessBundle(
        "H", {**first.witness.matrices, **second.witness.matrices}))


# --- two-sided search -------------------------------------------------------------

def _max_abs(*ms) -> int:
    vals = [abs(x) for m in ms for x in m.entries() if is_finite(x)]
    return max(vals, default=0)


def _random_seed_matrix(rng, n, spread):
    return TropMatrix(Flavor.TBAR, tuple(tuple(rng.randint(-spread, spread) for _ in range(n))
                                         for _ in range(n)))


def sandwich_search(a: TropMatrix, b: TropMatrix, seeds: int = DEFAULT_SEEDS,
                    rounds: int = DEFAULT_ROUNDS, seed: int = 0,
                    trace: list | None = None) -> Verdict:
    """Look for ``a = P b Q`` by alternating residuation.

    From a seed ``Q``, alternately take the greatest ``P`` with
    ``P (b Q) <= a`` and the greatest ``Q`` with ``(P b) Q <= a``.  Holds
    only with a re-verified witness; otherwise Unknown.
    """
    flavor = _pair_flavor(a, b)
    for one_sided, side in ((leq_L, "P"), (leq_R, "Q")):
        v = one_sided(a, b)
        if v.holds:
            mats = {"P": None, "Q": None}
            mats[side] = v.witness.matrices[side]
            return Verdict(Outcome.HOLDS, witness=WitnessBundle("<=J", mats),
                           budget_used={"shortcut": one_sided.__name__})
    n = a.n_rows
    spread = max(1, _max_abs(a, b))
    threshold = -(n * spread * 4 + 1)
    rng = random.Random(seed)
    starts = [left_residual(b, a)]
    if flavor is not Flavor.FT:
        starts.append(TropMatrix.identity(n, Flavor.TBAR))
    while len(starts) < seeds:
        starts.append(_random_seed_matrix(rng, n, spread))
    starts = starts[:max(seeds, 1)]
    stats = {"seeds": 0, "rounds": 0, "abandoned": 0, "fixed_points": 0}
    for q in starts:
        stats["seeds"] += 1
        prev_p = None
        for r in range(rounds):
            stats["rounds"] += 1
            p = right_residual(a, mat_mul(b, q))
            q_next = left_residual(mat_mul(p, b), a)
            if trace is not None:
                trace.append((p, q, q_next))
            if prev_p is not None and not (p.leq(prev_p) and q.leq(q_next)):
                raise AssertionError("alternation lost monotonicity")
            if _prod(p, b, q_next).rows == a.rows:
                v = _sandwich_verdict(a, p, b, q_next, flavor, "<=J", **stats)
                if v is not None:
                    return v
            if any(is_finite(x) and x < threshold for m in (p, q_next) for x in m.entries()):
                stats["abandoned"] += 1
                break
            if prev_p is not None and p == prev_p and q_next == q:
                stats["fixed_points"] += 1
                break
            prev_p, q = p, q_next
    return Verdict.unknown_(stats, "alternating search found no witness")


# --- obstructions ----------------------------------------------------------------

def _rank_pairs(a: TropMatrix, b: TropMatrix, flavor: Flavor, max_n: int):
    """Yield ``(name, rank(a), rank(b))`` for ranks that respect the J-order."""
    no_top = not (_has(a, POS_INF) or _has(b, POS_INF))
    if no_top:
        yield "tropical-rank", ranks.tropical_rank(a, max_n), ranks.tropical_rank(b, max_n)
        yield ("determinantal-rank", ranks.determinantal_rank(a, max_n, allow_tbar=True),
               ranks.determinantal_rank(b, max_n, allow_tbar=True))
    gm_flavor = Flavor.T if flavor is Flavor.FT else flavor
    for axis in ("columns", "rows"):
        yield (f"gondran-minoux-{axis[:-1]}-rank", ranks.gm_rank(a, axis, gm_flavor, max_n),
               ranks.gm_rank(b, axis, gm_flavor, max_n))


def j_order_obstruction(a: TropMatrix, b: TropMatrix,
                        max_n: int = ranks.DEFAULT_MAX_N) -> Obstruction | None:
    """A J-monotone rank on which ``a`` strictly exceeds ``b``, if any."""
    flavor = _pair_flavor(a, b)
    if max(a.shape) > max_n:
        return None
    for name, ra, rb in _rank_pairs(a, b, flavor, max_n):
        if ra > rb:
            return Obstruction(name, {"A": ra, "B": rb},
                               f"{name} of A exceeds that of B; the rank respects the J-order")
    fa, fb = ranks.factor_rank_bounds(a, max_n), ranks.factor_rank_bounds(b, max_n)
    if fa[0] > fb[1]:
        return Obstruction("factor-rank", {"A": list(fa), "B": list(fb)},
                           "factor rank of A is above every possible factor rank of B")
    return None


def _monomial_inverse(m: TropMatrix) -> TropMatrix:
    n = m.n_rows
    if m.shape != (n, n):
        raise ValueError("embedding hints must be square monomial matrices")
    inv = [[NEG_INF] * n for _ in range(n)]
    seen_cols = set()
    for i, row in enumerate(m.rows):
        finite = [j for j, x in enumerate(row) if x is not NEG_INF]
        if len(finite) != 1 or not is_finite(row[finite[0]]) or finite[0] in seen_cols:
            raise ValueError("embedding hint is not a monomial matrix")
        j = finite[0]
        seen_cols.add(j)
        inv[j][i] = -row[j]
    return TropMatrix(Flavor.T, tuple(tuple(r) for r in inv))


def witness_from_hint(a: TropMatrix, b: TropMatrix, hint: dict) -> Verdict | None:
    """Check a user-supplied J-order witness for ``a <=_J b``.

    ``hint`` holds matrices ``P`` and/or ``Q`` (missing = identity), or a
    monomial ``embedding`` whose action on columns (``side="columns"``, the
    default) maps the column space of ``a`` into that of ``b``, or on rows
    (``side="rows"``) maps the row space of ``a`` into that of ``b``.
    """
    flavor = _pair_flavor(a, b)
    if "embedding" in hint:
        m = hint["embedding"]
        inv = _monomial_inverse(m)
        if hint.get("side", "columns") == "columns":
            ma = mat_mul(m, a)
            q = left_residual(b, ma)
            p = inv
        else:
            am = mat_mul(a, m)
            p = right_residual(am, b)
            q = inv
        if _prod(p, b, q).rows != a.rows:
            return None
        return _sandwich_verdict(a, p, b, q, flavor, "<=J", hint="embedding")
    p, q = hint.get("P"), hint.get("Q")
    if _prod(p, b, q).rows != a.rows:
        return None
    return _sandwich_verdict(a, p, b, q, flavor, "<=J", hint="matrices")


def leq_J_decide(a: TropMatrix, b: TropMatrix, rounds: int = DEFAULT_ROUNDS,
                 seeds: int = DEFAULT_SEEDS, seed: int = 0, hints=(),
                 max_n: int = ranks.DEFAULT_MAX_N) -> Verdict:
    """Obstruction battery, then supplied hints, then the sandwich search."""
    _pair_flavor(a, b)
    obs = j_order_obstruction(a, b, max_n)
    if obs is not None:
        return Verdict(Outcome.FAILS, obstruction=obs)
    for hint in hints or ():
        v = witness_from_hint(a, b, hint)
        if v is not None:
            return v
    return sandwich_search(a, b, seeds=seeds, rounds=rounds, seed=seed)


def rel_J_decide(a: TropMatrix, b: TropMatrix, rounds: int = DEFAULT_ROUNDS,
                 seeds: int = DEFAULT_SEEDS, seed: int = 0, hints=(), reverse_hints=None,
                 max_n: int = ranks.DEFAULT_MAX_N) -> Verdict:
    flavor = _pair_flavor(a, b)
    finite = not any(not is_finite(x) for m in (a, b) for x in m.entries())
    if finite:
        # J = D for finite matrices, and D preserves row and column rank
        for name, fn in (("row-rank", ranks.row_rank), ("col-rank", ranks.col_rank)):
            ra, rb = fn(a), fn(b)
            if ra != rb:
                return Verdict(Outcome.FAILS, obstruction=Obstruction(
                    name, {"A": ra, "B": rb},
                    f"{name} differs; over FT, J-related matrices are D-related"))
    if finite:
        via_d = _j_from_d(a, b)
        if via_d is not None:
            return via_d
    if reverse_hints is None:
        reverse_hints = hints
    forward = leq_J_decide(a, b, rounds, seeds, seed, hints, max_n)
    if forward.fails:
        return forward
    backward = leq_J_decide(b, a, rounds, seeds, seed, reverse_hints, max_n)
    if backward.fails:
        return backward
    if forward.holds and backward.holds:
        w1, w2 = forward.witness.matrices, backward.witness.matrices
        return Verdict(Outcome.HOLDS, witness=WitnessBundle("J", {
            "P_AB": w1["P"], "Q_AB": w1["Q"], "P_BA": w2["P"], "Q_BA": w2["Q"]}))
    return Verdict.unknown_({"forward": forward.outcome.value,
                             "backward": backward.outcome.value},
                            "no witness found for at least one direction")


def _j_from_d(a: TropMatrix, b: TropMatrix) -> Verdict | None:
    """D is contained in J: turn a certified row-space isomorphism into
    explicit sandwich witnesses in both directions."""
    flavor = _pair_flavor(a, b)
    d = rel_D_decide(a, b, budget=DEFAULT_D_BUDGET // 10)
    if not d.holds:
        return None
    c = d.witness.matrices["C"]
    q1 = leq_R(a, c).witness.matrices["Q"]
    p1 = leq_L(c, b).witness.matrices["P"]
    q2 = leq_R(c, a).witness.matrices["Q"]
    p2 = leq_L(b, c).witness.matrices["P"]
    mats = {"P_AB": p1, "Q_AB": q1, "P_BA": p2, "Q_BA": q2}
    if not (verify_sandwich(a, p1, b, q1, flavor) and verify_sandwich(b, p2, a, q2, flavor)):
        raise AssertionError("D certificate did not yield J witnesses")
    return Verdict(Outcome.HOLDS, witness=WitnessBundle("J", mats, extra={"via": "D"}))


# --- D via isomorphism of row spaces ----------------------------------------------

def _extension_clauses(domain, images, sign):
    """Difference-constraint clauses on offsets ``lam`` under which
    ``domain[i] -> (sign*lam_i) (x) images[i]`` extends linearly.

    Returns None when some clause has no satisfiable alternative.
    """
    k = len(domain)
    n, m = len(domain[0]), len(images[0])
    clauses = []
    for i in range(k):
        for c in range(m):
            v_ic = images[i][c]
            if v_ic is NEG_INF:
                continue
            alts = []
            free_pass = False
            for d in range(n):
                w_id = domain[i][d]
                if w_id is NEG_INF:
                    continue
                cons = []
                possible = True
                for j in range(k):
                    v_jc, w_jd = images[j][c], domain[j][d]
                    if v_jc is POS_INF or w_jd is NEG_INF:
                        continue
                    if v_jc is NEG_INF or w_jd is POS_INF:
                        possible = False
                        break
                    if v_ic is POS_INF:
                        if w_id is not POS_INF:
                            possible = False
                            break
                        continue
                    if w_id is POS_INF or j == i:
                        continue
                    const = w_id - w_jd - v_ic + v_jc
                    cons.append((i, j, const) if sign > 0 else (j, i, const))
                if not possible:
                    continue
                if not cons:
                    free_pass = True
                    break
                alts.append(cons)
            if free_pass:
                continue
            if not alts:
                return None
            clauses.append(alts)
    return clauses


def _scaled(v: TropVector, lam) -> TropVector:
    return v.scale(lam)


def rel_D_decide(a: TropMatrix, b: TropMatrix, budget: int = DEFAULT_D_BUDGET,
                 trust_extension: bool = False) -> Verdict:
    """Search for a module isomorphism between the row spaces.

    An isomorphism sends the weak basis of one space onto the weak basis of
    the other up to finite scalars, so it suffices to try each bijection of
    weak bases and solve for the scalars.
    """
    flavor = _pair_flavor(a, b)
    ra, rb = row_space(a.with_flavor(flavor)), row_space(b.with_flavor(flavor))
    ca, cb = col_space(a.with_flavor(flavor)), col_space(b.with_flavor(flavor))
    for label, x, y in (("row", ra, rb), ("column", ca, cb)):
        if len(x.weak_basis) != len(y.weak_basis):
            return Verdict(Outcome.FAILS, obstruction=Obstruction(
                "generator-dimension", {"space": f"{label} spaces",
                                        "A": len(x.weak_basis), "B": len(y.weak_basis)},
                f"{label} spaces have different generator dimension, so they are not isomorphic"))
    wa = [w.entries for w in ra.weak_basis]
    wb = [w.entries for w in rb.weak_basis]
    k = len(wa)
    stats = {"bijections": 0, "nodes": 0}
    if k == 0:
        return Verdict(Outcome.HOLDS, witness=WitnessBundle("D", extra={"zero": True}))
    exhausted = True
    for pi in permutations(range(k)):
        stats["bijections"] += 1
        target = [wb[pi[i]] for i in range(k)]
        forward = _extension_clauses(wa, target, +1)
        backward = _extension_clauses(target, wa, -1)
        if forward is None or backward is None:
            continue
        remaining = budget - stats["nodes"]
        if remaining <= 0:
            exhausted = False
            break
        sol, nodes = diffcons.search_disjunctive(k, [], forward + backward, remaining)
        stats["nodes"] += nodes
        if sol == "budget":
            exhausted = False
            break
        if sol is None:
            continue
        lam = [int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in sol]
        f = GeneratorMap(ra, tuple(_scaled(rb.weak_basis[pi[i]], lam[i]) for i in range(k)))
        g_domain = ConvexSet(flavor, rb.dim, tuple(rb.weak_basis[pi[i]] for i in range(k)))
        # the permuted basis is still irredundant, so its order is kept
        g = GeneratorMap(g_domain, tuple(_scaled(ra.weak_basis[i], -lam[i]) for i in range(k)))
        if not (map_extends(f) and map_extends(g)):
            raise AssertionError("offsets from the constraint search do not certify")
        # rows of A pushed through the isomorphism: A R C and C L B
        c = TropMatrix.from_vectors([apply_map(f, a.row(i).with_flavor(flavor), verified=True)
                                     for i in range(a.n_rows)]).with_flavor(flavor)
        if not (rel_R(a, c).holds and rel_L(c, b).holds):
            raise AssertionError("isomorphism does not factor through an intermediate matrix")
        return Verdict(Outcome.HOLDS, witness=WitnessBundle("D", {"C": c}, extra={
            "permutation": list(pi), "offsets": lam,
            "row_basis_A": [ra.weak_basis[i] for i in range(k)],
            "row_basis_B": [rb.weak_basis[j] for j in range(k)]}), budget_used=stats)
    if exhausted and trust_extension:
        return Verdict(Outcome.FAILS, obstruction=Obstruction(
            "no-row-space-isomorphism", stats,
            "no bijection of weak bases admits offsets extending to an isomorphism"),
            budget_used=stats)
    note = ("all bijections ruled out by the extension criterion; rerun with "
            "trust_extension to report Fails" if exhausted else "search budget exhausted")
    return Verdict.unknown_({**stats, "exhausted": exhausted}, note)


# --- isometry diagnostics ---------------------------------------------------------

def isometry_diagnostics(a: TropMatrix, b: TropMatrix, mode: str = "both",
                         samples: int = 30, seed: int = 0) -> dict:
    """Distance data for the projective row spaces.  Diagnostic only: nothing
    here decides a relation."""
    from .duality import sample_points
    modes = (FULL, CHART) if mode == "both" else (mode,)
    ra, rb = row_space(a), row_space(b)
    report = {"sound": False, "modes": {}}
    rng = random.Random(seed)
    pts_b = sample_points(rb.weak_basis, rb.flavor, rng, samples)
    for md in modes:
        entry = {}
        for name, rs in (("A", ra), ("B", rb)):
            wb = list(rs.weak_basis)
            entry[f"multiset_{name}"] = distance_multiset(wb, md) if len(wb) > 1 else []
            entry[f"diameter_{name}"] = entry[f"multiset_{name}"][-1] if len(wb) > 1 else 0
        target = entry["multiset_A"]
        realized = False
        if md == FULL and len(ra.weak_basis) > 1:
            kk = len(ra.weak_basis)
            for combo in islice(combinations(pts_b, kk), MAX_REALIZE_TRIES):
                if distance_multiset(list(combo), FULL) == target:
                    realized = True
                    break
        entry["multiset_A_realized_in_B_samples"] = realized if md == FULL else None
        report["modes"][md] = entry
    return report
