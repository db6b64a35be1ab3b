"""End-to-end checks of the worked examples, shared by the CLI and tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import greens, ranks
from .convex import col_space, member, row_space, surjection_gen_dim_obstruction
from .core import Flavor, format_scalar
from .figures import figure_data
from .fixtures import A61, A62, A63, B61, B62, G27, MU62, X61
from .linalg import mat_mul, mat_vec
from .metric import CHART, FULL, distance_multiset


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class Bundle:
    name: str
    title: str
    checks: list = field(default_factory=list)
    info: list = field(default_factory=list)

    def check(self, label: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(passed), detail))
        return passed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"== {self.name}: {self.title}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.append(f"  [{mark}] {c.label}" + (f"  ({c.detail})" if c.detail else ""))
        out += [f"  note: {line}" for line in self.info]
        out.append(f"  => {'PASS' if self.passed else 'FAIL'}")
        return out

    def to_dict(self) -> dict:
        return {"name": self.name, "title": self.title, "passed": self.passed,
                "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail}
                           for c in self.checks],
                "info": list(self.info)}


def _fmt(values) -> str:
    return "{" + ", ".join(format_scalar(v) for v in values) + "}"


def example_6_1() -> Bundle:
    b = Bundle("6.1", "linear embedding is not necessary for the J-order")
    b.check("B X = A", mat_mul(B61, X61) == A61)
    v = greens.leq_R(A61, B61)
    q = v.witness.matrices["Q"] if v.holds else None
    b.check("A <=_R B with re-verified witness",
            v.holds and greens.verify_sandwich(A61, None, B61, q, Flavor.FT))
    ca, cb = ranks.col_rank(A61), ranks.col_rank(B61)
    b.check("col_rank(A) = 4, col_rank(B) = 3", (ca, cb) == (4, 3), f"got {ca}, {cb}")
    obstructed = surjection_gen_dim_obstruction(col_space(B61), col_space(A61))
    b.check("no linear surjection C(B) -> C(A) by generator dimension", obstructed)
    j = greens.leq_J_decide(A61, B61)
    b.check("leq_J_decide(A, B) = Holds", j.holds, j.outcome.value)
    if obstructed:
        b.info.append("no linear embedding R(A)->R(B): such an embedding would make "
                      "C(B) surject linearly onto C(A), which the generator "
                      "dimensions 3 < 4 forbid")
    return b


def example_6_2() -> Bundle:
    b = Bundle("6.2", "mutual linear embedding is not necessary for J over T")
    images = []
    for src, dst, tag in ((A62, B62, "A->B"), (B62, A62, "B->A")):
        target = col_space(dst)
        for j in range(src.n_cols):
            images.append((tag, j, member(mat_vec(MU62, src.col(j)), target)))
    bad = [f"{t} col {j}" for t, j, ok in images if not ok]
    b.check("mu maps generators of each column space into the other (8 checks)",
            len(images) == 8 and not bad, ", ".join(bad))
    ca, cb = ranks.col_rank(A62), ranks.col_rank(B62)
    b.check("col_rank(A) = 3, col_rank(B) = 4", (ca, cb) == (3, 4), f"got {ca}, {cb}")
    hint = [{"embedding": MU62}]
    v = greens.rel_J_decide(A62, B62, hints=hint)
    b.check("rel_J_decide(A, B) with the mu hint = Holds", v.holds, v.outcome.value)
    if v.holds:
        m = v.witness.matrices
        ok = (greens.verify_sandwich(A62, m["P_AB"], B62, m["Q_AB"], Flavor.T)
              and greens.verify_sandwich(B62, m["P_BA"], A62, m["Q_BA"], Flavor.T))
        b.check("J witnesses re-verified by multiplication", ok)
        b.info.append(f"column rank differs ({ca} vs {cb}) across a verified J-pair, "
                      "so column rank is not a J-class invariant over T")
    return b


def example_6_3() -> Bundle:
    b = Bundle("6.3", "isometry of row spaces is not sufficient for J")
    rs, cs = row_space(A63), col_space(A63)
    rows, cols = A63.row_vectors(), A63.col_vectors()
    b.check("weak basis of R(A) is the 3 rows", len(rs.weak_basis) == 3
            and all(member(r, rs) for r in rows)
            and all(any(_proj(r, w) for r in rows) for w in rs.weak_basis))
    b.check("weak basis of C(A) is the 3 columns", len(cs.weak_basis) == 3
            and all(any(_proj(c, w) for c in cols) for w in cs.weak_basis))
    chart_r, chart_c = distance_multiset(rows, CHART), distance_multiset(cols, CHART)
    full_r, full_c = distance_multiset(rows, FULL), distance_multiset(cols, FULL)
    b.check("chart-mode distances of rows = {1, 4, 5}", chart_r == [1, 4, 5], _fmt(chart_r))
    b.check("chart-mode distances of columns = {2, 3, 5}", chart_c == [2, 3, 5], _fmt(chart_c))
    b.check("full-mode distances of rows and columns computed", full_r and full_c,
            f"rows {_fmt(full_r)}, columns {_fmt(full_c)}")
    tr, dr = ranks.tropical_rank(A63), ranks.determinantal_rank(A63)
    b.check("tropical rank = determinantal rank = 3", tr == dr == 3, f"got {tr}, {dr}")
    b.info.append(f"metric modes disagree: full Hilbert distances give {_fmt(full_r)} "
                  f"(rows) and {_fmt(full_c)} (columns), the chart evaluation gives "
                  f"{_fmt(chart_r)} and {_fmt(chart_c)}")
    d = greens.rel_D_decide(A63, A63.T)
    b.info.append(f"rel_D_decide(A, A^T) = {d.outcome.value}; the worked example claims "
                  "A and A^T are not J-related")
    if d.holds:
        c = d.witness.matrices["C"]
        c = "[" + "; ".join(" ".join(format_scalar(x) for x in r) for r in c.rows) + "]"
        b.info.append("the decider found a certified row-space isomorphism: "
                      f"A R C and C L A^T for C = {c}; this contradicts the claim")
    return b


def _proj(x, y) -> bool:
    from .linalg import proj_equal
    return proj_equal(x, y)


def example_7_gm() -> Bundle:
    b = Bundle("7.gm", "Gondran-Minoux column rank depends on the semiring")
    t = ranks.gm_rank(G27, "columns", Flavor.T)
    tb = ranks.gm_rank(G27, "columns", Flavor.TBAR)
    b.check("gm column rank over T = 2", t == 2, f"got {t}")
    b.check("gm column rank over TBar = 1", tb == 1, f"got {tb}")
    dep = ranks.gm_dependency(G27.col_vectors(), Flavor.TBAR)
    if dep is not None:
        b.info.append("dependency over TBar: coefficients "
                      + _fmt(dep[0]) + f", sides {sorted(dep[1])} / {sorted(dep[2])}")
    return b


FIGURE_TARGETS = (
    ("PC(A) of 6.1", A61, "cols", {(0, 0), (1, -1), (2, -2), (3, -3)}),
    ("PC(B) of 6.1", B61, "cols", {(0, 0), (1, -2), (3, -3)}),
    ("PR(A) of 6.3", A63, "rows", {(0, 0), (1, 5), (3, 2)}),
)


def figures_bundle() -> Bundle:
    b = Bundle("figures", "figure vertices match the printed labels")
    for label, m, space, want in FIGURE_TARGETS:
        got = set(figure_data(m, space).vertices)
        b.check(label, got == want, ", ".join(str(tuple(map(format_scalar, v)))
                                             for v in sorted(got)))
    return b


BUNDLES = {
    "6.1": example_6_1,
    "6.2": example_6_2,
    "6.3": example_6_3,
    "7.gm": example_7_gm,
    "figures": figures_bundle,
}
