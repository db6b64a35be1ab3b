"""Tropical vectors and matrices, products, residuals and projective charts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    NEG_INF,
    POS_INF,
    DimensionMismatch,
    Flavor,
    TropicalError,
    check_scalar,
    format_scalar,
    is_finite,
    parse_scalar,
    t_mul,
)


class ChartUndefined(TropicalError):
    pass


def _coerce(entries, flavor: Flavor) -> tuple:
    return tuple(check_scalar(parse_scalar(e), flavor) for e in entries)


@dataclass(frozen=True)
class TropVector:
    flavor: Flavor
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _coerce(self.entries, self.flavor))
        if not self.entries:
            raise ValueError("tropical vectors need at least one entry")

    @classmethod
    def of(cls, entries: Iterable, flavor: Flavor | str = Flavor.TBAR) -> "TropVector":
        if isinstance(flavor, str):
            flavor = Flavor.parse(flavor)
        return cls(flavor, tuple(entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ", ".join(format_scalar(e) for e in self.entries) + ")"

    def leq(self, other: "TropVector") -> bool:
        _same_length(self, other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def oplus(self, other: "TropVector") -> "TropVector":
        _same_length(self, other)
        return TropVector(self.flavor.join(other.flavor),
                          tuple(max(a, b) for a, b in zip(self.entries, other.entries)))

    def scale(self, lam) -> "TropVector":
        flavor = self.flavor
        if not is_finite(lam):
            flavor = flavor.join(Flavor.T if lam is NEG_INF else Flavor.TBAR)
        return TropVector(flavor, tuple(t_mul(lam, a) for a in self.entries))

    def with_flavor(self, flavor: Flavor) -> "TropVector":
        return TropVector(flavor, self.entries)

    def is_zero(self) -> bool:
        return all(a is NEG_INF for a in self.entries)


@dataclass(frozen=True)
class TropMatrix:
    flavor: Flavor
    rows: tuple

    def __post_init__(self):
        rows = tuple(_coerce(r, self.flavor) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrices need at least one row and one column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable], flavor: Flavor | str = Flavor.TBAR) -> "TropMatrix":
        if isinstance(flavor, str):
            flavor = Flavor.parse(flavor)
        return cls(flavor, tuple(tuple(r) for r in rows))

    @classmethod
    def from_vectors(cls, vectors: Sequence[TropVector], as_columns: bool = False,
                     flavor: Flavor | None = None) -> "TropMatrix":
        if flavor is None:
            flavor = Flavor.FT
            for v in vectors:
                flavor = flavor.join(v.flavor)
        rows = tuple(v.entries for v in vectors)
        m = cls(flavor, rows)
        return m.T if as_columns else m

    @classmethod
    def identity(cls, n: int, flavor: Flavor = Flavor.T) -> "TropMatrix":
        if flavor is Flavor.FT:
            raise TropicalError("FT has no identity matrix")
        return cls(flavor, tuple(tuple(0 if i == j else NEG_INF for j in range(n))
                                 for i in range(n)))

    @classmethod
    def constant(cls, n_rows: int, n_cols: int, value, flavor: Flavor) -> "TropMatrix":
        return cls(flavor, tuple((value,) * n_cols for _ in range(n_rows)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def T(self) -> "TropMatrix":
        return TropMatrix(self.flavor, tuple(zip(*self.rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> TropVector:
        return TropVector(self.flavor, self.rows[i])

    def col(self, j: int) -> TropVector:
        return TropVector(self.flavor, tuple(r[j] for r in self.rows))

    def row_vectors(self) -> list[TropVector]:
        return [self.row(i) for i in range(self.n_rows)]

    def col_vectors(self) -> list[TropVector]:
        return [self.col(j) for j in range(self.n_cols)]

    def entries(self):
        for r in self.rows:
            yield from r

    def with_flavor(self, flavor: Flavor) -> "TropMatrix":
        return TropMatrix(flavor, self.rows)

    def narrowest_flavor(self) -> Flavor:
        f = Flavor.FT
        for a in self.entries():
            if a is POS_INF:
                return Flavor.TBAR
            if a is NEG_INF:
                f = Flavor.T
        return f

    def leq(self, other: "TropMatrix") -> bool:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return all(a <= b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def map(self, fn) -> "TropMatrix":
        return TropMatrix(self.flavor, tuple(tuple(fn(a) for a in r) for r in self.rows))

    def scale(self, lam) -> "TropMatrix":
        flavor = self.flavor
        if not is_finite(lam):
            flavor = flavor.join(Flavor.T if lam is NEG_INF else Flavor.TBAR)
        return TropMatrix(flavor, tuple(tuple(t_mul(lam, a) for a in r) for r in self.rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> tuple:
        return tuple(tuple(self.rows[i][j] for j in cols) for i in rows)

    def is_zero(self) -> bool:
        return all(a is NEG_INF for a in self.entries())

    def __str__(self):
        cells = [[format_scalar(a) for a in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _same_length(x, y):
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)} differ")


# Raw helpers on tuples; the public functions below wrap these.

def _residual_bound(x, y):
    """sup{lam : lam (x) x <= y} for single coordinates."""
    if x is NEG_INF or y is POS_INF:
        return POS_INF
    if x is POS_INF or y is NEG_INF:
        return NEG_INF
    return y - x


def _sp(x: Sequence, y: Sequence):
    best = POS_INF
    for a, b in zip(x, y):
        v = _residual_bound(a, b)
        if v < best:
            best = v
            if best is NEG_INF:
                break
    return best


def _mul(a_rows, b_rows):
    b_cols = list(zip(*b_rows))
    out = []
    for r in a_rows:
        out_row = []
        for c in b_cols:
            best = NEG_INF
            for x, y in zip(r, c):
                if x is NEG_INF or y is NEG_INF:
                    continue
                v = POS_INF if (x is POS_INF or y is POS_INF) else x + y
                if best < v:
                    best = v
            out_row.append(best)
        out.append(tuple(out_row))
    return tuple(out)


def _combine(coeffs, vectors, n):
    out = [NEG_INF] * n
    for lam, v in zip(coeffs, vectors):
        if lam is NEG_INF:
            continue
        for i, a in enumerate(v):
            t = t_mul(lam, a)
            if out[i] < t:
                out[i] = t
    return tuple(out)


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    if a.n_cols != b.n_rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return TropMatrix(a.flavor.join(b.flavor), _mul(a.rows, b.rows))


def mat_vec(a: TropMatrix, x: TropVector) -> TropVector:
    """``a (x) x`` with ``x`` treated as a column."""
    if a.n_cols != len(x):
        raise DimensionMismatch(f"cannot apply {a.shape} matrix to length {len(x)}")
    col = _mul(a.rows, tuple((e,) for e in x.entries))
    return TropVector(a.flavor.join(x.flavor), tuple(r[0] for r in col))


def vec_mat(x: TropVector, a: TropMatrix) -> TropVector:
    """``x (x) a`` with ``x`` treated as a row."""
    if a.n_rows != len(x):
        raise DimensionMismatch(f"cannot apply length {len(x)} row to {a.shape} matrix")
    return TropVector(a.flavor.join(x.flavor), _mul((x.entries,), a.rows)[0])


def scalar_product(x: TropVector, y: TropVector):
    """The residual <x|y> = max{lam in TBar : lam (x) x <= y}."""
    _same_length(x, y)
    return _sp(x.entries, y.entries)


def combine(coeffs: Sequence, vectors: Sequence[TropVector]) -> TropVector:
    """Tropical linear combination; the empty combination is the zero vector."""
    if not vectors:
        raise ValueError("need at least one vector to fix the dimension")
    n = len(vectors[0])
    flavor = Flavor.FT
    for v in vectors:
        _same_length(v, vectors[0])
        flavor = flavor.join(v.flavor)
    out = _combine(coeffs, [v.entries for v in vectors], n)
    for a in out:
        if a is NEG_INF:
            flavor = flavor.join(Flavor.T)
        elif a is POS_INF:
            flavor = Flavor.TBAR
    return TropVector(flavor, out)


def right_residual(a: TropMatrix, m: TropMatrix) -> TropMatrix:
    """Greatest P over TBar with ``P (x) m <= a``."""
    if a.n_cols != m.n_cols:
        raise DimensionMismatch(f"right residual needs equal widths: {a.shape} vs {m.shape}")
    return TropMatrix(Flavor.TBAR, tuple(tuple(_sp(mj, ai) for mj in m.rows) for ai in a.rows))


def left_residual(m: TropMatrix, a: TropMatrix) -> TropMatrix:
    """Greatest Q over TBar with ``m (x) Q <= a``."""
    if a.n_rows != m.n_rows:
        raise DimensionMismatch(f"left residual needs equal heights: {m.shape} vs {a.shape}")
    m_cols = list(zip(*m.rows))
    a_cols = list(zip(*a.rows))
    return TropMatrix(Flavor.TBAR, tuple(tuple(_sp(mi, aj) for aj in a_cols) for mi in m_cols))


def projectivize(x: TropVector, coord: int = -1) -> tuple:
    """Chart coordinates: subtract ``x[coord]`` and drop that coordinate.

    The default chart uses the last coordinate.
    """
    n = len(x)
    k = coord % n
    base = x.entries[k]
    if not is_finite(base):
        raise ChartUndefined(f"coordinate {k} of {x} is not finite")
    return tuple(t_mul(a, -base) for i, a in enumerate(x.entries) if i != k)


def proj_equal(x: TropVector, y: TropVector) -> bool:
    """True iff ``y = lam (x) x`` for some finite ``lam``."""
    _same_length(x, y)
    shift = None
    for a, b in zip(x.entries, y.entries):
        if is_finite(a) != is_finite(b):
            return False
        if not is_finite(a):
            if a is not b:
                return False
            continue
        d = b - a
        if shift is None:
            shift = d
        elif d != shift:
            return False
    return True


def normalize(x: TropVector) -> TropVector:
    """Representative of the projective class of ``x``: last finite entry 0."""
    for a in reversed(x.entries):
        if is_finite(a):
            return TropVector(x.flavor, tuple(t_mul(a_i, -a) for a_i in x.entries))
    return x
