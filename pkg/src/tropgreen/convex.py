"""Finitely generated tropical convex sets, weak bases and linear maps between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import NEG_INF, POS_INF, DimensionMismatch, Flavor, TropicalError, is_finite
from .linalg import TropMatrix, TropVector, _combine, _sp, mat_vec, normalize, proj_equal


class NotAMorphism(TropicalError):
    pass


class NotAMember(TropicalError):
    pass


def _principal(gens: Sequence[tuple], x: tuple) -> list:
    return [_sp(g, x) for g in gens]


def _flavor_coeffs(coeffs, flavor: Flavor) -> list:
    # +inf coefficients only ever arise on zero generators outside TBar.
    if flavor is Flavor.TBAR:
        return list(coeffs)
    return [0 if c is POS_INF else c for c in coeffs]


def _in_span(x: tuple, gens: Sequence[tuple], flavor: Flavor):
    n = len(x)
    if not gens:
        return None if any(a is not NEG_INF for a in x) or flavor is Flavor.FT else []
    alpha = _flavor_coeffs(_principal(gens, x), flavor)
    if flavor is Flavor.FT and any(not is_finite(a) for a in alpha):
        return None
    if _combine(alpha, gens, n) == tuple(x):
        return alpha
    return None


def _weak_basis(vectors: Sequence[TropVector], flavor: Flavor) -> list[TropVector]:
    distinct: list[TropVector] = []
    for v in vectors:
        if v.is_zero():
            continue
        if any(proj_equal(v, u) for u in distinct):
            continue
        distinct.append(v)
    keep = list(distinct)
    i = 0
    while i < len(keep):
        others = [u.entries for j, u in enumerate(keep) if j != i]
        if others and _in_span(keep[i].entries, others, flavor) is not None:
            del keep[i]
        else:
            i += 1
    return [normalize(v) for v in keep]


@dataclass(frozen=True)
class ConvexSet:
    """Tropical convex hull of finitely many vectors, with its weak basis."""

    flavor: Flavor
    dim: int
    generators: tuple
    weak_basis: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(g.with_flavor(self.flavor) if g.flavor != self.flavor else g
                     for g in self.generators)
        for g in gens:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator {g} is not of length {self.dim}")
        if not gens and self.flavor is Flavor.FT:
            raise ValueError("a convex set over FT needs at least one generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "weak_basis", tuple(_weak_basis(gens, self.flavor)))

    @classmethod
    def span(cls, vectors: Sequence[TropVector], flavor: Flavor | None = None) -> "ConvexSet":
        if flavor is None:
            flavor = Flavor.FT
            for v in vectors:
                flavor = flavor.join(v.flavor)
        return cls(flavor, len(vectors[0]), tuple(vectors))

    def generator_matrix(self) -> TropMatrix:
        return TropMatrix(self.flavor, tuple(g.entries for g in self.generators))

    def __contains__(self, x: TropVector) -> bool:
        return member(x, self)


def row_space(a: TropMatrix) -> ConvexSet:
    return ConvexSet(a.flavor, a.n_cols, tuple(a.row_vectors()))


def col_space(a: TropMatrix) -> ConvexSet:
    return ConvexSet(a.flavor, a.n_rows, tuple(a.col_vectors()))


def member_coefficients(x: TropVector, space: ConvexSet):
    """Principal coefficients expressing ``x`` over the generators, or None."""
    if len(x) != space.dim:
        raise DimensionMismatch(f"vector of length {len(x)} vs space in dimension {space.dim}")
    alpha = _in_span(x.entries, [g.entries for g in space.generators], space.flavor)
    return None if alpha is None else tuple(alpha)


def member(x: TropVector, space: ConvexSet) -> bool:
    return member_coefficients(x, space) is not None


def weak_basis(space: ConvexSet) -> list[TropVector]:
    return list(space.weak_basis)


def generator_dimension(space: ConvexSet) -> int:
    return len(space.weak_basis)


def dual_dimension(space: ConvexSet) -> int:
    """Generator dimension of the column space of the stacked generators."""
    g = space.generator_matrix()
    return generator_dimension(col_space(g))


def contains(big: ConvexSet, small: ConvexSet) -> bool:
    return all(member(g, big) for g in small.weak_basis)


def same_space(x: ConvexSet, y: ConvexSet) -> bool:
    return contains(x, y) and contains(y, x)


def surjection_gen_dim_obstruction(x: ConvexSet, y: ConvexSet) -> bool:
    """True when no linear surjection ``x -> y`` can exist (sound, not complete)."""
    return generator_dimension(x) < generator_dimension(y)


# --- linear maps given on a weak basis -------------------------------------

@dataclass(frozen=True)
class Violation:
    """Generator ``generator`` lies below ``sum_j beta_j w_j`` but its image does
    not lie below ``sum_j beta_j v_j`` (it exceeds it at image coordinate ``coordinate``)."""

    generator: int
    coordinate: int
    beta: tuple


@dataclass(frozen=True)
class ExtensionCheck:
    extends: bool
    violation: Violation | None = None

    def __bool__(self):
        return self.extends


@dataclass(frozen=True)
class GeneratorMap:
    domain: ConvexSet
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != len(self.domain.weak_basis):
            raise ValueError(f"need {len(self.domain.weak_basis)} images, got {len(images)}")
        if images and any(len(v) != len(images[0]) for v in images):
            raise DimensionMismatch("images must share one length")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_matrix(cls, domain: ConvexSet, m: TropMatrix) -> "GeneratorMap":
        return cls(domain, tuple(mat_vec(m, w) for w in domain.weak_basis))

    @classmethod
    def identity(cls, domain: ConvexSet) -> "GeneratorMap":
        return cls(domain, tuple(domain.weak_basis))

    @property
    def flavor(self) -> Flavor:
        f = self.domain.flavor
        for v in self.images:
            f = f.join(v.flavor)
        return f


def _beta_kind(v_ic, v_jc):
    if v_jc is NEG_INF:
        return "free", None
    if v_jc is POS_INF:
        return "none", None
    if v_ic is POS_INF:
        return "finite", None
    return "strict", v_ic - v_jc


def _covers(kind, bound, w_jd, w_id) -> bool:
    """Can beta_j (x) w_jd reach w_id with beta_j of the given kind?"""
    if kind == "none" or w_jd is NEG_INF:
        return False
    if kind == "free" or w_jd is POS_INF:
        return True
    if kind == "finite":
        return w_id is not POS_INF
    return w_id is not POS_INF and bound + w_jd > w_id


def _find_violation(W: Sequence[tuple], V: Sequence[tuple], flavor: Flavor):
    k = len(W)
    n = len(W[0]) if W else 0
    m = len(V[0]) if V else 0
    for i in range(k):
        for c in range(m):
            v_ic = V[i][c]
            if v_ic is NEG_INF:
                continue
            kinds = [_beta_kind(v_ic, V[j][c]) for j in range(k)]
            if all(W[i][d] is NEG_INF or
                   any(_covers(kinds[j][0], kinds[j][1], W[j][d], W[i][d]) for j in range(k))
                   for d in range(n)):
                return Violation(i, c, _witness_beta(W, i, kinds, flavor))
    return None


def _witness_beta(W, i, kinds, flavor) -> tuple:
    k, n = len(W), len(W[0])
    eps = Fraction(1)
    big = [0] * k
    for j, (kind, bound) in enumerate(kinds):
        for d in range(n):
            w_jd, w_id = W[j][d], W[i][d]
            if not (is_finite(w_jd) and is_finite(w_id)):
                continue
            if kind == "strict":
                slack = bound + w_jd - w_id
                if slack > 0:
                    eps = min(eps, Fraction(slack) / 2)
            else:
                big[j] = max(big[j], w_id - w_jd)
    beta = []
    for j, (kind, bound) in enumerate(kinds):
        if kind == "none":
            beta.append(NEG_INF)
        elif kind == "free":
            beta.append(POS_INF if flavor is Flavor.TBAR else big[j])
        elif kind == "finite":
            beta.append(big[j])
        else:
            b = bound - eps
            beta.append(int(b) if isinstance(b, Fraction) and b.denominator == 1 else b)
    return tuple(beta)


def violation_holds(W: Sequence[tuple], V: Sequence[tuple], v: Violation) -> bool:
    """Independently re-check a violation by direct tropical arithmetic."""
    n, m = len(W[0]), len(V[0])
    lhs = _combine(v.beta, W, n)
    if not all(a <= b for a, b in zip(W[v.generator], lhs)):
        return False
    rhs = _combine(v.beta, V, m)
    return not all(a <= b for a, b in zip(V[v.generator], rhs))


def map_extends(gmap: GeneratorMap) -> ExtensionCheck:
    """Decide whether ``w_i -> v_i`` extends to a linear map on the domain.

    Linearity on the span reduces to monotonicity of single generators
    against arbitrary combinations; for each generator ``i`` and image
    coordinate ``c`` the largest coefficients that keep ``v_i`` above the
    image combination at ``c`` are tested for covering ``w_i`` at every
    domain coordinate.
    """
    W = [w.entries for w in gmap.domain.weak_basis]
    V = [v.entries for v in gmap.images]
    if not W:
        return ExtensionCheck(True)
    viol = _find_violation(W, V, gmap.flavor)
    if viol is None:
        return ExtensionCheck(True)
    if not violation_holds(W, V, viol):
        raise AssertionError(f"internal error: unverifiable violation {viol}")
    return ExtensionCheck(False, viol)


def apply_map(gmap: GeneratorMap, x: TropVector, *, verified: bool = False) -> TropVector:
    if not verified and not map_extends(gmap):
        raise NotAMorphism("the generator assignment does not extend linearly")
    W = [w.entries for w in gmap.domain.weak_basis]
    if not W:
        raise NotAMember("the domain is the zero space")
    alpha = _in_span(x.entries, W, gmap.domain.flavor)
    if alpha is None:
        raise NotAMember(f"{x} is not in the domain")
    m = len(gmap.images[0])
    out = _combine(alpha, [v.entries for v in gmap.images], m)
    return TropVector(gmap.flavor.join(Flavor.T) if NEG_INF in out else gmap.flavor, out)
