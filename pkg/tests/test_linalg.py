import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import matrices, rationals, vectors
from tropgreen.core import NEG_INF, POS_INF, DimensionMismatch, Flavor
from tropgreen.fixtures import A61, B61, X61
from tropgreen.linalg import (
    ChartUndefined, TropMatrix, TropVector, left_residual, mat_mul, normalize, proj_equal,
    projectivize, right_residual, scalar_product,
)

V = TropVector.of
M = TropMatrix.of


def test_mat_mul_examples():
    assert mat_mul(B61, X61) == A61
    assert mat_mul(M([[0]]), M([[0]])) == M([[0]])
    ident = M([[0, NEG_INF], [NEG_INF, 0]], Flavor.T)
    m = M([[3, NEG_INF], [1, -2]], Flavor.T)
    assert mat_mul(ident, m).rows == m.rows


def test_mat_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mat_mul(M([[1, 2]]), M([[1, 2]]))


def test_scalar_product_examples():
    assert scalar_product(V([0, 0]), V([1, 2])) == 1
    assert scalar_product(V([3, NEG_INF]), V([3, NEG_INF])) == 0
    assert scalar_product(V([NEG_INF, NEG_INF]), V([5, 7])) is POS_INF
    assert scalar_product(V([0, POS_INF]), V([0, 1])) is NEG_INF
    assert scalar_product(V([0, 1]), V([0, NEG_INF])) is NEG_INF


def test_residual_examples():
    p = right_residual(A61, B61)
    assert mat_mul(p, B61).rows != A61.rows  # rows of A61 are not all in the row space of B61
    q = left_residual(B61, A61)
    assert mat_mul(B61, q).rows == A61.rows
    assert right_residual(M([[0]]), M([[NEG_INF]])).rows == ((POS_INF,),)
    assert left_residual(M([[NEG_INF]]), M([[0]])).rows == ((POS_INF,),)
    assert mat_mul(right_residual(A61, A61), A61).rows == A61.rows
    assert mat_mul(A61, left_residual(A61, A61)).rows == A61.rows


def test_projectivize_examples():
    assert projectivize(V([1, 2, 3])) == (-2, -1)
    assert projectivize(V([0, 1, 2, 3])) == (-3, -2, -1)
    x = V([0, 0, 0])
    assert projectivize(x.scale(17)) == projectivize(x)
    assert projectivize(V([1, 2, 3]), 0) == (1, 2)
    with pytest.raises(ChartUndefined):
        projectivize(V([0, NEG_INF]))


def test_proj_equal_examples():
    assert proj_equal(V([0, 0, 0]), V([4, 4, 4]))
    assert not proj_equal(V([0, 1]), V([1, 0]))
    assert proj_equal(V([NEG_INF, 0]), V([NEG_INF, 3]))
    assert not proj_equal(V([NEG_INF, 0]), V([0, 3]))


def test_identity_not_in_ft():
    with pytest.raises(Exception):
        TropMatrix.identity(2, Flavor.FT)


def test_normalize_sets_last_finite_to_zero():
    assert normalize(V([3, 5, NEG_INF], Flavor.T)).entries == (-2, 0, NEG_INF)


@settings(max_examples=60)
@given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
def test_mat_mul_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@settings(max_examples=80)
@given(matrices(2, 3), matrices(3, 3), matrices(2, 3))
def test_right_residual_galois(a, m, p):
    star = right_residual(a, m)
    assert mat_mul(star, m).leq(a)
    assert mat_mul(p, m).leq(a) == p.leq(star)


@settings(max_examples=80)
@given(matrices(3, 2), matrices(3, 3), matrices(3, 2))
def test_left_residual_galois(a, m, q):
    star = left_residual(m, a)
    assert mat_mul(m, star).leq(a)
    assert mat_mul(m, q).leq(a) == q.leq(star)


@given(vectors(3), vectors(3))
def test_opposite_residuals(x, y):
    if x.entries != y.entries and scalar_product(x, y) is POS_INF:
        assert scalar_product(y, x) is NEG_INF


@given(vectors(3), vectors(3), rationals)
def test_residual_homogeneity(x, y, lam):
    s = scalar_product(x, y)
    expected = s if s in (NEG_INF, POS_INF) else s - lam
    assert scalar_product(x.scale(lam), y) == expected


@given(vectors(4, Flavor.FT), vectors(4, Flavor.FT))
def test_finite_residual_is_finite(x, y):
    s = scalar_product(x, y)
    assert s not in (NEG_INF, POS_INF)
    # the residual is the greatest lam with lam x <= y
    assert x.scale(s).leq(y) and not x.scale(s + 1).leq(y)
