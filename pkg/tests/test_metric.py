from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import rationals, vectors
from tropgreen.core import NEG_INF as N
from tropgreen.core import POS_INF, DimensionMismatch, Flavor
from tropgreen.fixtures import A63
from tropgreen.linalg import TropVector, proj_equal
from tropgreen.metric import (
    CHART, FULL, chart_coordinate, d_chart, d_hilbert, diameter, distance_multiset,
    is_distance, lipschitz_check,
)

V = TropVector.of


def test_d_hilbert_examples():
    assert d_hilbert(V([0, 0, 0]), V([1, 5, 0])) == 5
    x = V([2, N, 7], Flavor.T)
    assert d_hilbert(x, x.scale(7)) == 0
    assert d_hilbert(V([0, N], Flavor.T), V([0, 0], Flavor.T)) is POS_INF


def test_d_hilbert_length_mismatch():
    with pytest.raises(DimensionMismatch):
        d_hilbert(V([0]), V([0, 0]))


def test_d_chart_examples():
    assert d_chart((0, 0), (1, 5)) == 4
    assert d_chart((3, Fraction(1, 2)), (3, Fraction(1, 2))) == 0
    assert d_chart((0, 0), (3, 2)) == 1


def test_distance_multisets_of_a63():
    rows, cols = A63.row_vectors(), A63.col_vectors()
    assert distance_multiset(rows, CHART) == [1, 4, 5]
    assert distance_multiset(cols, CHART) == [2, 3, 5]
    assert distance_multiset(rows, FULL) == [3, 5, 5]
    assert distance_multiset(cols, FULL) == [3, 5, 5]
    assert diameter(rows) == 5


def test_chart_coordinate_prefers_shared_finite_coordinate():
    assert chart_coordinate(A63.row_vectors()) == 2
    assert chart_coordinate(A63.col_vectors()) == 0


def test_lipschitz_examples():
    assert lipschitz_check((0, 0), (0, 0))
    assert lipschitz_check((0, 0), (1, 5))


@given(vectors(4, Flavor.FT), vectors(4, Flavor.FT), rationals, rationals)
def test_symmetry_and_scaling(x, y, a, b):
    d = d_hilbert(x, y)
    assert d == d_hilbert(y, x) == d_hilbert(x.scale(a), y.scale(b))


@given(vectors(4, Flavor.FT), vectors(4, Flavor.FT))
def test_zero_exactly_on_projective_equality(x, y):
    d = d_hilbert(x, y)
    assert d >= 0
    assert (d == 0) == proj_equal(x, y)


@given(vectors(3, Flavor.FT), vectors(3, Flavor.FT), vectors(3, Flavor.FT))
def test_triangle_inequality(x, y, z):
    assert d_hilbert(x, z) <= d_hilbert(x, y) + d_hilbert(y, z)


@given(vectors(3), vectors(3))
def test_never_minus_infinity(x, y):
    assert is_distance(d_hilbert(x, y))


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(lambda m: st.tuples(
    st.lists(rationals, min_size=m, max_size=m), st.lists(rationals, min_size=m, max_size=m))))
def test_lipschitz_bounds(uv):
    u, v = uv
    assert lipschitz_check(tuple(u), tuple(v))
