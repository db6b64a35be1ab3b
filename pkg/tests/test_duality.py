import random

import pytest
from hypothesis import given, settings

from strategies import matrices
from tropgreen.convex import NotAMember, col_space, member, row_space
from tropgreen.core import Flavor
from tropgreen.duality import (
    FlavorUnsupported, check_duality, check_metric_duality, sample_points, theta, theta_prime,
)
from tropgreen.fixtures import A61, A63, G27
from tropgreen.linalg import TropMatrix, TropVector
from tropgreen.metric import distance_multiset

A = TropMatrix.of([[0, 0], [0, 1]], Flavor.FT)


def test_theta_example():
    assert theta(A, TropVector.of([0, 0], Flavor.FT)).entries == (0, 1)


def test_theta_inverse_on_samples():
    rng = random.Random(1)
    rs = row_space(A63)
    for x in sample_points(rs.weak_basis, Flavor.FT, rng, 200):
        assert theta_prime(A63, theta(A63, x)).entries == x.entries


def test_theta_scaling():
    x = A63.row(1)
    assert theta(A63, x.scale(5)).entries == theta(A63, x).scale(-5).entries


def test_theta_prime_order_reversal_and_codomain():
    y1, y2 = A63.col(0), A63.col(0).scale(-1)
    assert y2.leq(y1)
    assert theta_prime(A63, y1).leq(theta_prime(A63, y2))
    for c in A63.col_vectors():
        assert member(theta_prime(A63, c), row_space(A63))


def test_theta_rejects_t_and_non_members():
    with pytest.raises(FlavorUnsupported):
        theta(G27, TropVector.of([0, 0], Flavor.T))
    with pytest.raises(NotAMember):
        theta(A61, TropVector.of([0, 9, 0, 0], Flavor.FT))


def test_metric_duality_on_a63():
    rows = A63.row_vectors()
    images = [theta(A63, r) for r in rows]
    assert distance_multiset(rows) == distance_multiset(images) == [3, 5, 5]
    assert check_metric_duality(A63).passed


def test_one_by_one():
    assert check_metric_duality(TropMatrix.of([[4]], Flavor.FT)).passed
    assert check_duality(TropMatrix.of([[4]], Flavor.FT)).passed


@settings(max_examples=25, deadline=None)
@given(matrices(3, 3, Flavor.FT))
def test_duality_properties_ft(a):
    rep = check_duality(a, samples=8)
    assert rep.passed, rep.failures


@settings(max_examples=25, deadline=None)
@given(matrices(3, 3, Flavor.TBAR))
def test_duality_properties_tbar(a):
    rep = check_duality(a, samples=8)
    assert rep.passed, rep.failures
