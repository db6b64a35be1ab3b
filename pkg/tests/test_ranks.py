import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import matrices
from tropgreen import ranks
from tropgreen.core import NEG_INF as N
from tropgreen.core import POS_INF, Flavor
from tropgreen.fixtures import A61, A62, A63, B61, B62, G27
from tropgreen.linalg import TropMatrix, mat_mul
from tropgreen.ranks import (
    FlavorUnsupported, SizeLimitExceeded, bideterminant, col_rank, determinantal_rank,
    factor_rank_bounds, gm_alternating_search, gm_dependency, gm_independent, gm_rank,
    random_matrix, rank_report, row_rank, strongly_regular, strongly_regular_bruteforce,
    tropical_rank,
)

ZERO_T = TropMatrix.of([[N, N], [N, N]], Flavor.T)
ONES3 = TropMatrix.of([[0] * 3] * 3, Flavor.FT)


def test_row_and_column_ranks():
    assert col_rank(A61) == 4 and col_rank(B61) == 3
    assert col_rank(A62) == 3 and col_rank(B62) == 4
    assert row_rank(B61) == 3
    assert row_rank(ZERO_T) == col_rank(ZERO_T) == 0


def test_factor_rank_bounds():
    assert factor_rank_bounds(B61) == (3, 3)
    assert factor_rank_bounds(ZERO_T) == (0, 0)
    assert factor_rank_bounds(ONES3) == (1, 1)


def test_gm_examples():
    assert gm_independent(G27.col_vectors(), Flavor.T).holds
    dep = gm_independent(G27.col_vectors(), Flavor.TBAR)
    assert dep.fails
    assert dep.obstruction.values["alpha"] == [POS_INF, POS_INF]
    assert gm_independent([(1, 2, 3)], Flavor.T).holds
    assert gm_rank(G27, "columns", Flavor.T) == 2
    assert gm_rank(G27, "columns", Flavor.TBAR) == 1
    assert gm_rank(ZERO_T, "columns", Flavor.T) == 0
    with pytest.raises(FlavorUnsupported):
        gm_independent(G27.col_vectors(), Flavor.FT)


def test_determinantal_examples():
    assert bideterminant(A63.rows) == (5, 8)
    assert determinantal_rank(A63) == 3
    assert determinantal_rank(TropMatrix.of([[0, 0], [0, 0]], Flavor.FT)) == 1
    with pytest.raises(FlavorUnsupported):
        determinantal_rank(TropMatrix.of([[POS_INF]], Flavor.TBAR))


def test_strongly_regular_examples():
    assert strongly_regular([[0, N], [N, 0]])
    assert not strongly_regular([[0, 0], [0, 0]])
    minor = B61.submatrix((0, 1, 2), (1, 2, 3))
    assert strongly_regular(minor)
    assert max(w for _, _, w in ranks.permutation_weights(minor)) == 3


def test_tropical_rank_examples():
    assert tropical_rank(A63) == 3
    assert tropical_rank(TropMatrix.of([[0] * 4] * 4, Flavor.FT)) == 1
    assert tropical_rank(B61) == 3


def test_size_cap():
    big = TropMatrix.of([[0] * 6] * 6, Flavor.FT)
    with pytest.raises(SizeLimitExceeded):
        tropical_rank(big)
    assert tropical_rank(big, max_n=6) == 1


def test_column_rank_is_not_j_invariant_over_t():
    # A62 and B62 are J-related (see the greens tests) yet have different column ranks
    assert col_rank(A62) != col_rank(B62)


def test_rank_report_zero_matrix():
    rep = rank_report(ZERO_T)
    assert (rep.row_rank, rep.col_rank, rep.gm_row, rep.gm_col, rep.tropical,
            rep.determinantal, rep.factor_rank) == (0, 0, 0, 0, 0, 0, (0, 0))


def test_rank_report_flavor_override():
    assert rank_report(G27).gm_col == 2
    assert rank_report(G27, Flavor.TBAR).gm_col == 1


def _small_grids(k):
    vals = [N, 0, 1]
    rng = random.Random(k)
    for _ in range(300):
        yield [[rng.choice(vals) for _ in range(k)] for _ in range(k)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_strongly_regular_matches_subset_definition(k):
    for g in _small_grids(k):
        assert strongly_regular(g) == strongly_regular_bruteforce(g)


def test_strongly_regular_matches_subset_definition_4x4_sampled():
    # 24 permutations: test the subset definition on sampled subsets only
    rng = random.Random(4)
    for g in _small_grids(4):
        weights = [w for _, _, w in ranks.permutation_weights(g)]
        best = max(weights)
        if strongly_regular(g):
            for _ in range(200):
                mask = rng.randrange(1, 1 << 24)
                inside = [w for i, w in enumerate(weights) if mask >> i & 1]
                outside = [w for i, w in enumerate(weights) if not mask >> i & 1]
                assert max(inside) != max(outside, default=N)
        else:
            top = [i for i, w in enumerate(weights) if w == best]
            if best is N:
                assert all(w is N for w in weights)
            else:
                # split two maximizers across the sides
                mask = 1 << top[0]
                inside = [w for i, w in enumerate(weights) if mask >> i & 1]
                outside = [w for i, w in enumerate(weights) if not mask >> i & 1]
                assert max(inside) == max(outside)


def test_gm_exact_agrees_with_alternating_route():
    rng = random.Random(7)
    both = 0
    for _ in range(150):
        a = random_matrix(rng, 3, Flavor.T, lo=-2, hi=2)
        vecs = [c.entries for c in a.col_vectors()]
        exact = gm_dependency(vecs, Flavor.T)
        alt = gm_alternating_search(vecs)
        if alt is not None:
            assert exact is not None
            both += 1
        if exact is not None:
            alpha, left, right = exact
            assert ranks._dependency_holds(vecs, alpha, left, right)
    assert both > 0


@settings(max_examples=30, deadline=None)
@given(matrices(3, 3, Flavor.T))
def test_rank_chain_and_transposes(a):
    assert tropical_rank(a) <= determinantal_rank(a)
    assert tropical_rank(a) == tropical_rank(a.T)
    assert determinantal_rank(a) == determinantal_rank(a.T)
    lo, hi = factor_rank_bounds(a)
    assert lo <= hi


@settings(max_examples=30, deadline=None)
@given(matrices(3, 3, Flavor.T))
def test_gm_over_t_dominates_gm_over_tbar(a):
    for axis in ("rows", "columns"):
        assert gm_rank(a, axis, Flavor.T) >= gm_rank(a, axis, Flavor.TBAR)


@pytest.mark.parametrize("name,flavor", [
    ("tropical", Flavor.T), ("determinantal", Flavor.FT), ("gm_col", Flavor.T),
    ("factor-bracket", Flavor.T),
])
def test_rank_product_small_fuzz(name, flavor):
    assert ranks.rank_product_fuzz(name, trials=40, size=3, flavor=flavor, seed=11).passed
