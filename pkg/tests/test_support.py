import itertools
import random

import pytest

from tropgreen import diffcons
from tropgreen.fixtures import A61
from tropgreen.verdict import Obstruction, Outcome, Verdict, WitnessBundle


def test_difference_constraints_feasible_and_infeasible():
    sol = diffcons.solve(3, [(0, 1, 2), (1, 2, -1), (2, 0, 0)])
    assert sol is not None
    assert sol[0] - sol[1] <= 2 and sol[1] - sol[2] <= -1 and sol[2] - sol[0] <= 0
    assert diffcons.solve(2, [(0, 1, -1), (1, 0, 0)]) is None


def test_difference_constraints_against_grid_search():
    rng = random.Random(0)
    for _ in range(200):
        cons = [(rng.randrange(3), rng.randrange(3), rng.randint(-2, 2)) for _ in range(4)]
        grid = any(all(x[a] - x[b] <= c for a, b, c in cons)
                   for x in itertools.product(range(-8, 9), repeat=3))
        assert diffcons.feasible(3, cons) == grid


def test_disjunctive_search_and_budget():
    clauses = [[[(0, 1, -1)], [(1, 0, -1)]], [[(0, 1, 5)]]]
    sol, _ = diffcons.search_disjunctive(2, [], clauses, budget=100)
    assert sol is not None and sol[0] - sol[1] <= -1
    sol, _ = diffcons.search_disjunctive(2, [(1, 0, 0)], [[[(1, 0, -1)]]] * 2, budget=100)
    assert sol is not None
    sol, _ = diffcons.search_disjunctive(2, [(0, 1, -1)], [[[(1, 0, 0)]]], budget=100)
    assert sol is None
    many = [[[(0, 1, 0)], [(1, 0, 0)]]] * 12 + [[[(0, 1, -1)], [(1, 0, -1)]]]
    assert diffcons.search_disjunctive(2, [(0, 1, 0), (1, 0, 0)], many, budget=3)[0] == "budget"


def test_verdict_invariants_and_exit_codes():
    with pytest.raises(ValueError):
        Verdict(Outcome.HOLDS)
    with pytest.raises(ValueError):
        Verdict(Outcome.FAILS)
    assert [o.exit_code for o in Outcome] == [0, 1, 2]
    v = Verdict(Outcome.HOLDS, witness=WitnessBundle("<=L", {"P": None, "Q": A61}))
    d = v.to_dict()
    assert d["witness"]["identity_used"] == {"P": True, "Q": False}
    assert d["witness"]["matrices"]["Q"]["rows"][0] == ["0", "1", "2", "3"]
    f = Verdict(Outcome.FAILS, obstruction=Obstruction("k", {"A": 1}))
    assert f.to_dict()["obstruction"]["values"] == {"A": 1}
    u = Verdict.unknown_({"rounds": 3}, "note")
    assert u.unknown and u.to_dict()["notes"] == ["note"]
