"""Hypothesis strategies for exact tropical values."""

from fractions import Fraction

from hypothesis import strategies as st

from tropgreen.core import NEG_INF, POS_INF, Flavor
from tropgreen.linalg import TropMatrix, TropVector

rationals = st.one_of(
    st.integers(-20, 20),
    st.builds(lambda p, q: Fraction(p, q), st.integers(-40, 40), st.integers(1, 6)),
).map(lambda q: int(q) if isinstance(q, Fraction) and q.denominator == 1 else q)


def scalars(flavor: Flavor = Flavor.TBAR):
    options = [rationals]
    if flavor is not Flavor.FT:
        options.append(st.just(NEG_INF))
    if flavor is Flavor.TBAR:
        options.append(st.just(POS_INF))
    return st.one_of(*options)


def vectors(n, flavor=Flavor.TBAR):
    return st.lists(scalars(flavor), min_size=n, max_size=n).map(
        lambda xs: TropVector(flavor, tuple(xs)))


def matrices(rows, cols, flavor=Flavor.TBAR):
    return st.lists(st.lists(scalars(flavor), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(
        lambda g: TropMatrix(flavor, tuple(tuple(r) for r in g)))
