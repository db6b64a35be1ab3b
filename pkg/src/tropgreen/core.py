"""Exact scalars for the max-plus semirings FT, T and TBar.

Finite values are Python ``int`` or :class:`fractions.Fraction`.  The two
infinities are the singletons :data:`NEG_INF` and :data:`POS_INF`; they
compare correctly against rationals and against each other, and unary minus
swaps them, so ``max``, ``min``, ``sorted`` and ``-x`` work on any scalar.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from typing import Union


class TropicalError(Exception):
    """Base class for all errors raised by this package."""


class UndefinedInvolution(TropicalError):
    pass


class FlavorError(TropicalError):
    """A value is not legal for the semiring flavor of its container."""


class DimensionMismatch(TropicalError):
    pass


class _Infinity:
    __slots__ = ("_positive",)

    def __init__(self, positive: bool):
        self._positive = positive

    def __repr__(self):
        return "POS_INF" if self._positive else "NEG_INF"

    def __str__(self):
        return "+inf" if self._positive else "-inf"

    def __neg__(self):
        return NEG_INF if self._positive else POS_INF

    def __reduce__(self):
        return ("POS_INF" if self._positive else "NEG_INF")

    def __lt__(self, other):
        if self._positive:
            return False
        return other is not self

    def __le__(self, other):
        if self._positive:
            return other is self
        return True

    def __gt__(self, other):
        if self._positive:
            return other is not self
        return False

    def __ge__(self, other):
        if self._positive:
            return True
        return other is self

    def __hash__(self):
        return hash(("tropical-infinity", self._positive))


NEG_INF = _Infinity(False)
POS_INF = _Infinity(True)

Scalar = Union[int, Fraction, _Infinity]


class Flavor(enum.Enum):
    FT = "FT"
    T = "T"
    TBAR = "TBar"

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        key = text.strip().lower()
        for f in cls:
            if f.value.lower() == key:
                return f
        raise ValueError(f"unknown semiring {text!r}; expected FT, T or TBar")

    def __le__(self, other: "Flavor") -> bool:
        return _FLAVOR_RANK[self] <= _FLAVOR_RANK[other]

    def __lt__(self, other: "Flavor") -> bool:
        return _FLAVOR_RANK[self] < _FLAVOR_RANK[other]

    def join(self, other: "Flavor") -> "Flavor":
        return self if other <= self else other


_FLAVOR_RANK = {Flavor.FT: 0, Flavor.T: 1, Flavor.TBAR: 2}


def is_finite(a) -> bool:
    return a is not NEG_INF and a is not POS_INF


def legal(a, flavor: Flavor) -> bool:
    if a is NEG_INF:
        return flavor is not Flavor.FT
    if a is POS_INF:
        return flavor is Flavor.TBAR
    return True


def check_scalar(a, flavor: Flavor | None = None):
    """Validate and return ``a`` as an exact scalar; floats are rejected."""
    if a is NEG_INF or a is POS_INF:
        pass
    elif isinstance(a, bool) or not isinstance(a, (int, Fraction)):
        raise TypeError(f"tropical scalars must be int, Fraction or an infinity, got {a!r}")
    if flavor is not None and not legal(a, flavor):
        raise FlavorError(f"{format_scalar(a)} is not an element of {flavor.value}")
    return a


def t_add(a, b):
    """Tropical sum: the maximum."""
    return a if b <= a else b


def t_mul(a, b):
    """Tropical product; -inf absorbs everything, including +inf."""
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    if a is POS_INF or b is POS_INF:
        return POS_INF
    return a + b


def t_neg(a, flavor: Flavor = Flavor.TBAR):
    if flavor is Flavor.T and a is NEG_INF:
        raise UndefinedInvolution("the involution is not defined at -inf over T")
    return -a


def t_sum(values, empty=NEG_INF):
    best = empty
    for v in values:
        if best < v:
            best = v
    return best


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+|\.\d+)?$")


def parse_scalar(text) -> Scalar:
    """Parse ``"3"``, ``"-7/2"``, ``"2.5"``, ``"-inf"`` or ``"+inf"``.

    Decimal strings are read exactly; ints pass through unchanged.
    """
    if isinstance(text, (int, Fraction, _Infinity)) and not isinstance(text, bool):
        return check_scalar(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot parse scalar from {text!r}")
    s = text.strip().lower()
    if s in ("-inf", "-oo", "−∞", "-∞"):
        return NEG_INF
    if s in ("+inf", "inf", "+oo", "∞", "+∞"):
        return POS_INF
    if not _RATIONAL.match(s):
        raise ValueError(f"not an exact scalar: {text!r}")
    try:
        q = Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    if q.denominator == 1:
        return int(q)
    return q


def format_scalar(a) -> str:
    if a is NEG_INF:
        return "-inf"
    if a is POS_INF:
        return "+inf"
    return str(a)
