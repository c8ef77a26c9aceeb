import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softroot.dyadic import ComplexDyadic, Dyadic, DyadicOverflow, dyadic_sqrt_bounds

from helpers import dyadics

LAWS = settings(max_examples=10_000)


def test_examples():
    assert Dyadic(1, 0) + Dyadic(1, -1) == Dyadic(3, -1)
    assert Dyadic(3, -1) * Dyadic(0) == Dyadic(0)
    assert (Dyadic(3, -1) * 0).e == 0


def test_canonical_form():
    x = Dyadic(12, -3)
    assert (x.m, x.e) == (3, -1)
    z = Dyadic(0, 17)
    assert (z.m, z.e) == (0, 0)
    assert Dyadic(-8) == Dyadic(-1, 3)


@given(dyadics())
def test_canonical_after_construction(x):
    assert x.m % 2 == 1 or (x.m == 0 and x.e == 0)


@LAWS
@given(dyadics(), dyadics(), dyadics())
def test_ring_laws_bit_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    lhs = (a + b) + c
    rhs = a + (b + c)
    assert (lhs.m, lhs.e) == (rhs.m, rhs.e)


@given(dyadics())
def test_self_subtraction(x):
    d = x - x
    assert (d.m, d.e) == (0, 0)


@given(dyadics(), dyadics())
def test_arithmetic_matches_fractions(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (-a).to_fraction() == -fa
    assert a.cmp(b) == (fa > fb) - (fa < fb)


@given(dyadics(), dyadics(), dyadics())
def test_total_order(a, b, c):
    assert (a <= b) or (b <= a)
    if a <= b and b <= c:
        assert a <= c


@given(dyadics(), st.integers(-60, 60))
def test_rounding(x, p):
    q = x.to_fraction()
    step = Fraction(1, 2**p) if p >= 0 else Fraction(2 ** (-p))
    assert x.floor_to(p).to_fraction() <= q <= x.ceil_to(p).to_fraction()
    assert q - x.floor_to(p).to_fraction() < step
    assert abs(x.round_to(p).to_fraction() - q) <= step / 2


@given(dyadics())
def test_json_round_trip(x):
    obj = json.loads(json.dumps(x.to_json()))
    y = Dyadic.from_json(obj)
    assert (y.m, y.e) == (x.m, x.e)


def test_json_format():
    assert Dyadic(-3, -5).to_json() == {"m": "-3", "e": -5}
    assert Dyadic.from_json({"m": "-3", "e": -5}) == Dyadic(-3, -5)
    with pytest.raises(ValueError):
        Dyadic.from_json({"m": "x", "e": 0})


def test_exponent_overflow_is_reported():
    with pytest.raises(DyadicOverflow):
        Dyadic(1, 1 << 62)
    with pytest.raises(DyadicOverflow):
        Dyadic(1, (1 << 61) + 5) * Dyadic(1, (1 << 61))


def test_from_fraction_rejects_non_dyadic():
    assert Dyadic.from_fraction(Fraction(3, 8)) == Dyadic(3, -3)
    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(1, 3))


@given(st.integers(0, 1 << 80), st.integers(1, 80))
def test_sqrt_bounds(n, p):
    x = Dyadic(n, -20)
    lo, hi = dyadic_sqrt_bounds(x, p)
    q = x.to_fraction()
    assert lo.to_fraction() ** 2 <= q <= hi.to_fraction() ** 2
    assert hi - lo <= Dyadic(1, -p)


@given(dyadics(), dyadics(), dyadics(), dyadics())
def test_complex_ops(a, b, c, d):
    z, w = ComplexDyadic(a, b), ComplexDyadic(c, d)
    assert z * w == ComplexDyadic(a * c - b * d, a * d + b * c)
    assert (z - z) == ComplexDyadic()
    assert z.abs2() == a * a + b * b
    assert ComplexDyadic.from_json(z.to_json()) == z
