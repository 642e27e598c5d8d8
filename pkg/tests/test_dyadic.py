from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thompson_twist.dyadic import ONE, ZERO, Dyadic, as_dyadic, floor, mul_pow2, normalize
from thompson_twist.errors import NonDyadic

dyadics = st.builds(Dyadic, st.integers(-(10**30), 10**30), st.integers(0, 80))


def F(a):
    return Fraction(a.num, 1 << a.exp)


def canonical(a):
    return a.exp == 0 or a.num % 2 == 1


@pytest.mark.parametrize(
    "n, k, num, exp",
    [(4, 3, 1, 1), (0, 5, 0, 0), (7, 0, 7, 0), (-12, 2, -3, 0), (-6, 4, -3, 3)],
)
def test_normalize(n, k, num, exp):
    a = normalize(n, k)
    assert (a.num, a.exp) == (num, exp)


def test_add_examples():
    assert Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2)
    a = Dyadic(5, 7)
    assert a + ZERO == a
    # oracle: Fraction arithmetic
    s = Dyadic(3, 3) + Dyadic(5, 3)
    assert F(s) == Fraction(3, 8) + Fraction(5, 8) == 1
    assert s == ONE


def test_mul_examples():
    assert Dyadic(1, 1) * Dyadic(3, 2) == Dyadic(3, 3)
    assert mul_pow2(Dyadic(5, 3), 3) == 5
    assert mul_pow2(ONE, -2) == Dyadic(1, 2)


def test_compare_and_floor():
    assert Dyadic(1, 1) < Dyadic(3, 2)
    assert Dyadic(1, 1).compare(Dyadic(3, 2)) == -1
    assert floor(Dyadic(-1, 1)) == -1
    assert floor(Dyadic(7, 1)) == 3


@given(dyadics, dyadics)
def test_results_canonical_and_exact(a, b):
    for op, ref in [(a + b, F(a) + F(b)), (a - b, F(a) - F(b)), (a * b, F(a) * F(b))]:
        assert canonical(op)
        assert F(op) == ref
    assert F(-a) == -F(a)


@given(dyadics, dyadics, dyadics)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(dyadics, dyadics)
def test_order_matches_sign_of_difference(a, b):
    diff = a - b
    sign = (diff > 0) - (diff < 0)
    assert a.compare(b) == sign
    assert (a < b) == (F(a) < F(b))


@given(dyadics)
def test_floor_bounds(a):
    assert a.floor() <= a < a.floor() + 1


@given(dyadics, st.integers(-60, 60))
def test_mul_pow2(a, e):
    assert F(a.mul_pow2(e)) == F(a) * Fraction(2) ** e


@given(dyadics)
def test_text_round_trip(a):
    assert Dyadic.parse(str(a)) == a


def test_parse_normalizes_and_rejects():
    assert str(Dyadic.parse("4/2^3")) == "1/2^1"
    assert Dyadic.parse(" -7 ") == -7
    assert str(Dyadic.parse("7/2^0")) == "7"
    for bad in ["1/3", "0.5", "1/2^-1", "", "x", "1/4"]:
        with pytest.raises(NonDyadic):
            Dyadic.parse(bad)


def test_as_dyadic():
    assert as_dyadic(Fraction(3, 8)) == Dyadic(3, 3)
    with pytest.raises(NonDyadic):
        as_dyadic(Fraction(1, 3))
    with pytest.raises(NonDyadic):
        as_dyadic(0.5)


def test_immutable_and_hashable():
    a = Dyadic(3, 1)
    with pytest.raises(AttributeError):
        a.num = 5
    assert hash(Dyadic(6, 0)) == hash(6)
    assert len({Dyadic(2, 1), ONE, 1}) == 1
