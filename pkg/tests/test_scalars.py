from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hombra import scalars
from hombra.scalars import parse_scalar, format_scalar

rationals = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)
nonzero_rationals = rationals.filter(lambda x: x != 0)


# ---------------------------------------------------------------- basic ops

def test_add_examples():
    assert scalars.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert scalars.add(Fraction(0), Fraction(7, 9)) == Fraction(7, 9)
    assert scalars.add(Fraction(2, 4), Fraction(0)) == Fraction(1, 2)


def test_mul_and_inverse_examples():
    assert scalars.mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
    assert scalars.inverse(Fraction(5, 7)) == Fraction(7, 5)
    with pytest.raises(ZeroDivisionError):
        scalars.inverse(Fraction(0))


def test_sub_neg():
    assert scalars.sub(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)
    assert scalars.neg(Fraction(-3, 5)) == Fraction(3, 5)


# ------------------------------------------------------------- field axioms

@given(rationals, rationals, rationals)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0


@given(nonzero_rationals)
def test_multiplicative_inverse(x):
    assert x * scalars.inverse(x) == 1


@given(rationals, rationals)
def test_always_reduced(x, y):
    for v in (x + y, x * y, x - y, -x):
        import math
        assert v.denominator > 0
        assert math.gcd(abs(v.numerator), v.denominator) == 1
    assert Fraction(0).numerator == 0 and Fraction(0).denominator == 1


# ---------------------------------------------------------------- text form

def test_parse_format_examples():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    assert parse_scalar("+5") == Fraction(5)
    assert parse_scalar("0") == Fraction(0)
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(Fraction(-5)) == "-5"
    assert format_scalar(Fraction(0)) == "0"


def test_parse_rejects_garbage():
    for bad in ("1.5", "1e3", "a", "", "1/2/3", "/3", "1/-2", "--1"):
        with pytest.raises(ValueError):
            parse_scalar(bad)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/0")


@given(rationals)
def test_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x
