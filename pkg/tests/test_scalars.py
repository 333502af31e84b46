from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zgraded.scalars import (
    GAUSSIAN,
    RATIONAL,
    Gaussian,
    I,
    coerce,
    div,
    format_term,
    from_json,
    to_json,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gaussians = st.builds(Gaussian, rationals, rationals)


def test_i_squared():
    assert I * I == -1
    assert I * I == Gaussian(-1, 0)
    assert hash(Gaussian(3, 0)) == hash(3)


@given(gaussians, gaussians, gaussians)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(rationals, rationals)
def test_mixed_arithmetic_matches_fraction(x, y):
    g = Gaussian(x, 0)
    assert g + y == x + y
    assert y - g == y - x
    assert g * y == x * y
    if y:
        assert div(x, y) == x / y


def test_div_never_floats():
    q = div(1, 3)
    assert isinstance(q, Fraction) and q == Fraction(1, 3)
    assert div(4, 2) == 2 and isinstance(div(4, 2), int)


@given(rationals)
def test_json_round_trip_rational(x):
    assert from_json(to_json(x, RATIONAL), RATIONAL) == x
    d = to_json(x, RATIONAL)
    assert d["den"] > 0


@given(gaussians)
def test_json_round_trip_gaussian(x):
    assert from_json(to_json(x, GAUSSIAN), GAUSSIAN) == x


def test_json_rejects_bad():
    for bad in ({"num": 1}, {"num": 1, "den": 0}, {"num": 1.5, "den": 2}, 3):
        with pytest.raises(ValueError):
            from_json(bad, RATIONAL)
    with pytest.raises(ValueError):
        coerce(I, RATIONAL)


def test_format_term():
    assert format_term(1, "k") == "+k"
    assert format_term(-1, "a1a3") == "-a1a3"
    assert format_term(Fraction(3, 2), "j") == "+3/2*j"
    assert format_term(I, "e1") == "+i*e1"
    assert format_term(Gaussian(1, 2), "e1") == "+(1+2i)*e1"
