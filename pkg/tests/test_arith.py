import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import small_rationals
from reiswich.arith import (
    as_rational,
    binomial,
    falling_factorial,
    generalized_binomial,
    parse_rational,
    rational_to_str,
    round_decimal,
)
from reiswich.errors import DomainError, ParseError


@pytest.mark.parametrize("z,r,expected", [
    (Fraction(17, 3), 0, 1),
    (5, 2, 20),
    (Fraction(3, 2), 2, Fraction(3, 4)),
    (7, -1, 0),
    (7, -5, 0),
])
def test_falling_factorial_examples(z, r, expected):
    assert falling_factorial(z, r) == expected


@pytest.mark.parametrize("n,r,expected", [(4, 2, 6), (3, 5, 0), (0, 0, 1), (5, -1, 0)])
def test_binomial(n, r, expected):
    assert binomial(n, r) == expected


def test_binomial_rejects_negative_n():
    with pytest.raises(DomainError):
        binomial(-1, 0)


@pytest.mark.parametrize("z,r,expected", [(3, 1, 3), (Fraction(7, 2), 2, Fraction(35, 8)), (Fraction(-9, 4), 0, 1)])
def test_generalized_binomial(z, r, expected):
    assert generalized_binomial(z, r) == expected


def test_generalized_binomial_rejects_negative_r():
    with pytest.raises(DomainError):
        generalized_binomial(3, -1)


@given(st.integers(0, 30), st.integers(0, 30))
def test_falling_factorial_matches_factorial_ratio(z, r):
    if r <= z:
        assert falling_factorial(z, r) == math.factorial(z) // math.factorial(z - r)


@given(small_rationals, st.integers(0, 12))
def test_falling_factorial_step(z, r):
    assert falling_factorial(z, r + 1) == falling_factorial(z, r) * (z - r)


@given(st.integers(0, 25), st.integers(-3, 28))
def test_generalized_binomial_agrees_with_integer_binomial(n, r):
    if r >= 0:
        assert generalized_binomial(n, r) == binomial(n, r)


def test_rational_serialization():
    assert rational_to_str(Fraction(6, 4)) == "3/2"
    assert rational_to_str(Fraction(-4, 2)) == "-2"
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 4 / 6 ") == Fraction(2, 3)
    assert parse_rational("7") == 7


@pytest.mark.parametrize("bad", ["0.5", "1/0", "abc", "1/-2", "", "1e3"])
def test_parse_rational_refuses(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(rational_to_str(q)) == q


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


@pytest.mark.parametrize("q,digits,expected", [
    (Fraction(3, 7), 5, "0.42857"),
    (Fraction(1, 5), 3, "0.200"),
    (Fraction(-1, 3), 2, "-0.33"),
    (Fraction(5, 2), 0, "2"),
    (Fraction(1, 8), 2, "0.12"),
    (Fraction(0), 4, "0.0000"),
])
def test_round_decimal(q, digits, expected):
    assert round_decimal(q, digits) == expected
