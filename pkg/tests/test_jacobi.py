from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import taus
from reiswich.arith import generalized_binomial
from reiswich.core import reiswich_closed
from reiswich.errors import DomainError
from reiswich.jacobi import JacobiParams, jacobi, jacobi_by_recurrence, jacobi_shifted, proportionality_constant
from reiswich.unipoly import UniPoly

F = Fraction
T = sp.symbols("t")


def sympy_jacobi(a: Fraction, b: Fraction, n: int) -> UniPoly:
    expr = sp.jacobi(n, sp.Rational(a.numerator, a.denominator), sp.Rational(b.numerator, b.denominator), T)
    poly = sp.Poly(sp.expand(expr), T)
    coeffs = [F(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return UniPoly(coeffs)


def test_params_validated():
    with pytest.raises(DomainError):
        JacobiParams(F(-1), F(0))


def test_examples():
    p = JacobiParams(F(1), F(0))
    assert jacobi(p, 1) == UniPoly([F(1, 2), F(3, 2)])
    assert jacobi(JacobiParams(F(2, 3), F(-1, 4)), 0) == UniPoly([1])
    assert jacobi(p, 1)(1) == 2 == generalized_binomial(2, 1)


@pytest.mark.parametrize("a,b", [(F(1), F(0)), (F(1), F(-1, 2)), (F(1, 3), F(5, 2)), (F(-1, 2), F(-1, 2))])
@pytest.mark.parametrize("n", [0, 1, 2, 5, 8])
def test_against_sympy(a, b, n):
    assert jacobi(JacobiParams(a, b), n) == sympy_jacobi(a, b, n)


@settings(max_examples=25)
@given(taus, taus, st.integers(0, 10))
def test_normalization(a, b, n):
    assert jacobi(JacobiParams(a, b), n)(1) == generalized_binomial(n + a, n)


@pytest.mark.parametrize("a,b", [(F(1), F(0)), (F(1), F(7, 3)), (F(-1, 3), F(2, 5))])
def test_recurrence_consistency(a, b):
    params = JacobiParams(a, b)
    seq = jacobi_by_recurrence(params, 12)
    assert seq == [jacobi(params, k) for k in range(13)]


def test_shifted_examples():
    assert jacobi_shifted(0, 1) == UniPoly([-1, 3])
    assert jacobi_shifted(F(4, 9), 0) == UniPoly([1])
    s = jacobi_shifted(F(-1, 2), 2)
    assert s * (1 / s.lead) == UniPoly([F(1, 21), F(-2, 3), 1])


@pytest.mark.parametrize("tau,n,expected", [(F(0), 1, F(1, 3)), (F(5, 2), 0, F(1)), (F(1, 2), 2, F(8, 99))])
def test_proportionality_constant(tau, n, expected):
    assert proportionality_constant(tau, n) == expected


@settings(max_examples=30)
@given(taus, st.integers(0, 12))
def test_exact_proportionality(tau, n):
    c = proportionality_constant(tau, n)
    assert c > 0
    assert reiswich_closed(tau, n) - jacobi_shifted(tau, n) * c == UniPoly()
