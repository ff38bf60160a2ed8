import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import small_rationals
from reiswich.arith import falling_factorial
from reiswich.core import reiswich_closed
from reiswich.errors import DomainError
from reiswich.identities import (
    degree5_identity_check,
    degree5_sides,
    lemma_ci_check,
    lemma_ci_lhs,
    load_degree5_transcription,
    lucky_factor,
    scaled_coefficient_check,
)
from reiswich.multipoly import MultiPoly

F = Fraction


class TestCombinatorialIdentity:
    def test_base_case(self):
        res = lemma_ci_check(0, 0, 0)
        assert res.passed and lemma_ci_lhs(0, 0, 0) == MultiPoly.constant(1)

    def test_hand_expansion(self):
        x, y = MultiPoly.var("x"), MultiPoly.var("y")
        hand = x * y - 2 * (x - 1) * (y - 1) + (x - 2) * (y - 2)
        assert lemma_ci_lhs(2, 1, 1) == hand == MultiPoly.constant(2)
        assert lemma_ci_check(2, 1, 1).passed

    def test_vanishes_below_n(self):
        assert lemma_ci_lhs(3, 1, 1) == MultiPoly()
        assert lemma_ci_check(3, 1, 1).passed

    def test_outside_hypothesis_refused(self):
        with pytest.raises(DomainError):
            lemma_ci_check(2, 2, 1)

    @pytest.mark.parametrize("n", range(7))
    def test_sweep(self, n):
        for u in range(n + 1):
            for v in range(n + 1 - u):
                assert lemma_ci_check(n, u, v).passed

    @settings(max_examples=30)
    @given(st.integers(0, 6).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(0, n)).flatmap(lambda t: st.tuples(
            st.just(t[0]), st.just(t[1]), st.integers(0, t[0] - t[1])))),
        small_rationals, small_rationals)
    def test_evaluation_matches_scalar_sum(self, nuv, px, py):
        n, u, v = nuv
        scalar = sum((-1) ** r * math.comb(n, r) * falling_factorial(px - r, u) * falling_factorial(py - r, v)
                     for r in range(n + 1))
        assert lemma_ci_lhs(n, u, v).evaluate({"x": px, "y": py}) == scalar


def sympy_degree5():
    """Second, independent transcription of the identity for cross-checking the data file."""
    n, t, r = sp.symbols("n tau r")
    lhs = (n + 1) * (n + t + 1) * (2 * n + t + 1) * (2 * n + t - r + 3) * (2 * n + t - r + 2)
    rhs = ((n - r + 1) * (n + t - r + 1) * (2 * n + t + 3) * (2 * n + t + 2) * (2 * n + t + 1)
           + r * (2 * n + t + 2) * (2 * n + t - r + 2) * (2 * n**2 + 2 * (t + 2) * n + (t + 1) ** 2)
           - r * (r - 1) * (2 * n + t + 3) * (n + t + 1) * (n + 1))
    return (n, t, r), lhs, rhs


class TestDegreeFive:
    def test_passes(self):
        res = degree5_identity_check()
        assert res.passed and res.difference == MultiPoly()
        assert res.details["lhs_degree"] == 5 and res.details["rhs_degree"] == 5

    def test_data_file_shape(self):
        data = load_degree5_transcription()
        assert data["indeterminates"] == ["n", "tau", "r"]
        assert len(data["lhs"]) == 1 and len(data["rhs"]) == 3

    @pytest.mark.parametrize("point,value", [((1, 0, 1), 144), ((0, 0, 0), 6)])
    def test_spot_values(self, point, value):
        lhs, rhs = degree5_sides()
        pt = dict(zip(("n", "tau", "r"), point))
        assert lhs.evaluate(pt) == value
        assert rhs.evaluate(pt) == value

    def test_transcription_matches_sympy(self):
        (n, t, r), lhs_s, rhs_s = sympy_degree5()
        lhs, rhs = degree5_sides()
        for side, ref in ((lhs, lhs_s), (rhs, rhs_s)):
            poly = sp.Poly(sp.expand(ref), n, t, r)
            expected = {}
            for (en, et, er), c in poly.terms():
                mono = tuple(p for p in (("n", en), ("r", er), ("tau", et)) if p[1])
                expected[mono] = int(c)
            assert side == MultiPoly(expected)

    @given(small_rationals, small_rationals, small_rationals)
    def test_holds_at_rational_points(self, a, b, c):
        lhs, rhs = degree5_sides()
        pt = {"n": a, "tau": b, "r": c}
        assert lhs.evaluate(pt) == rhs.evaluate(pt)


class TestScaledCoefficients:
    @pytest.mark.parametrize("tau,n,r", [(F(0), 1, 1), (F(-1, 2), 2, 2), (F(1, 2), 3, 1)])
    def test_examples(self, tau, n, r):
        assert scaled_coefficient_check(tau, n, r).passed

    @pytest.mark.parametrize("n,r", [(0, 0), (2, 0), (2, 3), (3, 4)])
    def test_range(self, n, r):
        with pytest.raises(DomainError):
            scaled_coefficient_check(F(0), n, r)

    def test_first_line_by_hand(self):
        # n=1, r=1, tau=0: R_2 = x^2 - 4/5 x + 1/10, and C = -1 * 3 * fact[5, 3] = -180
        assert lucky_factor(0, 1, 1) == -180
        assert -180 * F(-4, 5) == 2 * 2 * 3 * 4 * 3

    @pytest.mark.parametrize("tau", [F(0), F(1, 2), F(-1, 2)])
    def test_printed_factor_is_off_by_common_factor(self, tau):
        for n in range(1, 6):
            for r in range(1, n + 1):
                ratio = lucky_factor(tau, n, r) / lucky_factor(tau, n, r, as_printed=True)
                assert ratio == 2 * n + tau + 2 - r
                # with the printed factor the first line fails
                c = lucky_factor(tau, n, r, as_printed=True)
                k = n + 1 - r
                actual = c * reiswich_closed(tau, n + 1).coeff(k)
                expected = (n + 1) * (n + tau + 1) * (2 * n + tau + 1) * (2 * n + tau - r + 3) * (2 * n + tau - r + 2)
                assert actual * (2 * n + tau + 2 - r) == expected

    @pytest.mark.parametrize("tau", [F(-99, 100), F(9, 2), F(-1, 3)])
    def test_other_parameters(self, tau):
        for n in range(1, 7):
            for r in range(1, n + 1):
                assert scaled_coefficient_check(tau, n, r).passed
