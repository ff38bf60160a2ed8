from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

import mpmath
import pytest

from reiswich.errors import CertificationError, DomainError
from reiswich.orbit import (
    OrbitVector,
    PrecisionConfig,
    arccos_sqrt_half,
    half_arccos_sqrt_bounds,
    minimal_orbit_vector,
    tau_for_m,
)
from reiswich.roots import RootEnclosure

F = Fraction


def oracle(expr, digits: int) -> str:
    with mpmath.workdps(digits + 30):
        v = expr()
        text = mpmath.nstr(v, digits + 25, strip_zeros=False)
    return str(Decimal(text).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))


def theta(q):
    return lambda: mpmath.acos(mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator)) / 2


def test_tau_for_m():
    assert tau_for_m(4) == F(-1, 2)
    assert tau_for_m(5) == F(1, 2)
    assert tau_for_m(2) == F(-1, 2)
    with pytest.raises(DomainError):
        tau_for_m(1)


class TestArccos:
    def test_exact_fifth(self):
        assert arccos_sqrt_half(F(1, 5), 12) == "0.553574358897"
        assert arccos_sqrt_half(F(1, 5), 12) == oracle(theta(F(1, 5)), 12)

    def test_quarter_is_pi_over_six(self):
        expected = oracle(lambda: mpmath.pi / 6, 6)
        assert arccos_sqrt_half(F(1, 4), 6) == expected == "0.523599"

    def test_wide_enclosure_fails(self):
        with pytest.raises(CertificationError):
            arccos_sqrt_half(RootEnclosure(F(1, 10**6), 1 - F(1, 10**6)), 12)

    def test_enclosure_outside_unit_interval(self):
        with pytest.raises(DomainError):
            arccos_sqrt_half(RootEnclosure(0, F(1, 2)), 3)

    def test_bounds_bracket_oracle(self):
        lo, hi = half_arccos_sqrt_bounds(F(1, 5) - F(1, 10**20), F(1, 5) + F(1, 10**20), 20)
        with mpmath.workdps(50):
            v = theta(F(1, 5))()
            assert mpmath.mpf(lo.numerator) / lo.denominator <= v <= mpmath.mpf(hi.numerator) / hi.denominator

    @pytest.mark.parametrize("q", [F(1, 3), F(7, 8), F(1, 1000)])
    def test_against_oracle(self, q):
        assert arccos_sqrt_half(q, 25) == oracle(theta(q), 25)


class TestOrbitVector:
    def test_m2(self):
        v = minimal_orbit_vector(2, PrecisionConfig(12))
        q = oracle(lambda: mpmath.pi / 4, 12)
        assert v.coefficients == [q, q]
        assert v.zero_coefficients == []

    def test_m3_middle_zero(self):
        v = minimal_orbit_vector(3, PrecisionConfig(12))
        q = oracle(lambda: mpmath.pi / 4, 12)
        assert v.coefficients == [q, "0.000000000000", q]
        assert v.zero_coefficients == [2]

    def test_m4(self):
        v = minimal_orbit_vector(4, PrecisionConfig(12))
        th = oracle(theta(F(1, 5)), 12)
        comp = oracle(lambda: mpmath.pi / 2 - theta(F(1, 5))(), 12)
        quarter = oracle(lambda: mpmath.pi / 4, 12)
        assert v.coefficients == [quarter, comp, th, quarter]
        assert th == "0.553574358897"
        assert v.xi[0].contains(F(1, 5))

    def test_odd_m_flags_middle(self):
        v = minimal_orbit_vector(9, PrecisionConfig(10))
        assert v.n == 3 and v.zero_coefficients == [5]
        assert v.coefficients[4] == "0.0000000000"

    @pytest.mark.parametrize("m", range(2, 16))
    def test_invariants(self, m):
        digits = 20
        v = minimal_orbit_vector(m, PrecisionConfig(digits))
        assert len(v.coefficients) == m
        xs = [e.midpoint for e in v.xi]
        assert len(xs) == v.n
        assert all(a < b for a, b in zip([0] + xs, xs + [1]))
        ulp = Decimal(1).scaleb(-digits)
        half_pi = Decimal(oracle(lambda: mpmath.pi / 2, digits))
        thetas = []
        for r in range(1, v.n + 1):
            a = Decimal(v.coefficients[r])          # E_{r+1}
            b = Decimal(v.coefficients[m - r - 1])  # E_{m-r}
            assert abs(a + b - half_pi) <= ulp
            lo = v.bounds[r][0] + v.bounds[m - r - 1][0]
            hi = v.bounds[r][1] + v.bounds[m - r - 1][1]
            with mpmath.workdps(60):
                assert mpmath.mpf(lo.numerator) / lo.denominator <= mpmath.pi / 2 <= mpmath.mpf(hi.numerator) / hi.denominator
            assert Decimal(0) < b < Decimal(oracle(lambda: mpmath.pi / 4, digits))
            thetas.append(b)
        assert all(x > y for x, y in zip(thetas, thetas[1:]))

    def test_deterministic(self):
        a = minimal_orbit_vector(11, PrecisionConfig(25)).to_json()
        b = minimal_orbit_vector(11, PrecisionConfig(25)).to_json()
        assert a == b

    def test_json_round_trip(self):
        v = minimal_orbit_vector(7, PrecisionConfig(15))
        data = v.to_json()
        assert data["units"] == "radians" and data["basis"] == "E_1..E_7"
        assert OrbitVector.from_json(data) == v

    def test_rejects_small_m(self):
        with pytest.raises(DomainError):
            minimal_orbit_vector(1)

    def test_env_default(self, monkeypatch):
        monkeypatch.setenv("REISWICH_DIGITS", "7")
        assert PrecisionConfig.from_env().decimal_digits == 7
        monkeypatch.delenv("REISWICH_DIGITS")
        assert PrecisionConfig.from_env().decimal_digits == 30
