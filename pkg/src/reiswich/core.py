"""Reiswich polynomials, their moment functional and orthogonality checks.

Three independent constructions are provided: the closed-form sum, the
three-term recursion and the arithmetic-series product form ``pm_original``
for the two half-integer parameters.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import RationalLike, as_rational, binomial, falling_factorial, rational_to_str
from .errors import DomainError
from .report import CheckRecord, VerificationReport
from .unipoly import UniPoly


@dataclass(frozen=True)
class ReiswichParam:
    tau: Fraction

    def __post_init__(self):
        tau = as_rational(self.tau)
        if tau <= -1:
            raise DomainError(f"tau must exceed -1, got {rational_to_str(tau)}")
        object.__setattr__(self, "tau", tau)

    def __str__(self) -> str:
        return rational_to_str(self.tau)


ParamLike = Union[ReiswichParam, RationalLike]


def as_param(value: ParamLike) -> ReiswichParam:
    if isinstance(value, ReiswichParam):
        return value
    return ReiswichParam(as_rational(value))


def _check_degree(n: int) -> None:
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")


def reiswich_closed(param: ParamLike, n: int) -> UniPoly:
    """Monic ``R_n`` from the explicit falling-factorial sum."""
    tau = as_param(param).tau
    _check_degree(n)
    coeffs = [Fraction(0)] * (n + 1)
    for r in range(n + 1):
        c = binomial(n, r) * falling_factorial(n + tau, r) / falling_factorial(2 * n + tau + 1, r)
        coeffs[n - r] = -c if r % 2 else c
    return UniPoly(coeffs)


def recursion_coefficients(param: ParamLike, n: int) -> tuple[Fraction, Fraction]:
    """``(alpha_n, beta_n)`` with ``R_{n+1} = (x - alpha_n) R_n - beta_n R_{n-1}``.

    ``beta_0`` is returned as a literal zero without touching its denominator.
    """
    tau = as_param(param).tau
    _check_degree(n)
    alpha = (2 * n * n + 2 * (tau + 2) * n + (tau + 1) ** 2) / ((2 * n + tau + 3) * (2 * n + tau + 1))
    if n == 0:
        return alpha, Fraction(0)
    beta = ((n + tau + 1) * (n + tau) * (n + 1) * n) / (
        (2 * n + tau + 2) * (2 * n + tau + 1) ** 2 * (2 * n + tau)
    )
    return alpha, beta


def reiswich_sequence(param: ParamLike, max_n: int) -> list[UniPoly]:
    """``[R_0, ..., R_max_n]`` generated by the three-term recursion."""
    param = as_param(param)
    _check_degree(max_n)
    x = UniPoly.x()
    seq = [UniPoly.constant(1)]
    prev = UniPoly()
    for k in range(max_n):
        alpha, beta = recursion_coefficients(param, k)
        nxt = (x - alpha) * seq[-1] - prev * beta
        prev = seq[-1]
        seq.append(nxt)
    return seq


def reiswich_recursive(param: ParamLike, n: int) -> UniPoly:
    return reiswich_sequence(param, n)[n]


def pm_original(m: int) -> UniPoly:
    """The original ``P_m`` built literally from ratios of arithmetic sums.

    The coefficient of ``x^(k-1-r)``, ``k = m // 2``, is ``(-1)^r`` times the
    product over ``d = 1..r`` of ``sum_{mu=d+1}^{k} (1+2m-4mu)`` divided by
    ``sum_{mu=1}^{d} (1+2m-4mu)``. Sums are added term by term on purpose.
    """
    if m < 2:
        raise DomainError(f"P_m is defined for m >= 2, got {m}")
    k = m // 2
    deg = k - 1
    coeffs = [Fraction(0)] * (deg + 1)
    prod = Fraction(1)
    for r in range(deg + 1):
        if r > 0:
            d = r
            top = sum(1 + 2 * m - 4 * mu for mu in range(d + 1, k + 1))
            bottom = sum(1 + 2 * m - 4 * mu for mu in range(1, d + 1))
            prod *= Fraction(top, bottom)
        coeffs[deg - r] = -prod if r % 2 else prod
    return UniPoly(coeffs)


class MomentFunctional:
    """Moments of ``(tau+2)(tau+1)(1-x) x^tau dx`` on ``[0, 1]``, memoized.

    The cache is filled under a lock so each index is computed at most once
    even when the instance is shared between threads.
    """

    def __init__(self, param: ParamLike):
        self.param = as_param(param)
        self.tau = self.param.tau
        self._cache: list[Fraction] = []
        self._lock = threading.Lock()

    def _formula(self, n: int) -> Fraction:
        t = self.tau
        return (t + 2) * (t + 1) / ((n + t + 2) * (n + t + 1))

    def moment(self, n: int) -> Fraction:
        _check_degree(n)
        cache = self._cache
        if n < len(cache):
            return cache[n]
        with self._lock:
            while len(cache) <= n:
                cache.append(self._formula(len(cache)))
        return cache[n]

    def moments(self, max_n: int) -> list[Fraction]:
        self.moment(max_n)
        return list(self._cache[: max_n + 1])

    def inner_product(self, p: UniPoly, q: UniPoly) -> Fraction:
        if p.is_zero() or q.is_zero():
            return Fraction(0)
        mu = self.moments(p.degree + q.degree)
        total = Fraction(0)
        for i, a in enumerate(p.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(q.coeffs):
                if b:
                    total += a * b * mu[i + j]
        return total


def moment(fn: MomentFunctional, n: int) -> Fraction:
    return fn.moment(n)


def inner_product(fn: MomentFunctional, p: UniPoly, q: UniPoly) -> Fraction:
    return fn.inner_product(p, q)


def norm_square_formula(param: ParamLike, n: int) -> Fraction:
    """Closed form of ``<R_n, R_n>``."""
    tau = as_param(param).tau
    _check_degree(n)
    num = math.factorial(n + 1) * math.factorial(n) * falling_factorial(n + tau + 1, n) * falling_factorial(n + tau, n)
    den = falling_factorial(2 * n + tau + 2, 2 * n) * falling_factorial(2 * n + tau + 1, 2 * n)
    return num / den


def key_identity_value(param: ParamLike, n: int, s: int) -> Fraction:
    """Left side of the key identity; vanishes for ``s < n``."""
    tau = as_param(param).tau
    _check_degree(n)
    if s < 0:
        raise DomainError(f"s must be non-negative, got {s}")
    total = Fraction(0)
    for r in range(n + 1):
        term = binomial(n, r) * falling_factorial(n + tau, r) / falling_factorial(2 * n + tau + 1, r)
        term /= (n + tau + s - r + 2) * (n + tau + s - r + 1)
        total += -term if r % 2 else term
    return total


def verify_orthogonality(param: ParamLike, max_n: int) -> VerificationReport:
    """Exact check of ``<R_n, R_m> = 0`` for ``m < n`` and of every norm square."""
    param = as_param(param)
    _check_degree(max_n)
    fn = MomentFunctional(param)
    polys = [reiswich_closed(param, k) for k in range(max_n + 1)]
    report = VerificationReport("orthogonality")
    t = str(param)
    for n in range(max_n + 1):
        for m in range(n):
            value = fn.inner_product(polys[n], polys[m])
            report.add(CheckRecord(
                f"orthogonality/tau={t}/n={n}/m={m}",
                value == 0,
                {"inner_product": rational_to_str(value)},
                sort_key=("orthogonality", param.tau, n, m),
            ))
        value = fn.inner_product(polys[n], polys[n])
        expected = norm_square_formula(param, n)
        report.add(CheckRecord(
            f"orthogonality/tau={t}/n={n}/m={n}",
            value == expected,
            {"inner_product": rational_to_str(value), "formula": rational_to_str(expected)},
            sort_key=("orthogonality", param.tau, n, n),
        ))
    return report
