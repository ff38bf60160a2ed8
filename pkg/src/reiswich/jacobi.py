"""Classical Jacobi polynomials and their link to the Reiswich family.

Normalization is ``P_n^(a,b)(1) = C(n+a, n)``. The shifted polynomial
``P_n^(1,tau)(2x-1)`` is an exact positive multiple of ``R_n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import RationalLike, as_rational, falling_factorial, generalized_binomial, rational_to_str
from .core import as_param, reiswich_closed
from .errors import DomainError, TheoremViolation
from .unipoly import UniPoly


@dataclass(frozen=True)
class JacobiParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = as_rational(self.alpha), as_rational(self.beta)
        if a <= -1 or b <= -1:
            raise DomainError("Jacobi parameters must both exceed -1")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)


def _params(alpha, beta=None) -> JacobiParams:
    if isinstance(alpha, JacobiParams):
        return alpha
    return JacobiParams(as_rational(alpha), as_rational(beta))


def jacobi(params: JacobiParams, n: int) -> UniPoly:
    """``P_n^(a,b)(t)`` from the explicit sum over ``((t-1)/2)^s ((t+1)/2)^(n-s)``."""
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    p = _params(params)
    a, b = p.alpha, p.beta
    tm = UniPoly([Fraction(-1, 2), Fraction(1, 2)])
    tp = UniPoly([Fraction(1, 2), Fraction(1, 2)])
    out = UniPoly()
    for s in range(n + 1):
        c = generalized_binomial(n + a, n - s) * generalized_binomial(n + b, s)
        out = out + (tm ** s) * (tp ** (n - s)) * c
    return out


def jacobi_by_recurrence(params: JacobiParams, max_n: int) -> list[UniPoly]:
    """``[P_0, ..., P_max_n]`` from the standard three-term recurrence."""
    p = _params(params)
    a, b = p.alpha, p.beta
    t = UniPoly.x()
    seq = [UniPoly.constant(1)]
    if max_n >= 1:
        seq.append(t * ((a + b + 2) / 2) + (a - b) / 2)
    for k in range(2, max_n + 1):
        s = 2 * k + a + b
        lead = 2 * k * (k + a + b) * (s - 2)
        nxt = (t * (s * (s - 2)) + (a * a - b * b)) * seq[-1] * (s - 1) - seq[-2] * (2 * (k + a - 1) * (k + b - 1) * s)
        seq.append(nxt * (1 / lead))
    return seq


def jacobi_shifted(tau: RationalLike, n: int) -> UniPoly:
    """``P_n^(1,tau)(2x - 1)`` as a polynomial in ``x``."""
    tau = as_param(tau).tau
    return jacobi(JacobiParams(Fraction(1), tau), n).compose(UniPoly([-1, 2]))


def proportionality_constant(tau: RationalLike, n: int) -> Fraction:
    """``c_n`` with ``R_n = c_n * P_n^(1,tau)(2x-1)``.

    Computed from the leading coefficient and from ``n! / fact[2n+tau+1, n]``;
    raises :class:`TheoremViolation` if the routes disagree or the two
    polynomials are not exactly proportional.
    """
    tau = as_param(tau).tau
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    shifted = jacobi_shifted(tau, n)
    via_lead = 1 / shifted.lead
    via_formula = math.factorial(n) / falling_factorial(2 * n + tau + 1, n)
    if via_lead != via_formula:
        raise TheoremViolation(
            f"proportionality constant mismatch at tau={rational_to_str(tau)}, n={n}: "
            f"{rational_to_str(via_lead)} vs {rational_to_str(via_formula)}"
        )
    if reiswich_closed(tau, n) != shifted * via_lead:
        raise TheoremViolation(f"R_n is not proportional to the shifted Jacobi polynomial (tau={tau}, n={n})")
    return via_lead
