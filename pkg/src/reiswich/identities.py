"""Mechanical verification of the combinatorial identities behind the theory.

Each check expands both sides exactly and reports the difference, so a pass
means the difference is the canonical zero and not merely small.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any

from .arith import binomial, falling_factorial, rational_to_str
from .core import ParamLike, as_param, recursion_coefficients, reiswich_closed
from .errors import DomainError
from .multipoly import MultiPoly, falling_factorial_sym
from .unipoly import UniPoly

DEGREE5_RESOURCE = "degree5_identity.json"


@dataclass(frozen=True)
class IdentityCheckResult:
    identity_name: str
    parameters: dict[str, Any]
    difference: Any
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def witness(self) -> dict[str, Any]:
        diff = self.difference
        if isinstance(diff, MultiPoly):
            rendered: Any = diff.to_str()
        elif isinstance(diff, UniPoly):
            rendered = diff.to_plain()
        elif isinstance(diff, dict):
            rendered = {k: rational_to_str(v) for k, v in diff.items()}
        else:
            rendered = str(diff)
        out = {"difference": rendered}
        out.update(self.details)
        return out


def _is_zero(diff) -> bool:
    if isinstance(diff, (MultiPoly, UniPoly)):
        return diff.is_zero()
    if isinstance(diff, dict):
        return all(v == 0 for v in diff.values())
    return diff == 0


# -- combinatorial identity in Z[x, y] ---------------------------------------

def lemma_ci_lhs(n: int, u: int, v: int) -> MultiPoly:
    """``sum_r (-1)^r C(n, r) fact[x-r, u] fact[y-r, v]`` expanded in Z[x, y]."""
    x = MultiPoly.var("x")
    y = MultiPoly.var("y")
    total = MultiPoly()
    for r in range(n + 1):
        c = math.comb(n, r) * (-1) ** r
        total = total + falling_factorial_sym(x - r, u) * falling_factorial_sym(y - r, v) * c
    return total


def lemma_ci_check(n: int, u: int, v: int) -> IdentityCheckResult:
    if n < 0 or u < 0 or v < 0:
        raise DomainError("n, u, v must be non-negative")
    if u + v > n:
        raise DomainError(f"identity only stated for u + v <= n (got u={u}, v={v}, n={n})")
    lhs = lemma_ci_lhs(n, u, v)
    rhs = MultiPoly.constant(math.factorial(n) if u + v == n else 0)
    diff = lhs - rhs
    return IdentityCheckResult(
        "combinatorial", {"n": n, "u": u, "v": v}, diff, diff.is_zero(),
        {"lhs": lhs.to_str()},
    )


# -- degree-five identity in Z[n, tau, r] ------------------------------------

def load_degree5_transcription() -> dict[str, Any]:
    text = resources.files("reiswich.data").joinpath(DEGREE5_RESOURCE).read_text()
    return json.loads(text)


def expand_products(products: list[list[dict[str, str]]]) -> MultiPoly:
    total = MultiPoly()
    for factors in products:
        term = MultiPoly.constant(1)
        for f in factors:
            term = term * MultiPoly.from_json(f)
        total = total + term
    return total


def degree5_sides() -> tuple[MultiPoly, MultiPoly]:
    data = load_degree5_transcription()
    return expand_products(data["lhs"]), expand_products(data["rhs"])


def degree5_identity_check() -> IdentityCheckResult:
    lhs, rhs = degree5_sides()
    diff = lhs - rhs
    return IdentityCheckResult(
        "degree5", {}, diff, diff.is_zero(),
        {"lhs_degree": lhs.total_degree(), "rhs_degree": rhs.total_degree()},
    )


# -- scaled coefficient lines of the recursion proof -------------------------

def lucky_factor(param: ParamLike, n: int, r: int, *, as_printed: bool = False) -> Fraction:
    """Scaling ``C = (-1)^r r (2n+tau+1) / C(n, r-1) * fact[2n+tau+3, r+2] / fact[n+tau, r-1]``.

    The proof prints the middle falling factorial with length ``r+1``; with
    that factor every scaled line is short by the common factor
    ``2n+tau+2-r``. ``as_printed=True`` returns the printed variant.
    """
    tau = as_param(param).tau
    length = r + 1 if as_printed else r + 2
    c = Fraction(r) * (2 * n + tau + 1) / binomial(n, r - 1)
    c *= falling_factorial(2 * n + tau + 3, length) / falling_factorial(n + tau, r - 1)
    return -c if r % 2 else c


def scaled_coefficient_check(param: ParamLike, n: int, r: int) -> IdentityCheckResult:
    """Compare ``C`` times the ``x^(n+1-r)`` coefficients against their closed forms."""
    param = as_param(param)
    t = param.tau
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got r={r}, n={n}")
    C = lucky_factor(param, n, r)
    k = n + 1 - r
    r_next = reiswich_closed(param, n + 1)
    r_cur = reiswich_closed(param, n)
    r_prev = reiswich_closed(param, n - 1)
    actual = {
        "R_next": C * r_next.coeff(k),
        "x_R_cur": C * r_cur.coeff(k - 1),
        "R_cur": C * r_cur.coeff(k),
        "R_prev": C * r_prev.coeff(k),
    }
    expected = {
        "R_next": (n + 1) * (n + t + 1) * (2 * n + t + 1) * (2 * n + t - r + 3) * (2 * n + t - r + 2),
        "x_R_cur": (n - r + 1) * (n + t - r + 1) * (2 * n + t + 3) * (2 * n + t + 2) * (2 * n + t + 1),
        "R_cur": -r * (2 * n + t + 3) * (2 * n + t + 2) * (2 * n + t + 1) * (2 * n + t - r + 2),
        "R_prev": r * (r - 1) * (2 * n + t + 3) * (2 * n + t + 2) * (2 * n + t + 1) ** 2 * (2 * n + t)
        / (n * (n + t)),
    }
    diff = {key: Fraction(actual[key] - expected[key]) for key in actual}
    # the four lines must also recombine into the recursion with the stated alpha, beta
    alpha, beta = recursion_coefficients(param, n)
    recombined = actual["x_R_cur"] - alpha * actual["R_cur"] - beta * actual["R_prev"] - actual["R_next"]
    diff["recursion"] = Fraction(recombined)
    return IdentityCheckResult(
        "scaled_coefficients",
        {"tau": rational_to_str(t), "n": n, "r": r},
        diff,
        _is_zero(diff),
        {"C": rational_to_str(C)},
    )
