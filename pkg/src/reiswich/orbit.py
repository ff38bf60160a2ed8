"""Coordinates of the minimal isotropy orbit vector for type ``D_m``.

With ``n = m // 2 - 1`` and ``0 < xi_1 < ... < xi_n < 1`` the roots of
``P_m``, the vector is

    pi/4 E_1 + sum_r (pi/2 E_{r+1} + arccos(sqrt(xi_r))/2 (E_{m-r} - E_{r+1})) + pi/4 E_m.

Every transcendental value is evaluated in interval arithmetic and a digit
is printed only when both interval ends round to it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

from .arith import RationalLike, as_rational, parse_rational, rational_to_str, round_decimal
from .core import pm_original, reiswich_closed
from .errors import CertificationError, DomainError, TheoremViolation
from .roots import RootEnclosure, refine, roots_with_count

DEFAULT_DIGITS = 30
GUARD_DIGITS = 10
MAX_ATTEMPTS = 8

Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PrecisionConfig:
    decimal_digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.decimal_digits < 1:
            raise DomainError("decimal_digits must be at least 1")

    @classmethod
    def from_env(cls, default: int = DEFAULT_DIGITS) -> PrecisionConfig:
        raw = os.environ.get("REISWICH_DIGITS")
        return cls(int(raw) if raw else default)


def tau_for_m(m: int) -> Fraction:
    """Parameter with ``P_m = R^tau_{m//2 - 1}``: -1/2 for even m, +1/2 for odd m."""
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    return Fraction(-1, 2) if m % 2 == 0 else Fraction(1, 2)


# -- interval evaluation -----------------------------------------------------

def _context(digits: int, extra_bits: int = 0) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = int((digits + GUARD_DIGITS) * 3.33) + 8 + extra_bits
    return ctx


def _bounds(v) -> Interval:
    lo, hi = v._mpi_
    return Fraction(*map(int, to_rational(lo))), Fraction(*map(int, to_rational(hi)))


def _exact(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def _half_arccos_sqrt(ctx, q: Fraction) -> Interval:
    x = _exact(ctx, q)
    return _bounds(ctx.atan2(ctx.sqrt(1 - x), ctx.sqrt(x)) / 2)


def half_arccos_sqrt_bounds(lo: Fraction, hi: Fraction, digits: int, extra_bits: int = 0) -> Interval:
    """Rigorous bounds of ``arccos(sqrt(x))/2`` over ``x`` in ``[lo, hi]`` inside ``(0, 1)``."""
    if not (0 < lo <= hi < 1):
        raise DomainError("argument interval must lie inside (0, 1)")
    ctx = _context(digits, extra_bits)
    # decreasing map: the upper endpoint gives the lower bound
    return _half_arccos_sqrt(ctx, hi)[0], _half_arccos_sqrt(ctx, lo)[1]


def pi_bounds(num: int, den: int, digits: int, extra_bits: int = 0) -> Interval:
    ctx = _context(digits, extra_bits)
    return _bounds(ctx.pi * num / den)


def certify(bounds: Interval, digits: int) -> str | None:
    lo = round_decimal(bounds[0], digits)
    return lo if lo == round_decimal(bounds[1], digits) else None


def arccos_sqrt_half(x: Union[RootEnclosure, RationalLike], digits: int) -> str:
    """Certified decimal of ``arccos(sqrt(xi))/2`` for ``xi`` in an enclosure or an exact rational.

    Raises :class:`CertificationError` when the enclosure is too wide for
    the requested digits; the caller should refine it first.
    """
    if isinstance(x, RootEnclosure):
        lo, hi = x.lo, x.hi
    else:
        lo = hi = as_rational(x)
    if lo <= 0 or hi >= 1:
        raise DomainError("enclosure must lie inside (0, 1)")
    for attempt in range(3):
        b = half_arccos_sqrt_bounds(lo, hi, digits, extra_bits=64 * attempt)
        text = certify(b, digits)
        if text is not None:
            return text
        if b[1] - b[0] > Fraction(1, 10 ** (digits + GUARD_DIGITS // 2)):
            break
    raise CertificationError(f"cannot certify {digits} digits of arccos(sqrt(x))/2 on [{lo}, {hi}]")


# -- orbit vector ------------------------------------------------------------

@dataclass
class OrbitVector:
    m: int
    tau: Fraction
    n: int
    xi: list[RootEnclosure]
    coefficients: list[str]
    bounds: list[Interval] = field(default_factory=list, repr=False)
    digits: int = DEFAULT_DIGITS

    @property
    def zero_coefficients(self) -> list[int]:
        """1-based indices the formula never touches (the middle one for odd m)."""
        touched = {1, self.m}
        for r in range(1, self.n + 1):
            touched.update((r + 1, self.m - r))
        return [i for i in range(1, self.m + 1) if i not in touched]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "tau": rational_to_str(self.tau),
            "n": self.n,
            "xi": [e.to_json(self.digits) for e in self.xi],
            "coefficients": list(self.coefficients),
            "units": "radians",
            "basis": f"E_1..E_{self.m}",
            "digits": self.digits,
            "zero_coefficients": self.zero_coefficients,
        }

    @classmethod
    def from_json(cls, data: dict) -> OrbitVector:
        return cls(
            m=int(data["m"]),
            tau=parse_rational(data["tau"]),
            n=int(data["n"]),
            xi=[RootEnclosure.from_json(e) for e in data["xi"]],
            coefficients=[str(c) for c in data["coefficients"]],
            digits=int(data.get("digits", DEFAULT_DIGITS)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbitVector):
            return NotImplemented
        return (self.m, self.tau, self.n, self.xi, self.coefficients, self.digits) == (
            other.m, other.tau, other.n, other.xi, other.coefficients, other.digits)


def _certified_pair(enc: RootEnclosure, p, digits: int) -> tuple[RootEnclosure, tuple[str, Interval], tuple[str, Interval]]:
    """Refine ``enc`` until both ``theta`` and ``pi/2 - theta`` certify at ``digits``."""
    for attempt in range(MAX_ATTEMPTS):
        extra = 32 * attempt
        theta = half_arccos_sqrt_bounds(enc.lo, enc.hi, digits, extra)
        half_pi = pi_bounds(1, 2, digits, extra)
        comp = (half_pi[0] - theta[1], half_pi[1] - theta[0])
        t_text, c_text = certify(theta, digits), certify(comp, digits)
        if t_text is not None and c_text is not None:
            return enc, (t_text, theta), (c_text, comp)
        enc = refine(p, enc, enc.width / 2**40)
    raise CertificationError(f"could not certify {digits} digits for root enclosure {enc}")


def minimal_orbit_vector(m: int, cfg: PrecisionConfig | None = None) -> OrbitVector:
    cfg = cfg or PrecisionConfig()
    digits = cfg.decimal_digits
    tau = tau_for_m(m)
    n = m // 2 - 1
    p = pm_original(m)
    if p != reiswich_closed(tau, n):
        raise TheoremViolation(f"P_{m} differs from R^{rational_to_str(tau)}_{n}")
    width = Fraction(1, 10 ** (digits + GUARD_DIGITS))
    xi = roots_with_count(p, n, width)
    for e in xi:
        if not (0 < e.lo and e.hi < 1):
            raise TheoremViolation(f"root enclosure {e} leaves (0, 1)")
    zero = (Fraction(0), Fraction(0))
    bounds: list[Interval] = [zero] * m
    text = [round_decimal(0, digits)] * m
    quarter = pi_bounds(1, 4, digits)
    extra = 0
    while certify(quarter, digits) is None and extra < 32 * MAX_ATTEMPTS:
        extra += 32
        quarter = pi_bounds(1, 4, digits, extra)
    q_text = certify(quarter, digits)
    if q_text is None:
        raise CertificationError("could not certify pi/4")
    for idx in (0, m - 1):
        bounds[idx], text[idx] = quarter, q_text

    refined = []
    for r, enc in enumerate(xi, start=1):
        enc, (t_text, theta), (c_text, comp) = _certified_pair(enc, p, digits)
        refined.append(enc)
        bounds[r] = comp          # E_{r+1}
        text[r] = c_text
        bounds[m - r - 1] = theta  # E_{m-r}
        text[m - r - 1] = t_text
    return OrbitVector(m=m, tau=tau, n=n, xi=refined, coefficients=text, bounds=bounds, digits=digits)
