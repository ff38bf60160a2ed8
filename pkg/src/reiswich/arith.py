"""Exact scalars: rationals, falling factorials and binomial coefficients.

``Rational`` is :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator and raises on division by zero.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into a Fraction.

    Floats and decimal strings are refused so that every value entering the
    library is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"not a rational of the form p or p/q: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rational_to_str(q: Fraction) -> str:
    """Render as ``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def falling_factorial(z: RationalLike, r: int) -> Fraction:
    """``z (z-1) ... (z-r+1)``; 1 for ``r == 0`` and 0 for negative ``r``."""
    if r < 0:
        return Fraction(0)
    z = as_rational(z)
    out = Fraction(1)
    for j in range(r):
        out *= z - j
    return out


def binomial(n: int, r: int) -> Fraction:
    if n < 0:
        raise DomainError(f"binomial requires n >= 0, got {n}")
    if r < 0 or r > n:
        return Fraction(0)
    return Fraction(math.comb(n, r))


def generalized_binomial(z: RationalLike, r: int) -> Fraction:
    """``falling_factorial(z, r) / r!`` for a rational upper argument."""
    if r < 0:
        raise DomainError(f"generalized binomial requires r >= 0, got {r}")
    return falling_factorial(z, r) / math.factorial(r)


def round_decimal(q: Fraction, digits: int) -> str:
    """Round ``q`` to ``digits`` places after the point (half to even) and format it."""
    if digits < 0:
        raise DomainError("digits must be non-negative")
    scaled = round(Fraction(q) * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
