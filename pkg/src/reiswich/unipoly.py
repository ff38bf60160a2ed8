"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .arith import RationalLike, as_rational, parse_rational, rational_to_str
from .errors import ParseError


class UniPoly:
    """Immutable polynomial stored degree-ascending with trailing zeros trimmed.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, value: RationalLike) -> UniPoly:
        return cls([value])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> UniPoly:
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UniPoly({[rational_to_str(a) for a in self._c]})"

    def __str__(self) -> str:
        return self.to_plain()

    @staticmethod
    def _lift(other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other)

    def __add__(self, other) -> UniPoly:
        other = self._lift(other)
        n = max(len(self._c), len(other._c))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-a for a in self._c)

    def __sub__(self, other) -> UniPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> UniPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            s = as_rational(other)
            return UniPoly(a * s for a in self._c)
        if not self._c or not other._c:
            return UniPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        inv = 1 / other.lead
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            t = rem[k] * inv
            if t == 0:
                continue
            quo[k - dq] = t
            for j, b in enumerate(other._c):
                rem[k - dq + j] -= t * b
        return UniPoly(quo), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def sign_at(self, x: RationalLike) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def derivative(self) -> UniPoly:
        return UniPoly(k * a for k, a in enumerate(self._c) if k)

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for a in reversed(self._c):
            acc = acc * inner + a
        return acc

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def primitive(self) -> UniPoly:
        """Positive rational multiple with coprime integer coefficients."""
        if self.is_zero():
            return self
        den = reduce(lcm, (a.denominator for a in self._c), 1)
        ints = [int(a * den) for a in self._c]
        g = reduce(gcd, ints, 0)
        return UniPoly(Fraction(a, g) for a in ints)

    def gcd(self, other: UniPoly) -> UniPoly:
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic()

    # serialization ------------------------------------------------------

    def to_json(self) -> list[str]:
        return [rational_to_str(a) for a in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str] | dict | str) -> UniPoly:
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict):
            data = data.get("coefficients")
        if not isinstance(data, list):
            raise ParseError("polynomial JSON must be an array of coefficient strings")
        return cls(parse_rational(str(a)) for a in data)

    def _terms_descending(self):
        for k in range(len(self._c) - 1, -1, -1):
            if self._c[k] != 0:
                yield k, self._c[k]

    def to_plain(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, a in self._terms_descending():
            mag = abs(a)
            if k == 0:
                body = rational_to_str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{rational_to_str(mag)}*{power}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(parts)

    def to_latex(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, a in self._terms_descending():
            mag = abs(a)
            if mag.denominator == 1:
                num = str(mag.numerator)
            else:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if k == 0:
                body = num
            else:
                power = var if k == 1 else f"{var}^{{{k}}}"
                body = power if mag == 1 else f"{num} {power}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(parts)
