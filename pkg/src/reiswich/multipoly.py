"""Sparse multivariate polynomials over the integers.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name with
positive exponents, so the representation does not depend on which
indeterminates happen to be in scope and equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .arith import RationalLike, as_rational
from .errors import DomainError, ParseError

Monomial = tuple[tuple[str, int], ...]

_ONE: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("MultiPoly coefficients must be integers")
            if c:
                clean[tuple(sorted((n, e) for n, e in mono if e))] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def constant(cls, c: int) -> MultiPoly:
        return cls({_ONE: c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == _ONE for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(_ONE, 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({n for m in self._terms for n, _ in m}))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()!r})"

    @staticmethod
    def _lift(other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.constant(other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> MultiPoly:
        other = self._lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> MultiPoly:
        other = self._lift(other)
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, point: Mapping[str, RationalLike]) -> Fraction:
        """Substitute rationals for every indeterminate that occurs."""
        vals = {k: as_rational(v) for k, v in point.items()}
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = Fraction(c)
            for name, e in mono:
                if name not in vals:
                    raise KeyError(f"no value for indeterminate {name!r}")
                term *= vals[name] ** e
            total += term
        return total

    # serialization ------------------------------------------------------
    # JSON form: {"<monomial>": "<integer>"} with monomials written like
    # "1", "n", "n^2*tau"; this is the format used by the identity data files.

    def to_json(self) -> dict[str, str]:
        return {_mono_str(m): str(c) for m, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str | int]) -> MultiPoly:
        terms: dict[Monomial, int] = {}
        for key, c in data.items():
            mono = _parse_mono(key)
            try:
                coeff = int(c)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"non-integer coefficient {c!r}") from exc
            terms[mono] = terms.get(mono, 0) + coeff
        return cls(terms)

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._terms.items():
            body = _mono_str(m)
            if body == "1":
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            if not parts:
                parts.append(s if c > 0 else f"-{s}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {s}")
        return " ".join(parts)


def _mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def _parse_mono(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return _ONE
    exps: dict[str, int] = {}
    for part in text.split("*"):
        match = _FACTOR_RE.match(part.strip())
        if match is None:
            raise ParseError(f"bad monomial {text!r}")
        name, e = match.group(1), int(match.group(2) or 1)
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def falling_factorial_sym(base: MultiPoly, r: int, *, negative_is_zero: bool = False) -> MultiPoly:
    """Expanded ``base (base-1) ... (base-r+1)``; the constant 1 for ``r == 0``.

    Negative ``r`` is refused unless ``negative_is_zero`` is set, in which
    case the scalar convention ``fact[z, r] = 0`` is applied.
    """
    if r < 0:
        if negative_is_zero:
            return MultiPoly()
        raise DomainError(f"symbolic falling factorial needs r >= 0, got {r}")
    out = MultiPoly.constant(1)
    for j in range(r):
        out = out * (base - j)
    return out
