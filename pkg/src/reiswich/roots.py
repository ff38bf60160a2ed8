"""Certified real root isolation with Sturm chains over the rationals.

Counts use the half-open convention: ``count_roots(chain, a, b)`` is the
number of distinct roots in ``(a, b]``. For squarefree input this is exact
even when ``a`` or ``b`` is itself a root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arith import RationalLike, as_rational, parse_rational, rational_to_str, round_decimal
from .core import ParamLike, as_param, reiswich_closed
from .errors import CertificationError, DomainError, NotSquarefreeError, TheoremViolation
from .unipoly import UniPoly

DEFAULT_MAX_WIDTH = Fraction(1, 10**35)


@dataclass(frozen=True)
class SturmChain:
    chain: tuple[UniPoly, ...]

    @property
    def head(self) -> UniPoly:
        return self.chain[0]

    def __len__(self) -> int:
        return len(self.chain)

    def variations(self, x: Optional[Fraction], *, at_minus_inf: bool = False) -> int:
        """Sign changes at ``x``; ``x=None`` means +inf (or -inf with ``at_minus_inf``)."""
        signs = []
        for p in self.chain:
            if x is None:
                s = 1 if p.lead > 0 else -1
                if at_minus_inf and p.degree % 2:
                    s = -s
            else:
                s = p.sign_at(x)
            if s:
                signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_chain(p: UniPoly) -> SturmChain:
    """``p, p', -rem(p, p'), ...`` with each remainder scaled to primitive form."""
    if p.is_zero():
        raise DomainError("Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    if p.degree == 0:
        return SturmChain(tuple(chain))
    chain.append(p.derivative().primitive())
    while True:
        rem = -(chain[-2] % chain[-1])
        if rem.is_zero():
            break
        chain.append(rem.primitive())
    return SturmChain(tuple(chain))


def count_roots(chain: SturmChain, a: Optional[RationalLike], b: Optional[RationalLike]) -> int:
    """Distinct real roots in ``(a, b]``; ``None`` stands for -inf / +inf."""
    fa = None if a is None else as_rational(a)
    fb = None if b is None else as_rational(b)
    if fa is not None and fb is not None and fa >= fb:
        raise DomainError("count_roots needs a < b")
    va = chain.variations(fa, at_minus_inf=True)
    vb = chain.variations(fb)
    return va - vb


def is_squarefree(p: UniPoly) -> bool:
    if p.degree <= 0:
        return True
    return p.gcd(p.derivative()).degree == 0


@dataclass(frozen=True)
class RootEnclosure:
    """Rational interval ``(lo, hi]`` holding exactly one simple root."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if not lo < hi:
            raise DomainError("enclosure needs lo < hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        x = as_rational(x)
        return self.lo < x <= self.hi

    def certified_decimal(self, digits: int) -> Optional[str]:
        """Decimal rounding shared by every point of the closed interval, if any."""
        lo = round_decimal(self.lo, digits)
        return lo if lo == round_decimal(self.hi, digits) else None

    def to_json(self, digits: int = 30) -> dict[str, str]:
        return {
            "lo": rational_to_str(self.lo),
            "hi": rational_to_str(self.hi),
            "midpoint_decimal": round_decimal(self.midpoint, digits),
        }

    @classmethod
    def from_json(cls, data: dict) -> RootEnclosure:
        return cls(parse_rational(data["lo"]), parse_rational(data["hi"]))


def _require_squarefree(p: UniPoly) -> None:
    if not is_squarefree(p):
        raise NotSquarefreeError(f"polynomial {p} has a repeated root")


def isolate_roots(p: UniPoly, a: RationalLike = 0, b: RationalLike = 1) -> list[RootEnclosure]:
    """One enclosure per distinct root in ``(a, b]``, sorted, by Sturm bisection."""
    a, b = as_rational(a), as_rational(b)
    if a >= b:
        raise DomainError("isolate_roots needs a < b")
    if p.is_zero():
        raise DomainError("cannot isolate roots of the zero polynomial")
    _require_squarefree(p)
    chain = sturm_chain(p)
    out: list[RootEnclosure] = []
    stack = [(a, b, count_roots(chain, a, b))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append(RootEnclosure(lo, hi))
            continue
        mid = (lo + hi) / 2
        left = count_roots(chain, lo, mid)
        stack.append((mid, hi, k - left))
        stack.append((lo, mid, left))
    out.sort(key=lambda e: e.lo)
    return out


def _bisect_once(p: UniPoly, lo: Fraction, hi: Fraction, s_hi: int) -> tuple[Fraction, Fraction]:
    mid = (lo + hi) / 2
    s_mid = p.sign_at(mid)
    if s_hi == 0:
        # the root is hi itself
        return mid, hi
    if s_mid == 0 or s_mid == s_hi:
        return lo, mid
    return mid, hi


def refine(p: UniPoly, e: RootEnclosure, max_width: RationalLike = DEFAULT_MAX_WIDTH) -> RootEnclosure:
    """Shrink ``e`` by exact sign bisection until its width is at most ``max_width``."""
    max_width = as_rational(max_width)
    if max_width <= 0:
        raise DomainError("max_width must be positive")
    lo, hi = e.lo, e.hi
    s_hi = p.sign_at(hi)
    while hi - lo > max_width:
        lo, new_hi = _bisect_once(p, lo, hi, s_hi)
        if new_hi != hi:
            hi = new_hi
            s_hi = p.sign_at(hi)
    if (lo, hi) == (e.lo, e.hi):
        return e
    return RootEnclosure(lo, hi)


def refine_until_certified(p: UniPoly, e: RootEnclosure, digits: int) -> RootEnclosure:
    """Bisect until every point of the enclosure rounds to the same ``digits`` decimals."""
    lo, hi = e.lo, e.hi
    s_hi = p.sign_at(hi)
    # a root exactly on a rounding tie never separates; bail out instead of looping
    steps = 0
    while round_decimal(lo, digits) != round_decimal(hi, digits):
        lo, new_hi = _bisect_once(p, lo, hi, s_hi)
        if new_hi != hi:
            hi = new_hi
            s_hi = p.sign_at(hi)
        steps += 1
        if steps > 4 * (digits + 10) + 64:
            raise CertificationError(f"cannot certify {digits} digits for root in ({lo}, {hi}]")
    return RootEnclosure(lo, hi) if (lo, hi) != (e.lo, e.hi) else e


def roots_with_count(p: UniPoly, expected: int, max_width: RationalLike = DEFAULT_MAX_WIDTH,
                     a: RationalLike = 0, b: RationalLike = 1) -> list[RootEnclosure]:
    """Isolate and refine roots in ``(a, b)``, asserting there are exactly ``expected``."""
    encl = isolate_roots(p, a, b)
    if len(encl) != expected:
        raise TheoremViolation(f"expected {expected} roots in ({a}, {b}), found {len(encl)}")
    b = as_rational(b)
    if encl and p(b) == 0:
        raise TheoremViolation(f"root at the endpoint {b}")
    return [refine(p, e, max_width) for e in encl]


def reiswich_roots(param: ParamLike, n: int, max_width: RationalLike = DEFAULT_MAX_WIDTH) -> list[RootEnclosure]:
    """All roots of ``R_n`` as refined enclosures inside ``(0, 1)``.

    Raises :class:`TheoremViolation` unless there are exactly ``n`` of them
    and none leaks out of the open unit interval.
    """
    param = as_param(param)
    p = reiswich_closed(param, n)
    out = roots_with_count(p, n, max_width)
    for e in out:
        if not (0 < e.lo and e.hi < 1):
            raise TheoremViolation(f"enclosure {e} is not strictly inside (0, 1)")
    return out


def outside_unit_count(p: UniPoly) -> int:
    """Distinct roots in ``(-inf, 0]`` and ``[1, inf)``."""
    chain = sturm_chain(p)
    total = count_roots(chain, None, 0) + count_roots(chain, 1, None)
    if p(1) == 0:
        total += 1
    return total


def interlaces(outer_poly: UniPoly, inner_poly: UniPoly, a: RationalLike = 0, b: RationalLike = 1) -> bool:
    """True if exactly one root of ``inner_poly`` lies between consecutive roots of ``outer_poly``.

    Outer enclosures are first shrunk until none of them contains an inner
    root, so the gap counts see the inner roots exactly.
    """
    inner = sturm_chain(inner_poly)
    outer = isolate_roots(outer_poly, a, b)
    shrunk = []
    for e in outer:
        while count_roots(inner, e.lo, e.hi) > 0:
            if e.width < Fraction(1, 2**400):
                return False  # shared root
            e = refine(outer_poly, e, e.width / 2)
        shrunk.append(e)
    return all(count_roots(inner, left.hi, right.lo) == 1 for left, right in zip(shrunk, shrunk[1:]))
