"""Certified real-root isolation with Sturm sequences.

Sign evaluations are exact (integer arithmetic at rational points), so every
returned interval is a proof, not an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InputError, NoRootError
from .poly import IntPoly, RatPoly, poly_gcd


@dataclass(frozen=True)
class RootInterval:
    """``[lo, hi]`` containing exactly one real root of the target polynomial."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree < 1:
        return p.primitive()
    return p.exact_div(g.primitive()).primitive()


def _positive_primitive(r: RatPoly) -> IntPoly:
    # scale by a positive constant only, so signs survive
    P, _ = r.clear_denominators()
    return P.primitive()


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of the square-free part of *p*, content-stripped at every step."""
    p0 = squarefree_part(p)
    if p0.lc < 0:
        p0 = -p0
    seq = [p0]
    if p0.degree < 1:
        return seq
    seq.append(p0.derivative().primitive())
    while seq[-1].degree > 0:
        r = seq[-2].to_rat() % seq[-1].to_rat()
        if not r:
            break
        seq.append(_positive_primitive(-r))
    return seq


def sign_at(p: IntPoly | Sequence[int], x: Fraction) -> int:
    """Exact sign of ``p(x)`` using integer-only homogenized Horner."""
    cs = p.coeffs if isinstance(p, IntPoly) else tuple(p)
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    acc, dpow = 0, 1
    for c in reversed(cs):
        acc = acc * n + c * dpow
        dpow *= d
    return (acc > 0) - (acc < 0)


def variations(seq: Sequence[IntPoly], x: Fraction) -> int:
    signs = [s for s in (sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: Sequence[IntPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in ``(a, b]``."""
    if b < a:
        raise InputError("empty interval")
    return variations(seq, a) - variations(seq, b)


def root_upper_bound(p: IntPoly) -> Fraction:
    """Power of two bounding every real root's magnitude (Cauchy)."""
    cs = p.coeffs
    lc = abs(cs[-1])
    m = max((Fraction(abs(c), lc) for c in cs[:-1]), default=Fraction(0))
    bound, b = 1 + m, Fraction(1)
    while b < bound:
        b *= 2
    return b


def smallest_positive_root(p: IntPoly, tol, search_hint: tuple | None = None) -> RootInterval:
    """Isolate the smallest positive real root of *p* to width ``<= tol``.

    The returned interval contains that root and no other root of *p*; when
    a bisection point hits the root exactly the interval is degenerate.
    ``search_hint=(lo, hi)`` restricts the search to ``(lo, hi]`` after
    confirming that ``(0, lo]`` holds no root.
    """
    if not isinstance(p, IntPoly):
        p = RatPoly(p.coeffs).clear_denominators()[0] if isinstance(p, RatPoly) else IntPoly(p)
    tol = Fraction(tol)
    if tol <= 0:
        raise InputError("tolerance must be positive")
    if p.degree < 1:
        raise NoRootError("constant polynomial has no positive root")
    seq = sturm_sequence(p)
    sf = seq[0]

    zero = Fraction(0)
    lo, hi = zero, root_upper_bound(sf)
    if search_hint is not None:
        h_lo, h_hi = (Fraction(v) for v in search_hint)
        if not 0 <= h_lo < h_hi:
            raise InputError(f"bad search hint {search_hint!r}")
        if h_lo > 0 and count_roots(seq, zero, h_lo) == 0:
            lo = h_lo
        hi = min(hi, h_hi)
    if count_roots(seq, lo, hi) == 0:
        raise NoRootError(f"no positive real root in (0, {hi}]")

    # invariant: no root in (0, lo], at least one root in (lo, hi]
    while True:
        n_in = count_roots(seq, lo, hi)
        if n_in == 1 and sign_at(sf, hi) == 0:
            return RootInterval(hi, hi)
        if n_in == 1 and hi - lo <= tol and lo > 0:
            return RootInterval(lo, hi)
        mid = (lo + hi) / 2
        left = count_roots(seq, lo, mid)
        if left == 1 and sign_at(sf, mid) == 0:
            return RootInterval(mid, mid)
        if left >= 1:
            hi = mid
        else:
            lo = mid
