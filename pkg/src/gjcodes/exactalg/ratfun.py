"""Rational functions in canonical form.

A canonical :class:`RationalFunction` has integer numerator and denominator
with a constant gcd, combined content 1, and a positive lowest-order
denominator coefficient.  Two equal rational functions therefore have
identical stored polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError
from .poly import IntPoly, RatPoly, _Poly, as_poly, poly_gcd


@dataclass(frozen=True)
class RationalFunction:
    num: IntPoly
    den: IntPoly

    @classmethod
    def of(cls, num, den=1) -> "RationalFunction":
        return ratfun_canonicalize(num, den)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(IntPoly(), IntPoly((1,)))

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(IntPoly((1,)), IntPoly((1,)))

    def __bool__(self) -> bool:
        return bool(self.num)

    def _lift(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (_Poly, int, Fraction)):
            return ratfun_canonicalize(other, 1)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ratfun_canonicalize(self.num + o.num, self.den)
        return ratfun_canonicalize(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ratfun_canonicalize(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return ratfun_canonicalize(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at x={x}")
        return Fraction(self.num(x)) / d

    def equals(self, num, den) -> bool:
        """Cross-multiplied equality with ``num/den``; no canonicalization needed."""
        return self.num * as_poly(den) == as_poly(num) * self.den

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def ratfun_canonicalize(num, den) -> RationalFunction:
    """Bring ``num/den`` (integer or rational polynomials) into canonical form."""
    num, den = as_poly(num), as_poly(den)
    if not den:
        raise InputError("rational function with zero denominator")
    n_scale = d_scale = 1
    if isinstance(num, RatPoly):
        num, n_scale = num.clear_denominators()
    if isinstance(den, RatPoly):
        den, d_scale = den.clear_denominators()
    # num/n_scale over den/d_scale
    num, den = num * d_scale, den * n_scale
    if not num:
        return RationalFunction(IntPoly(), IntPoly((1,)))
    g = poly_gcd(num, den)
    if g.degree > 0:
        g = g.primitive()
        num, den = num.exact_div(g), den.exact_div(g)
    c = math.gcd(num.content(), den.content())
    if c > 1:
        num, den = num.exact_div(c), den.exact_div(c)
    if den.low < 0:
        num, den = -num, -den
    return RationalFunction(num, den)
