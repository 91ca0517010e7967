"""Dense univariate polynomials over Z and Q.

Coefficients are stored lowest degree first with no trailing zeros.  Both
classes are immutable values; arithmetic between an :class:`IntPoly` and a
:class:`RatPoly` (or a :class:`~fractions.Fraction`) promotes to ``RatPoly``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce as _fold
from numbers import Integral, Rational
from typing import Iterable, Sequence

from ..errors import ExactDivisionError, InputError


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class _Poly:
    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_strip([self._coerce(c) for c in coeffs]))

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def _raw(cls, cs: list):
        p = object.__new__(cls)
        p.coeffs = tuple(_strip(cs))
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def low(self):
        """Lowest-order nonzero coefficient (0 for the zero polynomial)."""
        return next((c for c in self.coeffs if c), 0)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ----------------------------------------------------------

    def _promote(self, other):
        """Return (result class, other as a polynomial) or (None, None)."""
        if isinstance(other, _Poly):
            cls = RatPoly if RatPoly in (type(self), type(other)) else IntPoly
            return cls, other
        if isinstance(other, Integral):
            return type(self), IntPoly((other,))
        if isinstance(other, Rational):
            return RatPoly, RatPoly((other,))
        return None, None

    def __add__(self, other):
        cls, o = self._promote(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return cls._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        cls, o = self._promote(other)
        if cls is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        cls, o = self._promote(other)
        if cls is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        cls, o = self._promote(other)
        if cls is None:
            return NotImplemented
        return cls._raw(_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative polynomial power")
        out = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int):
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return type(self)._raw([0] * k + list(self.coeffs))

    def truncate(self, n: int):
        """Keep terms of degree < n."""
        return type(self)._raw(list(self.coeffs[:n]))

    def derivative(self):
        return type(self)._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def reverse(self, degree: int | None = None):
        """``x**degree * p(1/x)``; degree defaults to ``self.degree``."""
        n = len(self.coeffs) - 1 if degree is None else degree
        if n < len(self.coeffs) - 1:
            raise InputError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return type(self)(cs[::-1])

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xp = "x" if i == 1 else f"x^{i}"
                body = xp if mag == 1 else f"{mag}*{xp}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class IntPoly(_Poly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c) -> int:
        if isinstance(c, Integral):
            return int(c)
        if isinstance(c, Rational) and c.denominator == 1:
            return int(c.numerator)
        if isinstance(c, str):
            try:
                return int(c)
            except ValueError:
                pass
        raise InputError(f"IntPoly coefficient must be an integer, got {c!r}")

    @classmethod
    def from_strings(cls, coeffs: Iterable[str]) -> "IntPoly":
        return cls(int(c) for c in coeffs)

    def content(self) -> int:
        """Gcd of the coefficients, always >= 0."""
        return _fold(math.gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Divide out the content, keeping the sign of the leading coefficient."""
        c = self.content()
        if c <= 1:
            return self
        return IntPoly._raw([x // c for x in self.coeffs])

    def to_rat(self) -> "RatPoly":
        return RatPoly._raw([Fraction(c) for c in self.coeffs])

    def exact_div(self, other) -> "IntPoly":
        """Quotient in Z[x]; raises :class:`ExactDivisionError` on a remainder."""
        if isinstance(other, Integral):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            raise InputError("IntPoly.exact_div expects an IntPoly divisor")
        return IntPoly._raw(_exact_div_int(list(self.coeffs), other.coeffs))

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Pseudo-remainder ``lc(other)**(deg self - deg other + 1) * self mod other``."""
        b = other.coeffs
        if not b:
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        a = list(self.coeffs)
        lb, nb = b[-1], len(b)
        steps = len(a) - nb + 1
        if steps <= 0:
            return self
        for _ in range(steps):
            # a <- lb*a - lc(a) x^k b, degree drops by one each round
            if len(a) < nb:
                a = [lb * c for c in a]
                continue
            la, k = a[-1], len(a) - nb
            a = [lb * c for c in a]
            for j, y in enumerate(b):
                a[k + j] -= la * y
            a.pop()
            _strip(a)
        return IntPoly._raw(a)


def _exact_div_int(a: list, b: Sequence) -> list:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    nb, lb = len(b), b[-1]
    if len(a) < nb:
        raise ExactDivisionError("divisor degree exceeds dividend degree")
    out = [0] * (len(a) - nb + 1)
    for k in range(len(a) - nb, -1, -1):
        c, r = divmod(a[k + nb - 1], lb)
        if r:
            raise ExactDivisionError("non-exact polynomial division")
        out[k] = c
        if c:
            for j in range(nb):
                a[k + j] -= c * b[j]
    if any(a):
        raise ExactDivisionError("non-exact polynomial division")
    return out


class RatPoly(_Poly):
    """Polynomial with rational coefficients in lowest terms."""

    __slots__ = ()

    @staticmethod
    def _coerce(c) -> Fraction:
        if isinstance(c, (Rational, str)):
            return Fraction(c)
        raise InputError(f"RatPoly coefficient must be rational, got {c!r}")

    def __divmod__(self, other) -> tuple["RatPoly", "RatPoly"]:
        o = other.to_rat() if isinstance(other, IntPoly) else other
        if not isinstance(o, RatPoly):
            o = RatPoly((o,))
        b = o.coeffs
        if not b:
            raise ZeroDivisionError("division by zero polynomial")
        a = list(self.coeffs)
        nb, lb = len(b), b[-1]
        if len(a) < nb:
            return RatPoly(), self
        quo = [Fraction(0)] * (len(a) - nb + 1)
        for k in range(len(a) - nb, -1, -1):
            c = a[k + nb - 1] / lb
            quo[k] = c
            if c:
                for j in range(nb):
                    a[k + j] -= c * b[j]
        return RatPoly._raw(quo), RatPoly._raw(a[: nb - 1])

    def __mod__(self, other) -> "RatPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "RatPoly":
        q, r = divmod(self, other)
        if r:
            raise ExactDivisionError("non-exact polynomial division")
        return q

    def denominator_lcm(self) -> int:
        return _fold(lambda a, c: a * c.denominator // math.gcd(a, c.denominator), self.coeffs, 1)

    def clear_denominators(self) -> tuple[IntPoly, int]:
        """Return ``(P, d)`` with ``self == P / d``, ``d > 0``."""
        d = self.denominator_lcm()
        return IntPoly._raw([int(c * d) for c in self.coeffs]), d

    def to_rat(self) -> "RatPoly":
        return self


def as_poly(p) -> _Poly:
    if isinstance(p, _Poly):
        return p
    if isinstance(p, Integral):
        return IntPoly((p,))
    if isinstance(p, Rational):
        return RatPoly((p,))
    raise InputError(f"not a polynomial: {p!r}")


def poly_gcd(p, q) -> IntPoly:
    """Gcd in Z[x], normalized to a positive leading coefficient.

    The result carries the gcd of the two contents, so ``gcd(2x, 4x^2) = 2x``.
    """
    p, q = as_poly(p), as_poly(q)
    if isinstance(p, RatPoly):
        p = p.clear_denominators()[0]
    if isinstance(q, RatPoly):
        q = q.clear_denominators()[0]
    if not p and not q:
        raise InputError("gcd of two zero polynomials is undefined")
    c = math.gcd(p.content(), q.content())
    a, b = p.primitive(), q.primitive()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    g = a.primitive()
    if g.lc < 0:
        g = -g
    return g * c
