"""Capacities with guaranteed error, the companion matrix, and the LPA bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cluster import GenFun
from .errors import DegenerateError, InputError, InternalError, NoRootError
from .exactalg import IntPoly, RatPoly, RootInterval, smallest_positive_root
from .spectral import MAX_DET_ORDER, MAX_STATES, build_debruijn, spectral_radius
from .words import ForbiddenSet

# absolute slack covering double-precision error in log evaluations near [0, 1]
_FLOAT_SLACK = 1e-14
MIN_EPS = 1e-12


@dataclass(frozen=True)
class CapacityEstimate:
    """``|value - cap(F)| <= eps`` is guaranteed; ``x0`` isolates the convergence radius."""

    x0: RootInterval
    value: float
    eps: float
    method: str
    q: int

    def to_json(self) -> dict:
        return {
            "capacity": self.value,
            "eps": self.eps,
            "x0": [fraction_to_decimal(self.x0.lo), fraction_to_decimal(self.x0.hi)],
            "method": self.method,
        }


def fraction_to_decimal(x: Fraction) -> str:
    """Exact decimal expansion when the denominator is 2^a 5^b, else ``p/q``."""
    x = Fraction(x)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = max(twos, fives)
    scaled = x * 10**digits
    sign = "-" if scaled < 0 else ""
    n = abs(int(scaled))
    if digits == 0:
        return f"{sign}{n}"
    s = str(n).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not MIN_EPS <= eps < 1:
        raise InputError(f"eps must lie in [{MIN_EPS}, 1), got {eps}")
    return eps


def _log_q(x: Fraction, q: int) -> float:
    return math.log(float(x)) / math.log(q)


def _from_x_interval(r: RootInterval, q: int, method: str) -> CapacityEstimate:
    # cap = log_q(1/x0) with x0 in [lo, hi]; round the enclosure outward
    cap_lo = -_log_q(r.hi, q) - _FLOAT_SLACK
    cap_hi = -_log_q(r.lo, q) + _FLOAT_SLACK
    value = (cap_lo + cap_hi) / 2
    eps = (cap_hi - cap_lo) / 2 + _FLOAT_SLACK
    return CapacityEstimate(r, value, eps, method, q)


def root_tolerance(eps: float, q: int) -> Fraction:
    """Root accuracy ``eps / (2 q ln q)``, rounded down to a rational."""
    ln_q_up = Fraction(math.log(q)) * Fraction(1 + 10**-12)
    return Fraction(eps) / (2 * q * ln_q_up)


def capacity(f: GenFun, eps: float = 1e-6) -> CapacityEstimate:
    """``log_q(1/x0)`` for the smallest positive root x0 of S, within eps."""
    eps = _check_eps(eps)
    if f.q < 2:
        raise InputError("capacity needs q >= 2")
    if f.S.degree < 1:
        raise DegenerateError("generating function is a polynomial: finitely many free strings")
    tol = root_tolerance(eps, f.q)
    while True:
        try:
            r = smallest_positive_root(f.S, tol, search_hint=(0, 1))
        except NoRootError:
            raise InternalError("S has no root in (0, 1] for a nondegenerate set") from None
        est = _from_x_interval(r, f.q, "cluster")
        if est.eps <= eps:
            return est
        tol /= 4


def capacity_spectral(
    F: ForbiddenSet,
    eps: float = 1e-6,
    max_states: int = MAX_STATES,
    max_order: int = MAX_DET_ORDER,
) -> CapacityEstimate:
    """``log_q lambda(G_F)`` within eps."""
    eps = _check_eps(eps)
    if F.q < 2:
        raise InputError("capacity needs q >= 2")
    if not len(F):
        return _from_x_interval(RootInterval(Fraction(1, F.q), Fraction(1, F.q)), F.q, "spectral")
    G = build_debruijn(F, max_states)
    # lambda >= 1, so d(log_q lambda) <= d(lambda) / ln q
    lam_tol = Fraction(eps) * Fraction(math.log(F.q)) * Fraction(9, 10)
    while True:
        est = spectral_radius(G, lam_tol, max_order)
        out = _from_x_interval(est.x0, F.q, "spectral")
        if out.eps <= eps:
            return out
        lam_tol /= 4


def companion_matrix(h) -> list[list[Fraction]]:
    """Companion matrix of a monic polynomial: ones below the diagonal,
    last column ``-a_0, ..., -a_{n-1}``."""
    if isinstance(h, IntPoly):
        h = h.to_rat()
    elif not isinstance(h, RatPoly):
        h = RatPoly(h)
    if h.degree < 1:
        raise InputError("companion matrix needs degree >= 1")
    if h.lc != 1:
        raise InputError(f"companion matrix needs a monic polynomial, leading coefficient {h.lc}")
    n = int(h.degree)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        M[i][i - 1] = Fraction(1)
    for i in range(n):
        M[i][n - 1] = -h[i]
    return M


def companion_smallest_positive_root(p: IntPoly, imag_tol: float = 1e-9) -> float:
    """Uncertified float estimate via the eigenvalues of the companion matrix.

    ``numpy.linalg.eigvals`` runs Hessenberg QR; this is a cross-check
    backend only, with no error guarantee.
    """
    monic = p.to_rat() * Fraction(1, p.lc)
    M = np.array(companion_matrix(monic), dtype=float)
    ev = np.linalg.eigvals(M)
    pos = [z.real for z in ev if abs(z.imag) <= imag_tol * max(1.0, abs(z)) and z.real > 0]
    if not pos:
        raise NoRootError("companion matrix has no positive real eigenvalue")
    return min(pos)


def lpa_capacity_bound(q: int, ell: int, p: int) -> float:
    """Closed-form upper bound ``1 - (q-1)^2 log_q(e) / (2 q^(ell-p+3))`` on cap(LPA(ell, p))."""
    if not (isinstance(q, int) and isinstance(ell, int) and isinstance(p, int)):
        raise InputError("q, ell and p must be integers")
    if q < 2 or p < 2 or ell < p:
        raise InputError(f"need q >= 2 and ell >= p >= 2, got q={q}, ell={ell}, p={p}")
    return 1 - (q - 1) ** 2 / math.log(q) / (2 * q ** (ell - p + 3))
