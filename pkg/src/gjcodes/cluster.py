"""Goulden-Jackson cluster method.

For a reduced forbidden set F the cluster generating function is
``g = sum_v g_v`` where the unknowns ``g_v`` (clusters ending in ``v``) satisfy

    g_v + sum_u h_{u,v} g_u = -x^{|v|}        for every v in F,

with ``h_{u,v}`` the correlation polynomial.  The free-string generating
function is then ``f = 1 / (1 - q x - g)``.  Clusters are never enumerated;
the linear system is solved over Q(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InternalError, ValidationError
from .exactalg import IntPoly, RationalFunction, ratfun_canonicalize
from .words import ForbiddenSet, Word, prefixes, require_reduced, suffixes

X = IntPoly((0, 1))


def overlap_set(u: Sequence[int], v: Sequence[int]) -> set[Word]:
    """Proper suffixes of *u* that are also proper prefixes of *v*."""
    if not u or not v:
        raise InputError("overlaps are defined for nonempty words")
    return suffixes(u) & prefixes(v)


def correlation_poly(u: Sequence[int], v: Sequence[int]) -> IntPoly:
    """``sum over overlaps w of x^(|v| - |w|)``; never has a constant term."""
    coeffs = [0] * len(v)
    for w in overlap_set(u, v):
        coeffs[len(v) - len(w)] += 1
    return IntPoly(coeffs)


@dataclass(frozen=True)
class ClusterSystem:
    """Coefficient matrix ``B[i][j] = delta_ij + h_{v_i, v_j}`` and ``rhs[j] = -x^{|v_j|}``.

    The unknowns form a row vector: ``sum_i g_{v_i} B[i][j] = rhs[j]``.
    """

    order: tuple[Word, ...]
    B: tuple[tuple[IntPoly, ...], ...]
    rhs: tuple[IntPoly, ...]


def build_cluster_system(F: ForbiddenSet, order: Sequence[Word] | None = None) -> ClusterSystem:
    require_reduced(F)
    if not len(F):
        raise ValidationError("cluster system needs a nonempty forbidden set")
    words = tuple(F.words) if order is None else tuple(tuple(w) for w in order)
    if sorted(words) != list(F.words):
        raise InputError("order must be a permutation of the forbidden words")
    B = tuple(
        tuple(correlation_poly(u, v) + (1 if i == j else 0) for j, v in enumerate(words))
        for i, u in enumerate(words)
    )
    rhs = tuple(-IntPoly.monomial(len(v)) for v in words)
    return ClusterSystem(words, B, rhs)


def solve_cluster_system(system: ClusterSystem) -> list[RationalFunction]:
    """Solve for ``g_v`` by Gaussian elimination over Q(x).

    Works on the transposed system (equation j = column j of B).  The diagonal
    of B has constant term 1 and everything else has none, so det B is a unit
    at x = 0 and a nonzero pivot always exists.
    """
    n = len(system.order)
    # augmented rows: row j holds column j of B, then rhs[j]
    rows = [
        [RationalFunction.of(system.B[i][j]) for i in range(n)] + [RationalFunction.of(system.rhs[j])]
        for j in range(n)
    ]
    for k in range(n):
        piv = next((r for r in range(k, n) if rows[r][k]), None)
        if piv is None:
            raise InternalError("singular cluster system; det(B) must have constant term 1")
        rows[k], rows[piv] = rows[piv], rows[k]
        inv = 1 / rows[k][k]
        rows[k] = [e * inv for e in rows[k]]
        for r in range(n):
            if r != k and rows[r][k]:
                factor = rows[r][k]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[k])]
    return [rows[j][n] for j in range(n)]


@dataclass(frozen=True)
class GenFun:
    """``f(x) = T(x) / S(x) = sum_n N(n) x^n`` in canonical coprime form."""

    T: IntPoly
    S: IntPoly
    q: int
    ellF: int | None

    def to_json(self) -> dict:
        return {"T": self.T.to_strings(), "S": self.S.to_strings(), "q": self.q, "ellF": self.ellF}

    @classmethod
    def from_json(cls, doc: dict) -> "GenFun":
        try:
            T = IntPoly.from_strings(doc["T"])
            S = IntPoly.from_strings(doc["S"])
            q, ell = doc["q"], doc["ellF"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed GenFun document: {exc}") from None
        f = cls(T, S, q, ell)
        check_genfun(f)
        return f

    @property
    def ratfun(self) -> RationalFunction:
        return RationalFunction(self.T, self.S)


def check_genfun(f: GenFun, size: int | None = None) -> None:
    """Assert the canonical-form invariants (and the degree bound if *size* is given)."""
    canon = ratfun_canonicalize(f.T, f.S)
    if (canon.num, canon.den) != (f.T, f.S):
        raise InternalError(f"generating function not canonical: {f}")
    if f.S[0] <= 0 or f.T[0] != f.S[0]:
        raise InternalError(f"generating function violates T(0) = S(0) > 0: {f}")
    if size and f.ellF is not None:
        bound = size * f.ellF
        if f.T.degree > bound or f.S.degree > bound:
            raise InternalError(
                f"degree bound violated: deg T={f.T.degree}, deg S={f.S.degree} > {bound}"
            )


def genfun_from_cluster(g: RationalFunction, q: int, ellF: int | None, size: int) -> GenFun:
    # f = 1 / (1 - qx - n/d) = d / (d (1 - qx) - n)
    S = g.den * IntPoly((1, -q)) - g.num
    f = ratfun_canonicalize(g.den, S)
    out = GenFun(f.num, f.den, q, ellF)
    check_genfun(out, size)
    return out


def cluster_genfun(
    F: ForbiddenSet, order: Sequence[Word] | None = None
) -> tuple[RationalFunction, GenFun]:
    """Cluster generating function ``g`` and the canonical ``f = T/S`` for F."""
    require_reduced(F)
    if not len(F):
        g = RationalFunction.zero()
    else:
        parts = solve_cluster_system(build_cluster_system(F, order))
        g = RationalFunction.zero()
        for gv in parts:
            g = g + gv
    return g, genfun_from_cluster(g, F.q, F.ell, len(F))
