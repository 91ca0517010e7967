"""The de Bruijn (transfer-matrix) side: graph, walk counts, determinants,
spectral radius and degeneracy."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cluster import GenFun
from .errors import DegenerateError, InputError, ResourceError
from .exactalg import (
    IntPoly,
    PolyMatrix,
    RationalFunction,
    RootInterval,
    bareiss_det,
    smallest_positive_root,
)
from .series import brute_force_counts
from .words import ForbiddenSet, Word

# q^ell(F) above this and the graph is not built at all
MAX_STATES = 4096
# determinant-based operations are restricted to this many vertices
MAX_DET_ORDER = 256


@dataclass(frozen=True)
class DeBruijnGraph:
    """Vertices are the F-free words of length ell(F), in lexicographic order;
    ``w1 -> w2`` iff ``w1[1:] == w2[:-1]``."""

    F: ForbiddenSet
    vertices: tuple[Word, ...]
    succ: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def ell(self) -> int:
        return self.F.ell

    @property
    def adjacency(self) -> list[list[int]]:
        A = [[0] * self.m for _ in range(self.m)]
        for i, out in enumerate(self.succ):
            for j in out:
                A[i][j] = 1
        return A

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, out in enumerate(self.succ) for j in out]

    def has_cycle(self) -> bool:
        indeg = [0] * self.m
        for out in self.succ:
            for j in out:
                indeg[j] += 1
        stack = [i for i in range(self.m) if indeg[i] == 0]
        seen = 0
        while stack:
            i = stack.pop()
            seen += 1
            for j in self.succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        return seen < self.m

    def dump(self) -> dict:
        fmt = self.F.alphabet.format
        return {"vertices": [fmt(v) for v in self.vertices], "edges": [list(e) for e in self.edges()]}


def build_debruijn(F: ForbiddenSet, max_states: int = MAX_STATES) -> DeBruijnGraph:
    if not len(F):
        raise InputError("de Bruijn graph needs a nonempty forbidden set")
    q, ell = F.q, F.ell
    if q**ell > max_states:
        raise ResourceError(f"de Bruijn graph would scan q^ell = {q}^{ell} > {max_states} states")
    forbidden = set(F.words)
    lengths = sorted({len(w) for w in forbidden})

    def free(w: Word) -> bool:
        return not any(w[i:i + k] in forbidden for k in lengths for i in range(ell - k + 1))

    vertices = tuple(w for w in itertools.product(range(q), repeat=ell) if free(w))
    index = {v: i for i, v in enumerate(vertices)}
    succ = tuple(
        tuple(index[nxt] for a in range(q) if (nxt := v[1:] + (a,)) in index) for v in vertices
    )
    return DeBruijnGraph(F, vertices, succ)


def walk_count(G: DeBruijnGraph, n: int) -> int:
    """Number of walks of length ``n - ell``, i.e. the number of F-free strings of length n."""
    if n < G.ell:
        raise InputError(f"walk counts need n >= ell(F) = {G.ell}, got {n}")
    v = [1] * G.m
    for _ in range(n - G.ell):
        v = [sum(v[j] for j in out) for out in G.succ]
    return sum(v)


def walk_counts(G: DeBruijnGraph, n_max: int) -> dict[int, int]:
    """``{n: N(n)}`` for ``ell <= n <= n_max`` in one sweep."""
    out = {}
    v = [1] * G.m
    for n in range(G.ell, n_max + 1):
        out[n] = sum(v)
        v = [sum(v[j] for j in o) for o in G.succ]
    return out


def _guard_det(G: DeBruijnGraph, max_order: int) -> None:
    if G.m > max_order:
        raise ResourceError(f"determinant of order {G.m} exceeds limit {max_order}")


def _ixa_rows(G: DeBruijnGraph) -> list[list[IntPoly]]:
    x = IntPoly((0, 1))
    return [[(1 if i == j else 0) - (x if j in out else 0) for j in range(G.m)]
            for i, out in enumerate(map(set, G.succ))]


def det_ixa(G: DeBruijnGraph, max_order: int = MAX_DET_ORDER) -> IntPoly:
    """``det(I - xA)``; 1 for the empty graph."""
    _guard_det(G, max_order)
    if G.m == 0:
        return IntPoly((1,))
    return bareiss_det(PolyMatrix(_ixa_rows(G)))


def det_poly(G: DeBruijnGraph, max_order: int = MAX_DET_ORDER) -> tuple[IntPoly, IntPoly]:
    """``(det(I - xA), det(I - xA - J))`` as exact integer polynomials.

    The empty graph gives ``(1, 1)`` (empty determinants).
    """
    _guard_det(G, max_order)
    m = G.m
    if m == 0:
        one = IntPoly((1,))
        return one, one
    rows = _ixa_rows(G)
    d1 = bareiss_det(PolyMatrix(rows))
    # I - xA - J: subtract row 0 from the others so J survives only in row 0,
    # then move that dense row last, which costs a sign of (-1)^(m-1)
    top = [e - 1 for e in rows[0]]
    rest = [[e - t for e, t in zip(rows[i], rows[0])] for i in range(1, m)]
    d2 = bareiss_det(PolyMatrix(rest + [top]))
    if (m - 1) % 2:
        d2 = -d2
    return d1, d2


def verify_transfer_identity(F: ForbiddenSet, f: GenFun, max_order: int = MAX_DET_ORDER) -> bool:
    """Check ``f = h_F - x^ell det(I - xA - J) / det(I - xA)`` exactly.

    ``h_F`` takes its low-order counts from the brute-force oracle so this
    check shares no code with the cluster pipeline.
    """
    G = build_debruijn(F)
    d1, d2 = det_poly(G, max_order)
    ell = F.ell
    low = brute_force_counts(F, ell - 1)
    h = IntPoly(low + [1])
    rhs_num = h * d1 - d2.shift(ell)
    return RationalFunction(f.T, f.S).equals(rhs_num, d1)


def is_degenerate(F: ForbiddenSet, max_states: int = MAX_STATES) -> bool:
    """True iff only finitely many F-free strings exist (no cycle in G_F)."""
    if not len(F):
        return False
    G = build_debruijn(F, max_states)
    return G.m == 0 or not G.has_cycle()


@dataclass(frozen=True)
class SpectralEstimate:
    """``lo <= lambda(G) <= hi``; ``x0`` isolates ``1/lambda`` as a root of det(I - xA)."""

    lo: Fraction
    hi: Fraction
    x0: RootInterval
    method: str = "det-root-isolation"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def spectral_radius(
    G: DeBruijnGraph, tol, max_order: int = MAX_DET_ORDER
) -> SpectralEstimate:
    """Enclosure of lambda(G) = 1 / (smallest positive root of det(I - xA)), width <= tol."""
    if G.m == 0 or not G.has_cycle():
        raise DegenerateError("graph is acyclic; spectral radius is 0 and capacity undefined")
    d1 = det_ixa(G, max_order)
    tol = Fraction(tol)
    q = G.F.q
    # lambda <= q, so x0 >= 1/q and d(1/x) <= q^2 dx on [1/q, 1]
    root_tol = tol / (2 * q * q)
    while True:
        r = smallest_positive_root(d1, root_tol, search_hint=(0, 1))
        lam_lo = 1 / r.hi
        lam_hi = 1 / r.lo
        if lam_hi - lam_lo <= tol:
            return SpectralEstimate(lam_lo, lam_hi, r)
        root_tol /= 4
