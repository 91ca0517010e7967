"""Square matrices of integer polynomials and their exact determinants."""

from __future__ import annotations

from typing import Sequence

from ..errors import InputError
from .poly import IntPoly, _exact_div_int, _mul


class PolyMatrix:
    """An immutable m x m grid of :class:`IntPoly` entries (m >= 1)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(_entry(e) for e in row) for row in rows)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise InputError("PolyMatrix must be square with at least one row")
        self.rows = rows

    @classmethod
    def identity(cls, m: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "PolyMatrix":
        m = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(m)] for i in range(m)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> IntPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PolyMatrix({[[str(e) for e in r] for r in self.rows]})"


def _entry(e) -> IntPoly:
    if isinstance(e, IntPoly):
        return e
    if isinstance(e, int):
        return IntPoly((e,))
    if isinstance(e, (list, tuple)):
        return IntPoly(e)
    raise InputError(f"PolyMatrix entries must be IntPoly or int, got {e!r}")


def _sub(a: list, b: list) -> list:
    if len(a) < len(b):
        out = [-c for c in b]
        for i, c in enumerate(a):
            out[i] += c
    else:
        out = list(a)
        for i, c in enumerate(b):
            out[i] -= c
    while out and not out[-1]:
        out.pop()
    return out


def bareiss_det(M: PolyMatrix | Sequence[Sequence]) -> IntPoly:
    """Determinant by Bareiss fraction-free elimination.

    Every division by the previous pivot is exact (Sylvester's identity), and
    the code checks that it is.  Row swaps pick the first nonzero pivot.
    """
    if not isinstance(M, PolyMatrix):
        M = PolyMatrix(M)
    n = M.size
    a = [[list(e.coeffs) for e in row] for row in M.rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPoly()
        pk = a[k][k]
        rowk = a[k]
        same = pk == prev
        for i in range(k + 1, n):
            rowi = a[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                aij, akj = rowi[j], rowk[j]
                if not mik or not akj:
                    if not aij:
                        continue
                    if same:
                        continue  # pk * aij / prev == aij
                    v = _mul(pk, aij)
                elif not aij:
                    v = [-c for c in _mul(mik, akj)]
                else:
                    v = _sub(_mul(pk, aij), _mul(mik, akj))
                if v and prev != [1]:
                    v = _exact_div_int(v, prev)
                rowi[j] = v
            rowi[k] = []
        prev = pk
    det = a[n - 1][n - 1]
    return IntPoly._raw([sign * c for c in det])


def cofactor_det(M: PolyMatrix | Sequence[Sequence]) -> IntPoly:
    """Laplace expansion along the first row; exponential, for cross-checks only."""
    if not isinstance(M, PolyMatrix):
        M = PolyMatrix(M)
    rows = [list(r) for r in M.rows]

    def rec(rs: list) -> IntPoly:
        if len(rs) == 1:
            return rs[0][0]
        total = IntPoly()
        for j, e in enumerate(rs[0]):
            if not e:
                continue
            minor = [r[:j] + r[j + 1:] for r in rs[1:]]
            term = e * rec(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return rec(rows)
