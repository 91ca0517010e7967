"""Exact counts N_F(n): recurrence extraction from T/S and a brute-force oracle."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .cluster import GenFun
from .errors import InputError, InternalError, ResourceError
from .words import ForbiddenSet

DEFAULT_BRUTE_BUDGET = 10**8


@dataclass(frozen=True)
class Recurrence:
    """``a_0 N(n) + a_1 N(n-1) + ... + a_s N(n-s) = b_n`` with ``b_n = 0`` past ``t``."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.a) - 1

    @property
    def t(self) -> int:
        return len(self.b) - 1

    def rhs(self, n: int) -> int:
        return self.b[n] if 0 <= n < len(self.b) else 0

    def describe(self) -> str:
        lhs = []
        for i, c in enumerate(self.a):
            if not c:
                continue
            term = "N(n)" if i == 0 else f"N(n-{i})"
            mag = abs(c)
            body = term if mag == 1 else f"{mag}*{term}"
            lhs.append(("-" if c < 0 else "+", body))
        text = ("-" if lhs[0][0] == "-" else "") + lhs[0][1]
        text += "".join(f" {s} {b}" for s, b in lhs[1:])
        cases = {}
        for n, c in enumerate(self.b):
            if c:
                cases.setdefault(c, []).append(n)
        rhs = "; ".join(f"{c} at n={','.join(map(str, ns))}" for c, ns in sorted(cases.items()))
        return f"{text} = [{rhs or '0'}; 0 otherwise]"


def recurrence_from_genfun(f: GenFun) -> Recurrence:
    if not f.S or f.S[0] <= 0:
        raise InputError("generating function denominator must have S(0) > 0")
    return Recurrence(tuple(f.S.coeffs), tuple(f.T.coeffs))


class CountStream:
    """Iterator over N(0), N(1), ... keeping only the last ``s`` values."""

    def __init__(self, f: GenFun):
        self.rec = recurrence_from_genfun(f)
        self.q = f.q
        self.n = 0
        self._hist: deque[int] = deque(maxlen=max(self.rec.s, 1))
        self._qpow = 1

    def __iter__(self) -> "CountStream":
        return self

    def __next__(self) -> int:
        a = self.rec.a
        acc = self.rec.rhs(self.n)
        # history is newest-last: N(n-1) is hist[-1]
        for i, prev in enumerate(reversed(self._hist), start=1):
            if i > self.rec.s:
                break
            acc -= a[i] * prev
        val, r = divmod(acc, a[0])
        if r:
            raise InternalError(f"non-exact recurrence division at n={self.n}")
        if not 0 <= val <= self._qpow:
            raise InternalError(f"count N({self.n})={val} outside [0, q^n]")
        self._hist.append(val)
        self.n += 1
        self._qpow *= self.q
        return val


def iter_counts(f: GenFun) -> Iterator[int]:
    return CountStream(f)


def count_range(f: GenFun, n_max: int) -> list[int]:
    """``[N(0), ..., N(n_max)]``."""
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    return list(itertools.islice(CountStream(f), n_max + 1))


def count(f: GenFun, n: int) -> int:
    if n < 0:
        raise InputError("n must be nonnegative")
    stream = CountStream(f)
    for _ in range(n):
        next(stream)
    return next(stream)


# -- brute-force oracle -----------------------------------------------------

_CHUNK = 1 << 20


def _ends_with_forbidden(q: int, length: int, words) -> np.ndarray:
    """Boolean table over all q^length windows: does the window end in a forbidden word?"""
    table = np.zeros(q**length, dtype=bool)
    for w in words:
        k = len(w)
        if k > length:
            continue
        code = 0
        for a in w:
            code = code * q + a
        # windows whose last k letters spell w: index = prefix * q^k + code
        table[code :: q**k] = True
    return table


def brute_force_counts(F: ForbiddenSet, n_max: int, budget: int = DEFAULT_BRUTE_BUDGET) -> list[int]:
    """``[N(0), ..., N(n_max)]`` by explicitly enumerating every F-free string.

    Strings are grown one letter at a time and dropped as soon as a forbidden
    word appears as a suffix, so only F-free prefixes are ever visited.  Each
    string is carried individually (as its last ``ell`` letters), never merged.
    """
    q = F.q
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    if q**n_max > budget:
        raise ResourceError(f"brute force needs q^n = {q}^{n_max} > budget {budget}")
    words = F.words
    if any(len(w) == 0 for w in words):
        return [0] * (n_max + 1)
    ell = max((len(w) for w in words), default=1)
    tables = [_ends_with_forbidden(q, k, words) for k in range(min(ell, n_max) + 1)]
    mod = q**ell
    letters = np.arange(q, dtype=np.int64)
    counts = [0] * (n_max + 1)
    counts[0] = 1

    # ext[k][c]: how many letters extend the length-k string with code c freely
    ext = {}
    for k in range(n_max):
        table = tables[min(k + 1, ell)]
        size = q ** min(k, ell)
        codes = (np.arange(size, dtype=np.int64)[:, None] * q + letters) % q ** min(k + 1, ell)
        ext[k] = (~table[codes]).sum(axis=1)

    def grow(frontier: np.ndarray, k: int) -> None:
        # frontier: codes of F-free strings of length k (last min(k, ell) letters)
        if k == n_max:
            return
        if k + 1 == n_max:
            # last level: tally each string's free one-letter extensions in place
            counts[n_max] += int(ext[k][frontier].sum())
            return
        table = tables[k + 1] if k + 1 <= ell else tables[ell]
        nxt = (frontier[:, None] * q + letters).ravel()
        if k + 1 > ell:
            nxt %= mod
        nxt = nxt[~table[nxt]]
        counts[k + 1] += int(nxt.size)
        for start in range(0, nxt.size, _CHUNK):
            grow(nxt[start : start + _CHUNK], k + 1)

    grow(np.zeros(1, dtype=np.int64), 0)
    return counts


def brute_force_count(F: ForbiddenSet, n: int, budget: int = DEFAULT_BRUTE_BUDGET) -> int:
    return brute_force_counts(F, n, budget)[n]
