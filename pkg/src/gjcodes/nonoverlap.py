"""Variable-length non-overlapping (cross-bifix-free) codes.

A code is non-overlapping when no proper prefix of any codeword equals a
proper suffix of any codeword (the same word included) and no codeword is a
substring of another.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cluster import GenFun, check_genfun
from .errors import InputError, ResourceError
from .exactalg import IntPoly
from .words import Alphabet, Word, check_word, is_substring, prefixes, suffixes

DEFAULT_SEARCH_BUDGET = 10**6


@dataclass(frozen=True)
class CodeSet:
    alphabet: Alphabet
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        q = self.alphabet.q
        ws = sorted({check_word(w, q) for w in self.words}, key=lambda w: (len(w), w))
        if any(not w for w in ws):
            raise InputError("code words must be nonempty")
        object.__setattr__(self, "words", tuple(ws))

    @classmethod
    def from_strings(cls, words: Iterable[str], alphabet: Alphabet | int = 2) -> "CodeSet":
        if isinstance(alphabet, int):
            alphabet = Alphabet.of_size(alphabet)
        return cls(alphabet, tuple(alphabet.parse(w) for w in words))

    @property
    def q(self) -> int:
        return self.alphabet.q

    def by_length(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.words:
            out[len(w)] = out.get(len(w), 0) + 1
        return out

    def strings(self) -> list[str]:
        return [self.alphabet.format(w) for w in self.words]

    def __len__(self) -> int:
        return len(self.words)


def _no_bifix(u: Word, v: Word) -> bool:
    """Pre(u) and Suf(v) are disjoint."""
    return not prefixes(u) & suffixes(v)


def compatible(u: Word, v: Word) -> bool:
    """Whether ``{u, v}`` (u != v) may sit together in a non-overlapping code."""
    return (
        _no_bifix(u, v)
        and _no_bifix(v, u)
        and not is_substring(u, v)
        and not is_substring(v, u)
    )


def is_nonoverlapping(C: CodeSet | Iterable[Sequence[int]]) -> bool:
    words = list(C.words) if isinstance(C, CodeSet) else sorted({tuple(w) for w in C})
    if any(not w for w in words):
        raise InputError("code words must be nonempty")
    if not all(_no_bifix(w, w) for w in words):
        return False
    return all(compatible(u, v) for u, v in itertools.combinations(words, 2))


def nonoverlap_genfun(C: CodeSet) -> GenFun:
    """``1 / (1 - q x + sum_i |C_i| x^i)`` for a non-overlapping code without 1-letter words."""
    if any(len(w) < 2 for w in C.words):
        raise InputError("closed form needs every code word to have length >= 2")
    if not is_nonoverlapping(C):
        raise InputError(f"code is not non-overlapping: {C.strings()}")
    ell = max((len(w) for w in C.words), default=None)
    S = [1, -C.q] + [0] * ((ell or 1) - 1)
    for k, c in C.by_length().items():
        S[k] += c
    f = GenFun(IntPoly((1,)), IntPoly(S), C.q, ell)
    check_genfun(f, len(C))
    return f


# -- Levenshtein-type bound -------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    bound: Fraction
    floor: int

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "bound": str(self.bound),
            "bound_decimal": float(self.bound),
            "floor": self.floor,
        }


def levenshtein_bound(q: int, n: int) -> BoundReport:
    """Exact ``((n-1)/n)^(n-1) q^n / n``."""
    for name, v in (("q", q), ("n", n)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 2:
            raise InputError(f"{name} must be an integer >= 2, got {v!r}")
    b = Fraction((n - 1) ** (n - 1) * q**n, n**n)
    return BoundReport(q, n, b, b.numerator // b.denominator)


# -- exhaustive maximizer ---------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: CodeSet
    nodes: int

    def to_json(self) -> dict:
        return {"size": self.size, "witness": self.witness.strings(), "nodes": self.nodes}


def _greedy_colors(P: int, adj: list[int]) -> list[tuple[int, int]]:
    """Vertices of the bitset P with greedy color classes; color k bounds any
    clique found among the vertices listed up to it."""
    out = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            out.append((v, color))
    return out


def _max_clique(adj: list[int], budget: int) -> tuple[list[int], int]:
    best: list[int] = []
    nodes = 0

    def expand(R: list[int], P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise ResourceError(f"non-overlapping code search exceeded budget of {budget} nodes")
        for v, color in reversed(_greedy_colors(P, adj)):
            if len(R) + color <= len(best):
                return
            sub = P & adj[v]
            if sub:
                expand(R + [v], sub)
            elif len(R) + 1 > len(best):
                best = R + [v]
            P &= ~(1 << v)

    full = (1 << len(adj)) - 1
    if full:
        expand([], full)
    return best, nodes


def _best_long_code(r: int, n: int, budget: int) -> tuple[list[Word], int]:
    """Largest non-overlapping code with lengths 2..n over the letters 0..r-1."""
    cands = [
        w
        for k in range(2, n + 1)
        for w in itertools.product(range(r), repeat=k)
        if _no_bifix(w, w)
    ]
    adj = [0] * len(cands)
    for i, j in itertools.combinations(range(len(cands)), 2):
        if compatible(cands[i], cands[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    clique, nodes = _max_clique(adj, budget)
    return [cands[i] for i in clique], nodes


def max_variable_length_code(
    q: int, n: int, budget: int = DEFAULT_SEARCH_BUDGET, min_length: int = 1
) -> SearchResult:
    """Exact maximum size of a non-overlapping code with word lengths in ``[min_length, n]``.

    A one-letter codeword ``a`` may not occur inside any other codeword, so
    the search splits on the set of one-letter words: by symmetry it is
    ``{0, ..., s-1}``, and the rest of the code lives over the other ``q - s``
    letters with lengths at least 2.  That part is a maximum-clique problem
    on the compatibility graph, solved by branch and bound.
    """
    if not isinstance(q, int) or q < 2 or not isinstance(n, int) or n < 1:
        raise InputError(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    if min_length not in (1, 2):
        raise InputError("min_length must be 1 or 2")
    if sum(q**k for k in range(2, n + 1)) > budget:
        raise ResourceError(f"candidate space for q={q}, n={n} exceeds budget {budget}")
    best: tuple[int, list[Word]] = (-1, [])
    total_nodes = 0
    s_values = range(q + 1) if min_length == 1 and n >= 1 else [0]
    for s in s_values:
        long_words, nodes = _best_long_code(q - s, n, budget - total_nodes)
        total_nodes += nodes
        # shift the long-word letters past the s one-letter words
        code = [(a,) for a in range(s)] + [tuple(a + s for a in w) for w in long_words]
        if len(code) > best[0]:
            best = (len(code), code)
    witness = CodeSet(Alphabet.of_size(q), tuple(best[1]))
    return SearchResult(best[0], witness, total_nodes)
