"""Seeded random instances for property suites and ``verify --random``."""

from __future__ import annotations

import itertools
import random

from .nonoverlap import CodeSet, _no_bifix, compatible
from .words import Alphabet, ForbiddenSet, Word, reduce


def _random_word(rng: random.Random, q: int, lo: int, hi: int) -> Word:
    return tuple(rng.randrange(q) for _ in range(rng.randint(lo, hi)))


def random_reduced_set(
    rng: random.Random, q: int, max_size: int = 6, max_len: int = 6, min_len: int = 2
) -> ForbiddenSet:
    """A nonempty reduced forbidden set with at most *max_size* words of length
    in ``[min_len, max_len]``."""
    k = rng.randint(1, max_size)
    words = {_random_word(rng, q, min_len, max_len) for _ in range(k)}
    return reduce(ForbiddenSet(Alphabet.of_size(q), tuple(words)))


def random_reduced_sets(
    seed: int, count: int, qs=(2, 3), max_size: int = 6, max_len: int | dict = 6
) -> list[ForbiddenSet]:
    """*count* sets cycling through *qs*; *max_len* may be given per q."""
    rng = random.Random(seed)
    out = []
    for q in itertools.islice(itertools.cycle(qs), count):
        ell = max_len[q] if isinstance(max_len, dict) else max_len
        out.append(random_reduced_set(rng, q, max_size, ell))
    return out


def random_nested_pair(
    rng: random.Random, q: int, max_size: int = 6, max_len: int = 6
) -> tuple[ForbiddenSet, ForbiddenSet]:
    """``(F, G)`` with F a nonempty subset of G; both reduced."""
    G = random_reduced_set(rng, q, max_size, max_len)
    words = list(G.words)
    k = rng.randint(1, len(words))
    F = ForbiddenSet(G.alphabet, tuple(rng.sample(words, k)))
    return F, G


def random_nonoverlapping_code(
    rng: random.Random, q: int, max_len: int = 6, attempts: int = 40
) -> CodeSet:
    """Greedy random non-overlapping code with word lengths in ``[2, max_len]``."""
    chosen: list[Word] = []
    for _ in range(attempts):
        w = _random_word(rng, q, 2, max_len)
        if w in chosen or not _no_bifix(w, w):
            continue
        if all(compatible(w, u) for u in chosen):
            chosen.append(w)
    return CodeSet(Alphabet.of_size(q), tuple(chosen))
