"""Alphabets, words and forbidden sets, plus the named constraint families.

Words are plain tuples of symbol indices ``0..q-1``.  An :class:`Alphabet`
maps indices to printable symbol names; every kernel works on indices only.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InputError, ValidationError

Word = tuple[int, ...]

_DEFAULT_SYMBOLS = string.digits + string.ascii_lowercase


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise InputError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise InputError(f"duplicate symbols in alphabet {self.symbols!r}")
        for s in self.symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise InputError(f"symbols must be single characters, got {s!r}")

    @classmethod
    def of_size(cls, q: int) -> "Alphabet":
        """Default alphabet ``0, 1, ..., 9, a, b, ...`` of size *q*."""
        if not isinstance(q, int) or q < 1:
            raise InputError(f"alphabet size must be a positive integer, got {q!r}")
        if q > len(_DEFAULT_SYMBOLS):
            raise InputError(f"no default symbol names for q={q}; pass symbols explicitly")
        return cls(tuple(_DEFAULT_SYMBOLS[:q]))

    @property
    def q(self) -> int:
        return len(self.symbols)

    def parse(self, text: str) -> Word:
        index = {s: i for i, s in enumerate(self.symbols)}
        try:
            return tuple(index[ch] for ch in text)
        except KeyError as exc:
            raise InputError(f"symbol {exc.args[0]!r} of {text!r} not in alphabet") from None

    def format(self, word: Sequence[int]) -> str:
        return "".join(self.symbols[i] for i in word)


def check_word(word: Sequence[int], q: int) -> Word:
    w = tuple(word)
    for a in w:
        if not isinstance(a, int) or not 0 <= a < q:
            raise InputError(f"letter {a!r} out of range for q={q}")
    return w


def is_substring(u: Sequence[int], w: Sequence[int]) -> bool:
    """True iff *u* occurs as a contiguous block of *w* (the empty word always does)."""
    u, w = tuple(u), tuple(w)
    k = len(u)
    return any(w[i:i + k] == u for i in range(len(w) - k + 1))


def is_free(w: Sequence[int], words: Iterable[Sequence[int]]) -> bool:
    return not any(is_substring(f, w) for f in words)


def prefixes(w: Sequence[int]) -> set[Word]:
    """Proper nonempty prefixes."""
    w = tuple(w)
    return {w[:k] for k in range(1, len(w))}


def suffixes(w: Sequence[int]) -> set[Word]:
    """Proper nonempty suffixes."""
    w = tuple(w)
    return {w[k:] for k in range(1, len(w))}


@dataclass(frozen=True)
class ForbiddenSet:
    """A finite set of forbidden words over an alphabet.

    Words are stored deduplicated and sorted lexicographically.  ``nondegenerate``
    is a tri-state flag: ``None`` means nobody has checked yet.
    """

    alphabet: Alphabet
    words: tuple[Word, ...]
    nondegenerate: bool | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        q = self.alphabet.q
        ws = sorted({check_word(w, q) for w in self.words})
        object.__setattr__(self, "words", tuple(ws))

    @classmethod
    def from_strings(cls, words: Iterable[str], alphabet: Alphabet | int = 2) -> "ForbiddenSet":
        if isinstance(alphabet, int):
            alphabet = Alphabet.of_size(alphabet)
        return cls(alphabet, tuple(alphabet.parse(w) for w in words))

    @property
    def q(self) -> int:
        return self.alphabet.q

    @property
    def ell(self) -> int | None:
        """Maximum word length, or ``None`` for the empty set."""
        return max((len(w) for w in self.words), default=None)

    @property
    def is_reduced(self) -> bool:
        if any(len(w) < 2 for w in self.words):
            return False
        return not any(
            u != v and is_substring(u, v) for u in self.words for v in self.words
        )

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.words

    def strings(self) -> list[str]:
        return [self.alphabet.format(w) for w in self.words]

    def union(self, other: "ForbiddenSet") -> "ForbiddenSet":
        if other.alphabet != self.alphabet:
            raise InputError("cannot combine forbidden sets over different alphabets")
        return ForbiddenSet(self.alphabet, self.words + other.words)

    def with_nondegenerate(self, flag: bool) -> "ForbiddenSet":
        return ForbiddenSet(self.alphabet, self.words, flag)

    def __repr__(self) -> str:
        return f"ForbiddenSet(q={self.q}, {self.strings()})"


def reduce(F: ForbiddenSet) -> ForbiddenSet:
    """Drop every word that contains another member as a proper substring.

    Raises :class:`ValidationError` if a surviving word is shorter than 2; such
    sets shrink the alphabet instead, which is left to the caller.
    """
    ws = F.words
    keep = [w for w in ws if not any(u != w and is_substring(u, w) for u in ws)]
    short = [w for w in keep if len(w) < 2]
    if short:
        names = [F.alphabet.format(w) for w in short]
        raise ValidationError(f"forbidden words of length < 2 are not supported: {names}")
    return ForbiddenSet(F.alphabet, tuple(keep), F.nondegenerate)


def require_reduced(F: ForbiddenSet) -> None:
    if not F.is_reduced:
        raise ValidationError(f"forbidden set is not reduced: {F!r}")


# -- constraint families ----------------------------------------------------

Number = Union[int, Fraction]


def _windows(w: Word, size: int):
    return (w[i:i + size] for i in range(len(w) - size + 1))


@dataclass(frozen=True)
class RLL:
    """(d, k) run-length limit: 1s separated by at least d and at most k zeros."""

    d: int
    k: int
    name = "RLL"

    def validate(self, q: int) -> None:
        if q != 2:
            raise InputError("RLL is defined over the binary alphabet only")
        if not (isinstance(self.d, int) and isinstance(self.k, int)):
            raise InputError("RLL parameters must be integers")
        if not 0 <= self.d <= self.k or self.k < 1:
            raise InputError(f"RLL needs 0 <= d <= k and k >= 1, got d={self.d}, k={self.k}")

    def words(self, q: int) -> set[Word]:
        ws = {(1,) + (0,) * t + (1,) for t in range(self.d)}
        ws.add((0,) * (self.k + 1))
        return ws

    def accepts(self, w: Word) -> bool:
        ones = [i for i, a in enumerate(w) if a == 1]
        runs = [len(r) for r in "".join(map(str, w)).split("1")]
        if any(r > self.k for r in runs):
            return False
        return all(b - a - 1 >= self.d for a, b in zip(ones, ones[1:]))

    def params(self) -> dict:
        return {"name": self.name, "d": self.d, "k": self.k}


@dataclass(frozen=True)
class LB:
    """(ell, delta) local balance: every ell-window has weight in ell/2 -+ delta."""

    ell: int
    delta: Number
    name = "LB"

    def validate(self, q: int) -> None:
        if q != 2:
            raise InputError("LB is defined over the binary alphabet only")
        if not isinstance(self.ell, int) or self.ell < 2:
            raise InputError(f"LB window length must be an integer >= 2, got {self.ell!r}")
        delta = Fraction(self.delta)
        if not 0 <= delta < Fraction(self.ell, 2):
            raise InputError(f"LB needs 0 <= delta < ell/2, got delta={self.delta}")

    def _bad(self, window: Word) -> bool:
        wt = sum(window)
        half, delta = Fraction(self.ell, 2), Fraction(self.delta)
        return wt > half + delta or wt < half - delta

    def words(self, q: int) -> set[Word]:
        return {w for w in itertools.product(range(2), repeat=self.ell) if self._bad(w)}

    def accepts(self, w: Word) -> bool:
        return not any(self._bad(win) for win in _windows(w, self.ell))

    def params(self) -> dict:
        return {"name": self.name, "ell": self.ell, "delta": _num_out(self.delta)}


@dataclass(frozen=True)
class PA:
    """ell-palindrome avoidance."""

    ell: int
    name = "PA"

    def validate(self, q: int) -> None:
        if q < 2:
            raise InputError("PA needs q >= 2")
        if not isinstance(self.ell, int) or self.ell < 2:
            raise InputError(f"PA length must be an integer >= 2, got {self.ell!r}")

    def words(self, q: int) -> set[Word]:
        half = (self.ell + 1) // 2
        out = set()
        for left in itertools.product(range(q), repeat=half):
            out.add(left + tuple(reversed(left[: self.ell // 2])))
        return out

    def accepts(self, w: Word) -> bool:
        return not any(win == win[::-1] for win in _windows(w, self.ell))

    def params(self) -> dict:
        return {"name": self.name, "ell": self.ell}


@dataclass(frozen=True)
class LPA:
    """(ell, p) least-periodicity avoidance: no ell-window has a period below p."""

    ell: int
    p: int
    name = "LPA"

    def validate(self, q: int) -> None:
        if q < 2:
            raise InputError("LPA needs q >= 2")
        if not (isinstance(self.ell, int) and isinstance(self.p, int)):
            raise InputError("LPA parameters must be integers")
        if self.p < 2 or self.ell < self.p:
            raise InputError(f"LPA needs p >= 2 and ell >= p, got ell={self.ell}, p={self.p}")

    def _bad(self, window: Word) -> bool:
        return any(
            all(window[i] == window[i + pp] for i in range(len(window) - pp))
            for pp in range(1, self.p)
        )

    def words(self, q: int) -> set[Word]:
        # a window with period p' is fixed by its first p' letters
        out = set()
        for pp in range(1, self.p):
            for seed in itertools.product(range(q), repeat=pp):
                out.add(tuple(seed[i % pp] for i in range(self.ell)))
        return out

    def accepts(self, w: Word) -> bool:
        return not any(self._bad(win) for win in _windows(w, self.ell))

    def params(self) -> dict:
        return {"name": self.name, "ell": self.ell, "p": self.p}


Family = Union[RLL, LB, PA, LPA]
FAMILIES: dict[str, type] = {"RLL": RLL, "LB": LB, "PA": PA, "LPA": LPA}


def _num_out(x: Number):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def family_generate(family: Family, alphabet: Alphabet | int = 2) -> ForbiddenSet:
    """Forbidden set of a named family, reduced."""
    if isinstance(alphabet, int):
        alphabet = Alphabet.of_size(alphabet)
    family.validate(alphabet.q)
    return reduce(ForbiddenSet(alphabet, tuple(family.words(alphabet.q))))


def family_from_params(params: dict) -> Family:
    params = dict(params)
    try:
        name = params.pop("name")
        cls = FAMILIES[name]
    except KeyError:
        raise InputError(f"unknown or missing family name in {params!r}") from None
    if "delta" in params and isinstance(params["delta"], str):
        params["delta"] = Fraction(params["delta"])
    try:
        return cls(**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {name}: {exc}") from None
