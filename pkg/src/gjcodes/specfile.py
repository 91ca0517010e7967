"""Constraint specification documents (JSON) consumed by the CLI.

Accepted shape::

    {"q": 2, "symbols": ["0", "1"],
     "forbidden": ["11", "0000"]}            # explicit words, or
    {"q": 2, "family": {"name": "RLL", "d": 1, "k": 3}}

and optionally ``"combine": [<part>, ...]`` where each part has its own
``forbidden`` or ``family`` field.  All parts are unioned, then reduced.
Serialization always emits the canonical explicit form.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InputError
from .words import Alphabet, ForbiddenSet, family_from_params, family_generate, reduce


def _alphabet(doc: dict) -> Alphabet:
    q = doc.get("q")
    symbols = doc.get("symbols")
    if symbols is not None:
        if not isinstance(symbols, list) or not all(isinstance(s, str) for s in symbols):
            raise InputError("'symbols' must be a list of strings")
        alphabet = Alphabet(tuple(symbols))
        if q is not None and q != alphabet.q:
            raise InputError(f"q={q} disagrees with {alphabet.q} symbols")
        return alphabet
    if not isinstance(q, int) or isinstance(q, bool):
        raise InputError("constraint spec needs an integer 'q'")
    return Alphabet.of_size(q)


def _part(part: dict, alphabet: Alphabet) -> ForbiddenSet:
    if not isinstance(part, dict):
        raise InputError(f"spec part must be an object, got {part!r}")
    has_words, has_family = "forbidden" in part, "family" in part
    if has_words == has_family:
        raise InputError("each spec part needs exactly one of 'forbidden' or 'family'")
    if has_words:
        words = part["forbidden"]
        if not isinstance(words, list) or not all(isinstance(w, str) for w in words):
            raise InputError("'forbidden' must be a list of strings")
        return ForbiddenSet(alphabet, tuple(alphabet.parse(w) for w in words))
    fam = part["family"]
    if not isinstance(fam, dict):
        raise InputError("'family' must be an object")
    return family_generate(family_from_params(fam), alphabet)


def parse_spec(doc: dict[str, Any]) -> ForbiddenSet:
    """Build the reduced forbidden set described by a spec document."""
    if not isinstance(doc, dict):
        raise InputError("constraint spec must be a JSON object")
    alphabet = _alphabet(doc)
    parts = []
    if "forbidden" in doc or "family" in doc:
        parts.append(_part(doc, alphabet))
    combine = doc.get("combine", [])
    if not isinstance(combine, list):
        raise InputError("'combine' must be a list")
    parts.extend(_part(p, alphabet) for p in combine)
    if not parts:
        raise InputError("constraint spec has no 'forbidden', 'family' or 'combine' entry")
    F = parts[0]
    for other in parts[1:]:
        F = F.union(other)
    return reduce(F)


def serialize_spec(F: ForbiddenSet) -> dict[str, Any]:
    return {"q": F.q, "symbols": list(F.alphabet.symbols), "forbidden": F.strings()}


def loads(text: str) -> ForbiddenSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"constraint spec is not valid JSON: {exc}") from None
    return parse_spec(doc)


def dumps(F: ForbiddenSet) -> str:
    return json.dumps(serialize_spec(F), sort_keys=True)


def load(path: str | Path) -> ForbiddenSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text)
