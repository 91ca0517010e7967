from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gjcodes import specfile
from gjcodes.errors import InputError, ValidationError
from gjcodes.series import brute_force_counts
from gjcodes.words import (
    LB,
    LPA,
    PA,
    RLL,
    Alphabet,
    ForbiddenSet,
    family_from_params,
    family_generate,
    is_substring,
    reduce,
)


def fs(*words, q=2):
    return ForbiddenSet.from_strings(words, q)


def test_is_substring():
    assert is_substring((1, 1), (0, 1, 1, 0))
    assert not is_substring((1, 1), (0, 1, 0, 1))
    assert is_substring((), (0, 1))


def test_reduce_examples():
    assert reduce(fs("01", "010")).strings() == ["01"]
    assert reduce(fs("11", "00")).strings() == ["00", "11"]


def test_reduce_rejects_short_survivors():
    with pytest.raises(ValidationError):
        reduce(fs("1", "0110"))


def test_reduce_union_of_three_families_gives_D():
    parts = [family_generate(LB(6, 1)), family_generate(PA(6)), family_generate(RLL(1, 3))]
    F = parts[0]
    for p in parts[1:]:
        F = F.union(p)
    assert sorted(reduce(F).strings()) == sorted(["11", "0000", "010010", "001000", "000100"])


@pytest.mark.parametrize(
    "family, expected",
    [
        (RLL(1, 3), {"11", "0000"}),
        (PA(6), {"111111", "000000", "100001", "010010", "001100", "110011", "101101", "011110"}),
        (LPA(6, 3), {"111111", "000000", "101010", "010101"}),
        (LB(4, 1), {"0000", "1111"}),
    ],
)
def test_family_sets(family, expected):
    assert set(family_generate(family).strings()) == expected


@pytest.mark.parametrize(
    "family",
    [RLL(1, 3), RLL(0, 2), RLL(2, 5), LB(4, 1), LB(6, 1), LB(5, Fraction(1, 2)), LB(5, Fraction(3, 2)),
     PA(4), PA(5), PA(6), LPA(6, 3), LPA(5, 2), LPA(6, 4)],
    ids=lambda f: str(f.params()),
)
def test_family_predicate_matches_brute_force(family):
    F = family_generate(family)
    counts = brute_force_counts(F, 14)
    for n in range(15):
        direct = sum(family.accepts(w) for w in itertools.product((0, 1), repeat=n))
        assert counts[n] == direct, n


def test_family_over_ternary():
    F = family_generate(PA(3), 3)
    assert len(F) == 9
    counts = brute_force_counts(F, 8)
    fam = PA(3)
    for n in range(9):
        assert counts[n] == sum(fam.accepts(w) for w in itertools.product(range(3), repeat=n))


@pytest.mark.parametrize(
    "family, q",
    [(RLL(2, 1), 2), (RLL(0, 0), 2), (RLL(1, 3), 3), (LB(4, 2), 2), (LB(1, 0), 2),
     (PA(1), 2), (LPA(3, 4), 2), (LPA(4, 1), 2)],
)
def test_family_parameter_errors(family, q):
    with pytest.raises(InputError):
        family_generate(family, q)


def test_family_from_params():
    assert family_from_params({"name": "LB", "ell": 5, "delta": "1/2"}) == LB(5, Fraction(1, 2))
    with pytest.raises(InputError):
        family_from_params({"name": "XYZ"})
    with pytest.raises(InputError):
        family_from_params({"name": "RLL", "d": 1})


def test_alphabet():
    a = Alphabet(("A", "C", "G", "T"))
    assert a.parse("GATC") == (2, 0, 3, 1)
    assert a.format((3, 3)) == "TT"
    with pytest.raises(InputError):
        a.parse("GAX")
    with pytest.raises(InputError):
        Alphabet(("A", "A"))
    with pytest.raises(InputError):
        Alphabet(("AB",))


def test_forbidden_set_basics():
    F = fs("11", "00", "11")
    assert len(F) == 2 and F.ell == 2 and F.is_reduced
    assert (1, 1) in F
    empty = ForbiddenSet(Alphabet.of_size(3), ())
    assert empty.ell is None and empty.is_reduced
    assert not fs("1", "00").is_reduced
    with pytest.raises(InputError):
        ForbiddenSet(Alphabet.of_size(2), ((0, 2),))


word_sets = st.lists(st.lists(st.integers(0, 1), min_size=2, max_size=6), min_size=1, max_size=6)


@given(word_sets)
@settings(max_examples=60, deadline=None)
def test_reduce_idempotent_and_count_preserving(words):
    F = ForbiddenSet(Alphabet.of_size(2), tuple(map(tuple, words)))
    R = reduce(F)
    assert reduce(R) == R
    assert R.is_reduced
    assert brute_force_counts(F, 12) == brute_force_counts(R, 12)


def test_spec_round_trip():
    F = specfile.loads('{"q": 2, "family": {"name": "RLL", "d": 1, "k": 3}, '
                       '"combine": [{"forbidden": ["010010"]}]}')
    assert F.strings() == ["0000", "010010", "11"]
    again = specfile.loads(specfile.dumps(F))
    assert again == F
    assert specfile.dumps(again) == specfile.dumps(F)


def test_spec_symbols():
    F = specfile.loads('{"symbols": ["a", "b"], "forbidden": ["bb"]}')
    assert F.q == 2 and F.strings() == ["bb"]


@pytest.mark.parametrize(
    "text",
    ['{"q": 2}', '{"forbidden": ["11"]}', '{"q": 2, "forbidden": ["12"]}', "not json",
     '{"q": 2, "forbidden": ["11"], "family": {"name": "PA", "ell": 4}}',
     '{"q": 3, "symbols": ["a", "b"], "forbidden": ["ab"]}', '{"q": 2, "forbidden": 11}'],
)
def test_spec_errors(text):
    with pytest.raises(InputError):
        specfile.loads(text)
