from __future__ import annotations

import itertools

import pytest

from gjcodes.cluster import GenFun, cluster_genfun
from gjcodes.errors import InputError, ResourceError
from gjcodes.exactalg import IntPoly
from gjcodes.randomsets import random_reduced_sets
from gjcodes.series import (
    brute_force_count,
    brute_force_counts,
    count,
    count_range,
    iter_counts,
    recurrence_from_genfun,
)
from gjcodes.words import LPA, PA, ForbiddenSet, family_generate, is_free

x = IntPoly((0, 1))


def test_recurrence_examples():
    rec = recurrence_from_genfun(GenFun(1 + x, 1 - x - x**2, 2, 2))
    assert rec.a == (1, -1, -1) and rec.b == (1, 1)
    assert rec.describe() == "N(n) - N(n-1) - N(n-2) = [1 at n=0,1; 0 otherwise]"
    _, f = cluster_genfun(family_generate(LPA(6, 3)))
    rec = recurrence_from_genfun(f)
    assert rec.a == (1, -1, -1, -1, -1) and rec.b == (1, 1, 1, 1, 1, 2)
    rec = recurrence_from_genfun(GenFun(IntPoly((1,)), 1 - 2 * x, 2, None))
    assert rec.a == (1, -2) and rec.b == (1,)


def test_counts_unconstrained():
    f = GenFun(IntPoly((1,)), 1 - 2 * x, 2, None)
    assert count_range(f, 10) == [2**n for n in range(11)]
    assert count(f, 0) == 1


def test_count_errors():
    f = GenFun(IntPoly((1,)), 1 - 2 * x, 2, None)
    with pytest.raises(InputError):
        count(f, -1)
    with pytest.raises(InputError):
        count_range(f, -1)


def test_stream_is_lazy():
    _, f = cluster_genfun(family_generate(PA(6)))
    it = iter_counts(f)
    first = list(itertools.islice(it, 17))
    assert first[9:] == [294, 508, 878, 1518, 2626, 4544, 7862, 13600]
    assert len(it._hist) <= max(recurrence_from_genfun(f).s, 1)


def test_brute_force_examples():
    assert brute_force_count(ForbiddenSet.from_strings(["11"]), 4) == 8
    assert brute_force_count(ForbiddenSet.from_strings(["0110"]), 0) == 1
    assert brute_force_count(family_generate(PA(6)), 9) == 294


def test_brute_force_matches_naive_enumeration():
    for F in random_reduced_sets(3, 10, max_len={2: 5, 3: 3}):
        n_max = 10 if F.q == 2 else 7
        naive = [
            sum(is_free(w, F.words) for w in itertools.product(range(F.q), repeat=n))
            for n in range(n_max + 1)
        ]
        assert brute_force_counts(F, n_max) == naive


def test_brute_force_budget():
    with pytest.raises(ResourceError):
        brute_force_counts(ForbiddenSet.from_strings(["11"]), 30, budget=10**6)


def test_series_product_and_bounds():
    for F in random_reduced_sets(7, 40, max_len={2: 6, 3: 4}):
        _, f = cluster_genfun(F)
        N = count_range(f, 16)
        S, T = f.S.coeffs, f.T.coeffs
        for n in range(17):
            conv = sum(S[i] * N[n - i] for i in range(min(n, len(S) - 1) + 1))
            assert conv == (T[n] if n < len(T) else 0)
        for n in range(17):
            assert 0 <= N[n] <= F.q**n
        for m in range(17):
            for k in range(17 - m):
                assert N[m + k] <= N[m] * N[k]


def test_large_n_exact():
    _, f = cluster_genfun(ForbiddenSet.from_strings(["11"]))
    # Fibonacci: N(n) = F(n+2)
    a, b = 0, 1
    for _ in range(1002):
        a, b = b, a + b
    assert count(f, 1000) == a
