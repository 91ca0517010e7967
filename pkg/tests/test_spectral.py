from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest

from gjcodes.cluster import cluster_genfun
from gjcodes.errors import DegenerateError, InputError, ResourceError
from gjcodes.exactalg import IntPoly, smallest_positive_root
from gjcodes.randomsets import random_reduced_sets
from gjcodes.series import count_range
from gjcodes.spectral import (
    DeBruijnGraph,
    build_debruijn,
    det_poly,
    is_degenerate,
    spectral_radius,
    verify_transfer_identity,
    walk_count,
    walk_counts,
)
from gjcodes.words import LPA, PA, ForbiddenSet, family_generate

x = IntPoly((0, 1))


def fs(*words, q=2):
    return ForbiddenSet.from_strings(words, q)


def test_debruijn_fibonacci():
    G = build_debruijn(fs("11"))
    assert G.dump() == {
        "vertices": ["00", "01", "10"],
        "edges": [[0, 0], [0, 1], [1, 2], [2, 0], [2, 1]],
    }
    assert G.adjacency == [[1, 1, 0], [0, 0, 1], [1, 1, 0]]


def test_debruijn_alternating_and_empty():
    G = build_debruijn(fs("11", "00"))
    assert G.dump() == {"vertices": ["01", "10"], "edges": [[0, 1], [1, 0]]}
    G = build_debruijn(fs("00", "01", "10", "11"))
    assert G.m == 0
    with pytest.raises(InputError):
        build_debruijn(ForbiddenSet.from_strings([]))


def test_debruijn_guard():
    with pytest.raises(ResourceError):
        build_debruijn(fs("0" * 13), max_states=4096)


def test_walk_counts():
    G = build_debruijn(fs("11"))
    assert walk_count(G, 2) == 3
    assert walk_count(G, 3) == 5
    with pytest.raises(InputError):
        walk_count(G, 1)
    assert walk_count(build_debruijn(family_generate(PA(6))), 9) == 294
    assert walk_counts(G, 6) == {2: 3, 3: 5, 4: 8, 5: 13, 6: 21}


def test_det_poly_examples():
    assert det_poly(build_debruijn(fs("11")))[0] == 1 - x - x**2
    assert det_poly(build_debruijn(fs("11", "00")))[0] == 1 - x**2
    # vertex set {0, 1} with no edges at all: det(I - J) = -1
    G = DeBruijnGraph(fs("11"), ((0, 0), (1, 0)), ((), ()))
    d1, d2 = det_poly(G)
    assert d1 == IntPoly((1,)) and d2 == IntPoly((-1,))


def test_det_poly_j_trick_matches_direct():
    from gjcodes.exactalg import bareiss_det

    for F in random_reduced_sets(2, 12, max_len={2: 4, 3: 3}):
        G = build_debruijn(F)
        if G.m == 0:
            continue
        A = G.adjacency
        M = [[(1 if i == j else 0) - A[i][j] * x - 1 for j in range(G.m)] for i in range(G.m)]
        assert det_poly(G)[1] == bareiss_det(M)


def test_verify_transfer_identity_examples():
    for F in (fs("11"), family_generate(LPA(6, 3)), family_generate(PA(6))):
        _, f = cluster_genfun(F)
        assert verify_transfer_identity(F, f)


def test_verify_transfer_identity_detects_wrong_genfun():
    _, f = cluster_genfun(fs("11"))
    _, wrong = cluster_genfun(fs("00"))
    assert verify_transfer_identity(fs("00"), wrong)
    assert not verify_transfer_identity(fs("11", "000"), f)


def test_verify_transfer_identity_random():
    for F in random_reduced_sets(21, 50, max_len={2: 5, 3: 3}):
        _, f = cluster_genfun(F)
        assert verify_transfer_identity(F, f), F


def test_is_degenerate():
    assert not is_degenerate(fs("11"))
    assert is_degenerate(fs("00", "01", "10", "11"))
    assert is_degenerate(fs("11", "00", "01"))
    assert not is_degenerate(ForbiddenSet.from_strings([]))


def test_degeneracy_matches_polynomial_genfun():
    for F in random_reduced_sets(8, 60, max_size=6, max_len={2: 3, 3: 2}):
        _, f = cluster_genfun(F)
        assert is_degenerate(F) == (f.S.degree < 1), F


def test_spectral_radius():
    est = spectral_radius(build_debruijn(fs("11")), Fraction(1, 10**10))
    phi = (1 + 5**0.5) / 2
    assert est.lo <= phi <= est.hi and est.width <= Fraction(1, 10**10)
    est = spectral_radius(build_debruijn(fs("11", "00")), Fraction(1, 10**6))
    assert est.lo == est.hi == 1
    est = spectral_radius(build_debruijn(family_generate(PA(6))), Fraction(1, 10**9))
    assert abs(math.log2(float(est.lo)) - 0.7906315) < 1e-6
    with pytest.raises(DegenerateError):
        spectral_radius(build_debruijn(fs("11", "00", "01")), Fraction(1, 100))


def test_walks_match_cluster_counts():
    for F in random_reduced_sets(4, 40, max_len={2: 6, 3: 4}):
        _, f = cluster_genfun(F)
        N = count_range(f, 16)
        for n, v in walk_counts(build_debruijn(F), 16).items():
            assert v == N[n]


def test_root_of_S_matches_det_root():
    tol = Fraction(1, 10**10)
    for F in random_reduced_sets(13, 40, max_len={2: 5, 3: 3}):
        _, f = cluster_genfun(F)
        if f.S.degree < 1:
            continue
        d1, _ = det_poly(build_debruijn(F))
        r1 = smallest_positive_root(f.S, tol)
        r2 = smallest_positive_root(d1, tol)
        assert abs(r1.midpoint - r2.midpoint) <= Fraction(1, 10**9)


def test_lossless_small_graphs():
    for F in random_reduced_sets(17, 40, max_len={2: 3, 3: 2}):
        G = build_debruijn(F)
        if not 0 < G.m <= 8:
            continue
        for length in range(1, 7):
            seen = {}
            paths = [[v] for v in range(G.m)]
            for _ in range(length):
                paths = [p + [j] for p in paths for j in G.succ[p[-1]]]
            for p in paths:
                label = G.vertices[p[0]] + tuple(G.vertices[v][-1] for v in p[1:])
                key = (p[0], p[-1], label)
                assert key not in seen
                seen[key] = p
            assert len(set(itertools.chain(seen))) == len(paths)
