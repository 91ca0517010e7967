from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from gjcodes.capacity import (
    capacity,
    capacity_spectral,
    companion_matrix,
    companion_smallest_positive_root,
    fraction_to_decimal,
    lpa_capacity_bound,
)
from gjcodes.cluster import cluster_genfun
from gjcodes.errors import DegenerateError, InputError
from gjcodes.exactalg import IntPoly, RatPoly
from gjcodes.randomsets import random_nested_pair
from gjcodes.series import count
from gjcodes.spectral import is_degenerate
from gjcodes.words import LPA, PA, ForbiddenSet, family_generate

x = IntPoly((0, 1))
D = ForbiddenSet.from_strings(["11", "0000", "010010", "001000", "000100"])


def genfun(F):
    return cluster_genfun(F)[1]


@pytest.mark.parametrize(
    "F, expected",
    [(family_generate(PA(6)), 0.7906315), (family_generate(LPA(6, 3)), 0.9467772), (D, 0.2757315)],
)
def test_capacity_examples(F, expected):
    c = capacity(genfun(F), 1e-6)
    assert c.eps <= 1e-6
    assert abs(c.value - expected) <= 1e-6
    assert c.method == "cluster"
    s = capacity_spectral(F, 1e-6)
    assert abs(s.value - expected) <= 1e-6
    assert abs(c.value - s.value) <= 2e-6


def test_capacity_golden_ratio():
    c = capacity(genfun(ForbiddenSet.from_strings(["11"])), 1e-9)
    assert abs(c.value - math.log2((1 + 5**0.5) / 2)) < 1e-9
    assert c.x0.lo <= (5**0.5 - 1) / 2 <= c.x0.hi


def test_capacity_zero_for_alternating():
    F = ForbiddenSet.from_strings(["11", "00"])
    c = capacity_spectral(F)
    assert c.x0.exact and c.x0.lo == 1 and abs(c.value) < 1e-13
    assert abs(capacity(genfun(F)).value) < 1e-13


def test_capacity_degenerate():
    F = ForbiddenSet.from_strings(["11", "00", "01"])
    with pytest.raises(DegenerateError):
        capacity(genfun(F))
    with pytest.raises(DegenerateError):
        capacity_spectral(F)


@pytest.mark.parametrize("eps", [0, 1, -0.5, 1e-20])
def test_capacity_eps_range(eps):
    with pytest.raises(InputError):
        capacity(genfun(ForbiddenSet.from_strings(["11"])), eps)


def test_capacity_json():
    c = capacity(genfun(ForbiddenSet.from_strings(["11"])), 1e-9)
    doc = c.to_json()
    assert set(doc) == {"capacity", "eps", "x0", "method"}
    lo, hi = (Fraction(s) for s in doc["x0"])
    assert (lo, hi) == (c.x0.lo, c.x0.hi)


def test_fraction_to_decimal():
    assert fraction_to_decimal(Fraction(1, 2)) == "0.5"
    assert fraction_to_decimal(Fraction(3, 8)) == "0.375"
    assert fraction_to_decimal(Fraction(7)) == "7"
    assert fraction_to_decimal(Fraction(-1, 40)) == "-0.025"
    assert fraction_to_decimal(Fraction(1, 3)) == "1/3"


def test_companion_matrix_examples():
    assert companion_matrix(x - 3) == [[3]]
    assert companion_matrix(x**2 - x - 1) == [[0, 1], [1, 1]]
    assert companion_matrix(x**3) == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    with pytest.raises(InputError):
        companion_matrix(2 * x - 1)
    with pytest.raises(InputError):
        companion_matrix(IntPoly((4,)))


def test_companion_characteristic_polynomial():
    rng = random.Random(1)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 6))]
        h = RatPoly(coeffs + [1])
        M = np.array(companion_matrix(h), dtype=float)
        char = np.poly(M)  # highest degree first
        assert np.allclose(char, [float(c) for c in reversed(h.coeffs)], atol=1e-8)


def test_companion_root_backend_agrees():
    for F in (family_generate(PA(6)), family_generate(LPA(6, 3)), D):
        f = genfun(F)
        c = capacity(f, 1e-9)
        approx = companion_smallest_positive_root(f.S)
        assert abs(approx - float(c.x0.midpoint)) < 1e-8


@pytest.mark.parametrize(
    "args, expected",
    [((2, 6, 3), 0.98873), ((2, 6, 4), 0.97746), ((2, 7, 2), 0.99718), ((2, 7, 3), 0.99436), ((2, 7, 4), 0.98873)],
)
def test_lpa_bound(args, expected):
    assert abs(lpa_capacity_bound(*args) - expected) < 1e-5
    q, ell, p = args
    assert capacity(genfun(family_generate(LPA(ell, p))), 1e-6).value <= lpa_capacity_bound(*args) + 1e-5


@pytest.mark.parametrize("args", [(1, 6, 3), (2, 2, 3), (2, 6, 1)])
def test_lpa_bound_errors(args):
    with pytest.raises(InputError):
        lpa_capacity_bound(*args)


def test_monotone_in_forbidden_set():
    rng = random.Random(4)
    checked = 0
    while checked < 40:
        F, G = random_nested_pair(rng, rng.choice((2, 3)), max_len=5)
        if is_degenerate(G):
            continue
        a = capacity(genfun(F), 1e-9).value
        b = capacity(genfun(G), 1e-9).value
        assert a >= b - 2e-9
        checked += 1


def test_growth_rate_consistency():
    for F in (family_generate(PA(6)), family_generate(LPA(6, 3)), D):
        f = genfun(F)
        n = 512
        est = math.log2(count(f, n)) / n
        assert abs(est - capacity(f, 1e-6).value) <= 0.02
