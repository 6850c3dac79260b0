"""Exact error analysis: Fraction oracle, frozen values, scans, histogram.

`oracle_error` recomputes E(x, t) from the definition with Fractions and
`oracle_histogram` re-bins with Fraction edge comparisons, so every frozen
value and every kernel result is checked against an independent route.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from fasthough import (
    CapExceededError,
    ExactRational,
    error_at,
    error_histogram,
    exhaustive_cap,
    global_max_error,
    interchange_residual,
    max_error_for_slope,
    per_slope_profile,
    symmetry_residual,
)
from fasthough.errors import slope_error_numerators


def oracle_error(p: int, t: int, x: int) -> Fraction:
    m = 2**p - 1
    total = Fraction(0)
    for r in range(p):
        if t >> r & 1:
            z = Fraction(2**r * x, m)
            total += math.floor(z + Fraction(1, 2)) - z
    return total


def oracle_histogram(p: int, bins: int) -> list[int]:
    edges = [Fraction(-p, 2) + Fraction(p, bins) * i for i in range(bins + 1)]
    counts = [0] * bins
    for t in range(2**p):
        for x in range(2**p):
            e = oracle_error(p, t, x)
            # lower-adjacent bin; an edge value moves away from zero
            # (upward for e >= 0, i.e. zero on an edge goes up)
            idx = sum(1 for edge in edges[1:-1] if edge < e)
            if e >= 0 and any(e == edge for edge in edges[1:-1]):
                idx += 1
            counts[idx] += 1
    return counts


# -- the pointwise error -------------------------------------------------------


@pytest.mark.parametrize("p,t,x,num", [
    (2, 0, 0, 0), (2, 0, 3, 0),
    (2, 1, 1, -1),
    (4, 5, 5, -10),
])
def test_error_at_frozen_examples(p, t, x, num):
    m = 2**p - 1
    assert oracle_error(p, t, x) == Fraction(num, m)
    value = error_at(p, t, x)
    assert (value.num, value.den) == (num, m)


def test_error_at_matches_oracle_exhaustively():
    for p in range(1, 6):
        m = 2**p - 1
        for t in range(2**p):
            nums = slope_error_numerators(p, t)
            for x in range(2**p):
                want = oracle_error(p, t, x)
                assert error_at(p, t, x).as_fraction() == want
                assert Fraction(int(nums[x]), m) == want


def test_error_at_validation():
    with pytest.raises(ValueError):
        error_at(2, 4, 0)
    with pytest.raises(ValueError):
        error_at(2, 0, 4)
    with pytest.raises(ValueError):
        error_at(2, -1, 0)


# -- per-slope and global maxima -----------------------------------------------


def test_max_error_for_slope_frozen_examples():
    res = max_error_for_slope(2, 0)
    assert res.value == 0 and res.argmax == (0, 1, 2, 3)

    res = max_error_for_slope(2, 1)
    assert res.value == ExactRational(1, 3) and res.argmax == (1, 2)

    res = max_error_for_slope(4, 5)
    assert res.value == ExactRational(10, 15) and res.argmax == (5, 10)


def test_global_max_error_small_p_against_oracle():
    for p in (1, 2, 3, 4):
        m = 2**p - 1
        peak = max(abs(oracle_error(p, t, x))
                   for t in range(2**p) for x in range(2**p))
        attaining = {(x, t) for t in range(2**p) for x in range(2**p)
                     if abs(oracle_error(p, t, x)) == peak}
        got = global_max_error(p)
        assert got.value.as_fraction() == peak
        assert got.attaining == attaining


def test_global_max_error_frozen_values():
    g2 = global_max_error(2)
    assert g2.value == ExactRational(1, 3)
    assert {(1, 1), (2, 2)} <= g2.attaining

    g4 = global_max_error(4)
    assert g4.value == ExactRational(10, 15)
    assert {(5, 5), (10, 10)} <= g4.attaining

    g3 = global_max_error(3)
    assert g3.value == ExactRational(3, 7)
    assert g3.attaining


def test_global_max_error_workers_agree():
    solo = global_max_error(6)
    multi = global_max_error(6, workers=3)
    assert solo == multi


def test_scan_cap(monkeypatch):
    monkeypatch.setenv("FHT_MAX_P", "3")
    assert exhaustive_cap() == 3
    with pytest.raises(CapExceededError):
        global_max_error(4)
    with pytest.raises(CapExceededError):
        per_slope_profile(4)
    with pytest.raises(CapExceededError):
        error_histogram(4, 5)
    monkeypatch.setenv("FHT_MAX_P", "99")
    with pytest.raises(ValueError):
        exhaustive_cap()
    monkeypatch.delenv("FHT_MAX_P")
    assert exhaustive_cap() == 13


def test_attaining_slopes_reach_the_global_peak():
    # fixing the slope to any attaining one, the per-slope maximum is the
    # global maximum (and its argmax abscissas are the attaining partners)
    for p in (3, 4, 6):
        top = global_max_error(p)
        for x, t in top.attaining:
            res = max_error_for_slope(p, t)
            assert res.value == top.value
            assert x in res.argmax


def test_per_slope_profile_matches_scalar_route():
    profile = per_slope_profile(5, with_argmax=True)
    assert len(profile.per_slope_max) == 32
    for t in range(32):
        want = max_error_for_slope(5, t)
        assert profile.per_slope_max[t] == want.value
        assert profile.argmax[t] == want.argmax


# -- residual identities ---------------------------------------------------------


def test_symmetry_residual_examples_and_exhaustive():
    assert symmetry_residual(2, 1, 0).num == 0
    assert symmetry_residual(3, 5, 2).num == 0
    for p in range(1, 7):
        for t in range(2**p):
            for y in range(2**(p - 1)):
                assert symmetry_residual(p, t, y).num == 0
    with pytest.raises(ValueError):
        symmetry_residual(3, 0, 4)


def test_interchange_residual_examples_and_exhaustive():
    assert interchange_residual(2, 1, 2).num == 0
    assert interchange_residual(3, 3, 3).num == 0
    for p in range(1, 7):
        for t in range(2**p):
            for x in range(2**p):
                assert interchange_residual(p, t, x).num == 0


def test_error_sum_is_zero_and_coarse_bound_holds():
    for p in range(1, 9):
        m = 2**p - 1
        total = 0
        for t in range(2**p):
            nums = slope_error_numerators(p, t)
            total += int(nums.sum())
            assert 2 * int(np.abs(nums).max()) <= p * m
        assert total == 0


# -- histogram -------------------------------------------------------------------


def test_histogram_two_bin_p1_frozen():
    # all four p=1 errors are exactly 0, which sits on the middle edge of an
    # even bin count and goes to the upper bin by the documented rule
    hist = error_histogram(1, 2)
    assert hist.counts == (0, 4)
    assert hist.total == 4


def test_histogram_counts_match_oracle():
    for p, bins in ((1, 2), (2, 3), (3, 5), (4, 7), (4, 8)):
        assert list(error_histogram(p, bins).counts) == oracle_histogram(p, bins)


def test_histogram_conservation_and_edges():
    for p, bins in ((3, 11), (5, 9), (8, 101)):
        hist = error_histogram(p, bins)
        assert sum(hist.counts) == 4**p
        assert hist.bin_edges[0] == Fraction(-p, 2)
        assert hist.bin_edges[-1] == Fraction(p, 2)
        assert len(hist.bin_edges) == bins + 1


def test_histogram_mirrors_for_odd_bin_counts():
    for p in range(1, 9):
        for bins in (3, 7, 51):
            counts = error_histogram(p, bins).counts
            assert counts == counts[::-1]


def test_histogram_workers_agree():
    assert error_histogram(6, 31) == error_histogram(6, 31, workers=3)


def test_histogram_validation():
    with pytest.raises(ValueError):
        error_histogram(3, 1)
