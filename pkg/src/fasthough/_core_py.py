"""Numpy implementations of the hot kernels.

This is the fallback backend used when the compiled extension
(``fasthough._core``) is unavailable; both expose the same functions with
bit-identical results.  Everything here is exact int64 arithmetic.

Shared conventions:

* ``m = 2**p - 1``.  A slope/abscissa error term is the integer
  ``f(v) = -v if 2v < m else m - v`` applied to ``v = x * 2**r mod m``,
  i.e. the p-bit word of ``x`` rotated left ``r`` times (the all-ones word
  is a fixed point of the rotation and maps to 0 either way).
* The error numerator for slope ``t`` at abscissa ``x`` is the sum of
  ``f(rot_r(x))`` over the set bits ``r`` of ``t``; the common denominator
  ``m`` is applied by the callers.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

NAME = "py"


@lru_cache(maxsize=8)
def _rotation_values(p: int) -> np.ndarray:
    """(p, 2**p) table: row r holds f(rot_r(x)) for every word x."""
    n = 1 << p
    m = n - 1
    cur = np.arange(n, dtype=np.int64)
    rows = np.empty((p, n), dtype=np.int64)
    for r in range(p):
        rows[r] = np.where(2 * cur < m, -cur, m - cur)
        cur = ((cur << 1) & m) | (cur >> (p - 1))
    rows.flags.writeable = False
    return rows


def _gray_steps(p: int):
    """Yield (t, bit, added) walking all t in Gray-code order from t=0."""
    prev = 0
    for k in range(1, 1 << p):
        g = k ^ (k >> 1)
        bit = (g ^ prev).bit_length() - 1
        yield g, bit, bool(g >> bit & 1)
        prev = g


def per_slope_max(p: int) -> np.ndarray:
    """For every slope t, the maximum |error numerator| over all abscissas."""
    n = 1 << p
    values = _rotation_values(p)
    out = np.zeros(n, dtype=np.int64)
    acc = np.zeros(n, dtype=np.int64)
    for t, bit, added in _gray_steps(p):
        if added:
            acc += values[bit]
        else:
            acc -= values[bit]
        out[t] = np.abs(acc).max()
    return out


def per_slope_max_range(p: int, lo: int, hi: int) -> np.ndarray:
    """Same as per_slope_max restricted to slopes in [lo, hi)."""
    values = _rotation_values(p)
    out = np.zeros(hi - lo, dtype=np.int64)
    for i, t in enumerate(range(lo, hi)):
        if t == 0:
            continue
        acc = np.zeros(1 << p, dtype=np.int64)
        tt = t
        while tt:
            r = (tt & -tt).bit_length() - 1
            acc += values[r]
            tt &= tt - 1
        out[i] = np.abs(acc).max()
    return out


def _bin_indices(nums: np.ndarray, p: int, bins: int) -> np.ndarray:
    """Exact bin index on [-p/2, p/2] for error numerators over 2**p - 1.

    Uniform bins; a value exactly on an interior edge goes to the bin away
    from zero (zero itself, possible only for even bin counts, goes up).
    |num| < p*m/2 strictly, so the scaled offset is positive and plain
    floor division applies.
    """
    m = (1 << p) - 1
    scaled = bins * (2 * nums + p * m)
    span = 2 * p * m
    idx = scaled // span
    on_edge = (scaled % span == 0) & (nums < 0)
    return idx - on_edge


def hist_counts(p: int, bins: int) -> np.ndarray:
    """Histogram of all 4**p error values into `bins` uniform exact bins."""
    n = 1 << p
    values = _rotation_values(p)
    counts = np.zeros(bins, dtype=np.int64)
    acc = np.zeros(n, dtype=np.int64)
    counts[_bin_indices(acc[:1], p, bins)[0]] += n  # t = 0 row: all zeros
    for _t, bit, added in _gray_steps(p):
        if added:
            acc += values[bit]
        else:
            acc -= values[bit]
        counts += np.bincount(_bin_indices(acc, p, bins), minlength=bins)
    return counts


def hist_counts_range(p: int, lo: int, hi: int, bins: int) -> np.ndarray:
    """Histogram contribution of slopes in [lo, hi) only."""
    n = 1 << p
    values = _rotation_values(p)
    counts = np.zeros(bins, dtype=np.int64)
    for t in range(lo, hi):
        acc = np.zeros(n, dtype=np.int64)
        tt = t
        while tt:
            r = (tt & -tt).bit_length() - 1
            acc += values[r]
            tt &= tt - 1
        counts += np.bincount(_bin_indices(acc, p, bins), minlength=bins)
    return counts


def table_sums_range(p: int, lo: int, hi: int) -> np.ndarray:
    """Cyclic-shift table sums S for every word in [lo, hi).

    S(word) adds up the integer values of the word's p rotations whose
    leading bit is zero.
    """
    n = 1 << p
    m = n - 1
    half = n >> 1
    cur = np.arange(lo, hi, dtype=np.int64)
    out = np.where(cur < half, cur, 0)
    for _ in range(p - 1):
        cur = ((cur << 1) & m) | (cur >> (p - 1))
        out += np.where(cur < half, cur, 0)
    return out


def table_sums(p: int) -> np.ndarray:
    return table_sums_range(p, 0, 1 << p)


def fht_accumulate(pixels: np.ndarray) -> tuple[np.ndarray, int]:
    """Butterfly accumulation of all right-leaning mostly-horizontal patterns.

    Input: (n, n) int64 image, n a power of two.  Output: (n, 2n-1) int64
    accumulator `cells[t, s]` plus the number of cell additions performed.
    One addition is counted per output cell of every merge stage (reads
    past the shift range contribute zero), so the count is exactly
    n * (2n - 1) * log2(n).
    """
    n = pixels.shape[0]
    p = n.bit_length() - 1
    ws = 2 * n - 1
    spans = np.zeros((n, 1, ws), dtype=np.int64)
    spans[:, 0, :n] = pixels.T
    nadds = 0
    shifted = np.empty(ws, dtype=np.int64)
    for stage in range(p):
        nw = 2 << stage
        merged = np.empty((n // nw, nw, ws), dtype=np.int64)
        for j in range(n // nw):
            left = spans[2 * j]
            right = spans[2 * j + 1]
            for t in range(nw):
                half_t = t >> 1
                off = (t + 1) >> 1
                if off:
                    shifted[:ws - off] = right[half_t, off:]
                    shifted[ws - off:] = 0
                    np.add(left[half_t], shifted, out=merged[j, t])
                else:
                    np.add(left[half_t], right[half_t], out=merged[j, t])
                nadds += ws
        spans = merged
    return spans[0], nadds
