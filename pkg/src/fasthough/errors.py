"""Exact approximation error of dyadic patterns against the straight line.

At column ``x`` the pattern of slope ``t`` misses the continuous line by

    E(x, t) = sum over set bits r of t of
              ( nearest_int(2**r x / m) - 2**r x / m ),      m = 2**p - 1,

an exact rational over the fixed denominator ``m``.  Every decision in this
module (maxima, histogram binning, residual checks) is made on integer
numerators; floating point appears only in CSV rendering.

Useful identities, all verified by the test suite:

* slope/abscissa interchange: ``E(x, t) == E(t, x)``;
* central antisymmetry: ``E(2**(p-1) - 1 - y, t) == -E(2**(p-1) + y, t)``;
* the per-term numerator is ``f(v) = -v if 2v < m else m - v`` evaluated at
  ``v = 2**r x mod m`` (the rotated bit word), which ties the global
  maximum to the cyclic-table functional of :mod:`fasthough.maximizer`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

import numpy as np

from . import kernels
from .patterns import MAX_EXPONENT, _check_exponent, round_half_up
from .rational import ExactRational

DEFAULT_SCAN_CAP = 13
SCAN_CAP_ENV = "FHT_MAX_P"


class CapExceededError(ValueError):
    """An exhaustive scan was requested above the configured exponent cap."""


def exhaustive_cap() -> int:
    """Largest exponent the full 4**p scans accept (FHT_MAX_P overrides)."""
    raw = os.environ.get(SCAN_CAP_ENV)
    if raw is None:
        return DEFAULT_SCAN_CAP
    cap = int(raw)
    if not 1 <= cap <= MAX_EXPONENT:
        raise ValueError(f"{SCAN_CAP_ENV} must be in [1, {MAX_EXPONENT}], got {cap}")
    return cap


def _check_scan_cap(p: int) -> None:
    cap = exhaustive_cap()
    if p > cap:
        raise CapExceededError(
            f"exhaustive scan at p={p} exceeds the cap {cap} "
            f"(raise {SCAN_CAP_ENV}, or use fasthough.maximizer.search_maximizers "
            "for the peak error via the pruned cyclic-table search)")


def _check_coord(p: int, value: int, name: str) -> None:
    if not 0 <= value <= (1 << p) - 1:
        raise ValueError(f"{name} must be in [0, {(1 << p) - 1}], got {value}")


def error_numerator(p: int, t: int, x: int) -> int:
    """Integer numerator of E(x, t) over the denominator 2**p - 1."""
    _check_exponent(p)
    _check_coord(p, t, "slope t")
    _check_coord(p, x, "abscissa x")
    m = (1 << p) - 1
    num = 0
    tt = t
    while tt:
        r = (tt & -tt).bit_length() - 1
        z = x << r
        num += m * round_half_up(z, m) - z
        tt &= tt - 1
    return num


def error_at(p: int, t: int, x: int) -> ExactRational:
    """E(x, t) as an exact rational over 2**p - 1."""
    return ExactRational(error_numerator(p, t, x), (1 << p) - 1)


def slope_error_numerators(p: int, t: int) -> np.ndarray:
    """Vector of error numerators over all abscissas for one slope."""
    _check_exponent(p)
    _check_coord(p, t, "slope t")
    n = 1 << p
    m = n - 1
    x = np.arange(n, dtype=np.int64)
    num = np.zeros(n, dtype=np.int64)
    tt = t
    while tt:
        r = (tt & -tt).bit_length() - 1
        v = ((x << r) | (x >> (p - r))) & m if r else x  # left rotation by r
        num += np.where(2 * v < m, -v, m - v)
        tt &= tt - 1
    return num


@dataclass(frozen=True)
class SlopeMax:
    value: ExactRational  # max |E| over x, >= 0
    argmax: tuple[int, ...]  # all attaining abscissas, ascending


def max_error_for_slope(p: int, t: int, with_argmax: bool = True) -> SlopeMax:
    """Peak |E( . , t)| and, optionally, every abscissa attaining it."""
    nums = slope_error_numerators(p, t)
    peak = int(np.abs(nums).max())
    arg: tuple[int, ...] = ()
    if with_argmax:
        arg = tuple(int(i) for i in np.nonzero(np.abs(nums) == peak)[0])
    return SlopeMax(ExactRational(peak, (1 << p) - 1), arg)


@dataclass(frozen=True)
class ErrorProfile:
    """Per-slope peak errors; argmax sets only when requested (memory)."""

    p: int
    per_slope_max: tuple[ExactRational, ...]
    argmax: tuple[tuple[int, ...], ...] | None = None


def _slope_chunk(args: tuple[int, int, int]) -> np.ndarray:
    p, lo, hi = args
    return kernels.per_slope_max_range(p, lo, hi)


def _chunk_ranges(total: int, workers: int) -> list[tuple[int, int]]:
    step = -(-total // workers)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _per_slope_max_nums(p: int, workers: int = 1) -> np.ndarray:
    if workers <= 1:
        return kernels.per_slope_max(p)
    args = [(p, lo, hi) for lo, hi in _chunk_ranges(1 << p, workers)]
    with Pool(workers) as pool:
        parts = pool.map(_slope_chunk, args)
    return np.concatenate(parts)


def per_slope_profile(p: int, with_argmax: bool = False,
                      workers: int = 1) -> ErrorProfile:
    """Peak |E| for every slope; an exhaustive O(4**p) scan."""
    _check_exponent(p)
    _check_scan_cap(p)
    m = (1 << p) - 1
    nums = _per_slope_max_nums(p, workers)
    values = tuple(ExactRational(int(v), m) for v in nums)
    arg = None
    if with_argmax:
        arg = tuple(max_error_for_slope(p, t).argmax for t in range(1 << p))
    return ErrorProfile(p, values, arg)


@dataclass(frozen=True)
class GlobalMaxError:
    value: ExactRational
    attaining: frozenset[tuple[int, int]]  # (abscissa, slope) pairs


def global_max_error(p: int, workers: int = 1) -> GlobalMaxError:
    """Peak |E| over all (x, t) with the complete attaining set."""
    _check_exponent(p)
    _check_scan_cap(p)
    m = (1 << p) - 1
    per_slope = _per_slope_max_nums(p, workers)
    peak = int(per_slope.max())
    pairs = set()
    for t in np.nonzero(per_slope == peak)[0]:
        nums = slope_error_numerators(p, int(t))
        for x in np.nonzero(np.abs(nums) == peak)[0]:
            pairs.add((int(x), int(t)))
    return GlobalMaxError(ExactRational(peak, m), frozenset(pairs))


def symmetry_residual(p: int, t: int, y: int) -> ExactRational:
    """E(2**(p-1) - 1 - y, t) + E(2**(p-1) + y, t); identically zero."""
    _check_exponent(p)
    _check_coord(p, t, "slope t")
    if not 0 <= y <= (1 << (p - 1)) - 1:
        raise ValueError(f"offset y must be in [0, {(1 << (p - 1)) - 1}], got {y}")
    half = 1 << (p - 1)
    num = error_numerator(p, t, half - 1 - y) + error_numerator(p, t, half + y)
    return ExactRational(num, (1 << p) - 1)


def interchange_residual(p: int, t: int, x: int) -> ExactRational:
    """E(x, t) - E(t, x); identically zero."""
    num = error_numerator(p, t, x) - error_numerator(p, x, t)
    return ExactRational(num, (1 << p) - 1)


@dataclass(frozen=True)
class ErrorHistogram:
    """Exact-binned distribution of all 4**p error values.

    Bins are uniform on [-p/2, p/2]; edges are exact rationals and values
    are assigned by integer comparison.  A value landing exactly on an
    interior edge goes to the bin away from zero, so with an odd bin count
    (zero at a bin center) the counts mirror exactly under reversal.
    """

    p: int
    bin_edges: tuple[Fraction, ...]  # bin_count + 1 exact edges
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return 1 << (2 * self.p)


def _hist_chunk(args: tuple[int, int, int, int]) -> np.ndarray:
    p, lo, hi, bins = args
    return kernels.hist_counts_range(p, lo, hi, bins)


def error_histogram(p: int, bin_count: int, workers: int = 1) -> ErrorHistogram:
    _check_exponent(p)
    _check_scan_cap(p)
    if bin_count < 2:
        raise ValueError(f"bin_count must be >= 2, got {bin_count}")
    if workers <= 1:
        counts = kernels.hist_counts(p, bin_count)
    else:
        args = [(p, lo, hi, bin_count)
                for lo, hi in _chunk_ranges(1 << p, workers)]
        with Pool(workers) as pool:
            counts = sum(pool.map(_hist_chunk, args))
    edges = tuple(Fraction(p * (2 * i - bin_count), 2 * bin_count)
                  for i in range(bin_count + 1))
    return ErrorHistogram(p, edges, tuple(int(c) for c in counts))
