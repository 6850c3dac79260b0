"""Dyadic line patterns: the discrete lines the fast Hough transform sums over.

A pattern with slope ``t`` on a grid of side ``n = 2**p`` is a column-indexed
sequence of ordinates rising monotonically from ``s`` at column 0 to
``s + t`` at column ``n - 1``.  Three equivalent constructions are provided:

* :func:`pattern_recursive` -- divide-and-conquer halving.  A span of width
  ``w`` with slope ``t`` splits into two spans of width ``w/2`` and slope
  ``t // 2``; the right half is lifted by ``ceil(t / 2)``.
* :func:`pattern_sum` -- per-column sum of one *basis* line per set bit of
  the slope, where the basis line of rank ``r`` is
  ``y(x) = nearest_int(2**r * x / (2**p - 1))``.
* :func:`cumulative_build` -- running count of the pattern's step columns
  ("shift pixels"), which :func:`shift_set` produces in closed form.

All three agree for every slope; the equivalence is exercised exhaustively
in the test suite and by the ``verify`` CLI command.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

# Keeps 2**r * x inside 64-bit intermediates; large enough for any practical
# accumulator (a 2**30-pixel image side is ~1 TiB of pixels).
MAX_EXPONENT = 30


def round_half_up(num: int, den: int) -> int:
    """floor(num/den + 1/2) for den > 0, evaluated in exact integers.

    The basis-line formula never lands on a half-integer (its denominator
    2**p - 1 is odd), so round-half-up versus round-half-down is
    observationally irrelevant there; this fixed choice keeps every
    construction deterministic.
    """
    return (2 * num + den) // (2 * den)


def _check_exponent(p: int) -> None:
    if not 1 <= p <= MAX_EXPONENT:
        raise ValueError(f"exponent p must be in [1, {MAX_EXPONENT}], got {p}")


@dataclass(frozen=True)
class PatternParams:
    """Grid exponent, slope and intercept of a dyadic pattern.

    ``p`` fixes the image side ``n = 2**p``; the slope ``t`` is the total
    rise in pixels over the full width and must fit in ``[0, n - 1]``; the
    intercept ``s`` is the ordinate of the leftmost pixel.
    """

    p: int
    t: int
    s: int = 0

    def __post_init__(self):
        _check_exponent(self.p)
        if not 0 <= self.t <= (1 << self.p) - 1:
            raise ValueError(
                f"slope t must be in [0, {(1 << self.p) - 1}], got {self.t}")
        if self.s < 0:
            raise ValueError(f"intercept s must be >= 0, got {self.s}")

    @property
    def n(self) -> int:
        return 1 << self.p


@dataclass(frozen=True)
class DyadicPattern:
    """A constructed pattern: parameters plus the per-column ordinates.

    The constructor checks the cheap structural invariants: one ordinate per
    column, monotone non-decreasing, starting at ``s`` with total rise
    ``t``.  Unit steps (consecutive differences in {0, 1}) hold for all
    canonical constructions and are asserted by the property tests rather
    than here, so that :func:`cumulative_build` stays total for arbitrary
    shift multisets.
    """

    params: PatternParams
    ordinates: tuple[int, ...]

    def __post_init__(self):
        n = self.params.n
        ys = self.ordinates
        if len(ys) != n:
            raise ValueError(f"expected {n} ordinates, got {len(ys)}")
        if ys[0] != self.params.s:
            raise ValueError("pattern must start at its intercept")
        if ys[-1] - ys[0] != self.params.t:
            raise ValueError("total rise must equal the slope")
        if any(b < a for a, b in zip(ys, ys[1:])):
            raise ValueError("ordinates must be non-decreasing")

    @property
    def p(self) -> int:
        return self.params.p

    def y(self, x: int) -> int:
        return self.ordinates[x]


@dataclass(frozen=True)
class ShiftSet:
    """Columns at which a pattern steps up by one pixel."""

    p: int
    abscissas: tuple[int, ...] = field(default=())

    def __post_init__(self):
        _check_exponent(self.p)
        hi = (1 << self.p) - 2
        for a in self.abscissas:
            if not 0 <= a <= hi:
                raise ValueError(f"shift abscissa {a} outside [0, {hi}]")
        if any(b <= a for a, b in zip(self.abscissas, self.abscissas[1:])):
            raise ValueError("shift abscissas must be strictly increasing")


def basis_line(p: int, r: int) -> DyadicPattern:
    """The pattern of slope ``2**r`` given by nearest-integer rounding.

    ``y(x) = nearest_int(2**r * x / (2**p - 1))``; ties cannot occur because
    the denominator is odd.
    """
    _check_exponent(p)
    if not 0 <= r < p:
        raise ValueError(f"bit index r must be in [0, {p - 1}], got {r}")
    m = (1 << p) - 1
    ys = tuple(round_half_up((x << r), m) for x in range(m + 1))
    return DyadicPattern(PatternParams(p, 1 << r, 0), ys)


def pattern_recursive(params: PatternParams) -> DyadicPattern:
    """Build a pattern by recursive halving.

    A span of width ``w`` and slope ``t`` at base offset ``b`` becomes a
    left span ``(w/2, t // 2, b)`` and a right span
    ``(w/2, t // 2, b + ceil(t/2))``; a width-1 span emits one pixel at its
    base.  Stopping at width 1 (rather than at slope 1) needs no special
    case for slope-0 sub-spans and produces the same ordinates, which the
    equivalence tests confirm.
    """
    ys: list[int] = []

    def build(width: int, t: int, base: int) -> None:
        if width == 1:
            ys.append(base)
            return
        half = width >> 1
        build(half, t >> 1, base)
        build(half, t >> 1, base + ((t + 1) >> 1))

    build(params.n, params.t, params.s)
    return DyadicPattern(params, tuple(ys))


def pattern_sum(params: PatternParams) -> DyadicPattern:
    """Build a pattern as the bitwise-weighted sum of basis lines."""
    total = [params.s] * params.n
    for r in range(params.p):
        if params.t >> r & 1:
            for x, y in enumerate(basis_line(params.p, r).ordinates):
                total[x] += y
    return DyadicPattern(params, tuple(total))


def shift_set(p: int, r: int) -> ShiftSet:
    """Closed-form step columns of the basis line of rank ``r``.

    The basis line of slope ``2**r`` steps exactly at
    ``floor((m + 1/2) * (2**p - 1) / 2**r)`` for ``m = 0 .. 2**r - 1``.
    """
    _check_exponent(p)
    if not 0 <= r < p:
        raise ValueError(f"bit index r must be in [0, {p - 1}], got {r}")
    big = (1 << p) - 1
    abscissas = tuple(((2 * m + 1) * big) >> (r + 1) for m in range(1 << r))
    return ShiftSet(p, abscissas)


def cumulative_build(p: int, shifts: Iterable[int], s: int = 0) -> DyadicPattern:
    """Build a pattern from a multiset of step columns.

    ``y(x) = s + #{entries < x}`` counting multiplicity, so repeated
    abscissas each add one unit of rise.  The slope of the result is the
    number of entries.
    """
    _check_exponent(p)
    n = 1 << p
    steps = [0] * n
    count = 0
    for a in shifts:
        if not 0 <= a <= n - 2:
            raise ValueError(f"shift abscissa {a} outside [0, {n - 2}]")
        steps[a + 1] += 1
        count += 1
    ys = []
    y = s
    for x in range(n):
        y += steps[x]
        ys.append(y)
    return DyadicPattern(PatternParams(p, count, s), tuple(ys))


def patterns_equal(a: DyadicPattern, b: DyadicPattern) -> bool:
    """True iff both patterns have identical ordinate sequences."""
    if a.p != b.p:
        raise ValueError(f"cannot compare patterns with p={a.p} and p={b.p}")
    return a.ordinates == b.ordinates
