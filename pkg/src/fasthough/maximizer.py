"""Peak-error search over cyclic-shift tables of binary words.

For a p-bit word ``x``, form the table of its p cyclic rotations and sum
the integer values of the rows whose leading bit is zero.  Maximizing this
table sum over all words locates the dyadic pattern of peak line-
approximation error: the maximum equals the peak error numerator over the
denominator ``2**p - 1`` (the bridge identity, exercised against
:mod:`fasthough.errors`).

The search optionally skips words that match one of five cyclic bit-pattern
families which provably cannot attain the maximum (three consecutive equal
bits; a ``1100`` factor; and three families of ``11``/``00`` blocks joined
by alternating runs).  Pruned and unpruned searches must agree; the
unpruned scan stays available as the safety net, and the predicates are
checked for soundness rather than relied upon.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool

from . import kernels
from .errors import CapExceededError
from .patterns import _check_exponent

UNPRUNED_CAP = 24

LABEL_BIT_TRIPLE = "bit-triple"
LABEL_1100 = "1100-factor"
LABEL_11_11_11 = "11-alt-11-alt-11"
LABEL_11_11_00 = "11-alt-11-alt-00"
LABEL_11_00_11 = "11-alt-00-alt-11"


def _check_word(p: int, x: int) -> None:
    if not 0 <= x <= (1 << p) - 1:
        raise ValueError(f"word must be in [0, {(1 << p) - 1}], got {x}")


def rotate_left(p: int, x: int, r: int = 1) -> int:
    """Cyclic left rotation of the p-bit word (equals x * 2**r mod 2**p - 1
    for words below the all-ones value, which is a fixed point)."""
    r %= p
    m = (1 << p) - 1
    return ((x << r) | (x >> (p - r))) & m if r else x


@dataclass(frozen=True)
class CyclicTable:
    """All p rotations of a word; row r is the word rotated left r times."""

    p: int
    rows: tuple[int, ...]

    @property
    def word(self) -> int:
        return self.rows[0]

    def row_bits(self, r: int) -> str:
        return format(self.rows[r], f"0{self.p}b")


def cyclic_table(p: int, x: int) -> CyclicTable:
    _check_exponent(p)
    _check_word(p, x)
    rows = []
    v = x
    for _ in range(p):
        rows.append(v)
        v = rotate_left(p, v)
    return CyclicTable(p, tuple(rows))


def table_sum(table: CyclicTable) -> int:
    """Sum of the table rows whose leading bit is zero."""
    half = 1 << (table.p - 1)
    return sum(row for row in table.rows if row < half)


def table_sum_word(p: int, x: int) -> int:
    """table_sum without materializing the table."""
    _check_exponent(p)
    _check_word(p, x)
    half = 1 << (p - 1)
    total = 0
    v = x
    for _ in range(p):
        if v < half:
            total += v
        v = rotate_left(p, v)
    return total


# -- pruning predicates ------------------------------------------------------


def _alternating(length: int, first: int) -> str:
    return "".join(str((first + i) % 2) for i in range(length))


@lru_cache(maxsize=64)
def _template_factors(p: int) -> tuple[tuple[str, str], ...]:
    """(label, factor) pairs for the five cyclic pattern families at width p.

    A factor string matches a word when it occurs in the word read as a
    ring, so templates longer than p bits are dropped.  The alternating
    runs are enumerated over all lengths that fit: runs written ``0...0``
    have odd length, runs ``0...1`` / ``1...0`` even length.
    """
    factors: list[tuple[str, str]] = []
    if p >= 3:
        factors.append((LABEL_BIT_TRIPLE, "000"))
        factors.append((LABEL_BIT_TRIPLE, "111"))
    if p >= 4:
        factors.append((LABEL_1100, "1100"))
    # 11 <odd alt 0..0> 11 <odd alt 0..0> 11
    for l in range(1, p, 2):
        for mm in range(1, p - l - 5, 2):
            factors.append((LABEL_11_11_11,
                            "11" + _alternating(l, 0) + "11" + _alternating(mm, 0) + "11"))
    # 11 <odd alt 0..0> 11 <even alt 0..1> 00
    for mm in range(1, p, 2):
        for nn in range(2, p - mm - 5, 2):
            factors.append((LABEL_11_11_00,
                            "11" + _alternating(mm, 0) + "11" + _alternating(nn, 0) + "00"))
    # 11 <even alt 0..1> 00 <even alt 1..0> 11, second run longer than one pair
    for mm in range(2, p, 2):
        for k in range(0, p - 2 * mm - 5, 2):
            factors.append((LABEL_11_00_11,
                            "11" + _alternating(mm + k, 0) + "00" + _alternating(mm, 1) + "11"))
    return tuple(factors)


def prune_predicates(p: int, x: int) -> frozenset[str]:
    """Labels of the non-maximizer pattern families x's rotation class matches.

    Matching is cyclic (the word is a ring) because the table sum is
    invariant under rotation; an empty result means x survives pruning.
    """
    _check_exponent(p)
    _check_word(p, x)
    word = format(x, f"0{p}b")
    doubled = word + word
    hits = set()
    for label, factor in _template_factors(p):
        if label in hits:
            continue
        pos = doubled.find(factor)
        if 0 <= pos < p:
            hits.add(label)
    return frozenset(hits)


# -- search ------------------------------------------------------------------


@dataclass(frozen=True)
class MaximizerReport:
    p: int
    max_sum: int
    argmax_xs: frozenset[int]
    pruned_count: int


def _scan_plain(p: int, lo: int, hi: int) -> tuple[int, list[int], int]:
    sums = kernels.table_sums_range(p, lo, hi)
    best = int(sums.max())
    args = [lo + int(i) for i in (sums == best).nonzero()[0]]
    return best, args, 0


def _scan_pruned(p: int, lo: int, hi: int) -> tuple[int, list[int], int]:
    best = -1
    args: list[int] = []
    pruned = 0
    for x in range(lo, hi):
        if prune_predicates(p, x):
            pruned += 1
            continue
        s = table_sum_word(p, x)
        if s > best:
            best, args = s, [x]
        elif s == best:
            args.append(x)
    return best, args, pruned


def _scan_chunk(args: tuple[int, int, int, bool]) -> tuple[int, list[int], int]:
    p, lo, hi, pruning = args
    return (_scan_pruned if pruning else _scan_plain)(p, lo, hi)


def search_maximizers(p: int, use_pruning: bool = True,
                      workers: int = 1) -> MaximizerReport:
    """Exhaustive search for the words maximizing the table sum.

    With pruning, candidates matching any non-maximizer family are skipped
    before their table is evaluated and tallied in ``pruned_count``; the
    reported maximum and attaining set are identical either way.
    """
    _check_exponent(p)
    if p < 2:
        raise ValueError("search requires p >= 2")
    if not use_pruning and p > UNPRUNED_CAP:
        raise CapExceededError(
            f"unpruned search at p={p} exceeds the cap {UNPRUNED_CAP}")
    n = 1 << p
    if workers <= 1:
        parts = [_scan_chunk((p, 0, n, use_pruning))]
    else:
        step = -(-n // workers)
        chunk_args = [(p, lo, min(lo + step, n), use_pruning)
                      for lo in range(0, n, step)]
        with Pool(workers) as pool:
            parts = pool.map(_scan_chunk, chunk_args)
    best = max(part[0] for part in parts)
    args = frozenset(x for part in parts if part[0] == best for x in part[1])
    pruned = sum(part[2] for part in parts)
    return MaximizerReport(p, best, args, pruned)


# -- structural identities of the table sum ----------------------------------


def reverse_bits(word: int, width: int) -> int:
    out = 0
    for _ in range(width):
        out = (out << 1) | (word & 1)
        word >>= 1
    return out


def reverse_complement(word: int, width: int) -> int:
    """Bitwise complement of the width-bit word written in reverse order."""
    if width == 0:
        return 0
    return ((1 << width) - 1) ^ reverse_bits(word, width)


@dataclass(frozen=True)
class IdentityResiduals:
    substitution: int  # leading-bit substitution identity
    transposition: int  # leading-pair swap identity


def table_identity_residuals(p: int, x: int) -> IdentityResiduals:
    """Residuals of the two closed-form effects of editing a word's head.

    Writing ``a`` for the trailing ``p-1`` bits of x and ``b`` for the
    trailing ``p-2`` bits:

    * substitution: ``S(0a) - S(1a)`` minus ``a - reverse_complement(a)``;
    * transposition: ``S(01b) - S(10b)`` minus
      ``ones(p-2) - b - reverse_complement(b)``.

    Both residuals are identically zero; only the trailing bits of x
    matter, the leading one or two bits are overwritten by the identity
    being checked.
    """
    _check_exponent(p)
    if p < 2:
        raise ValueError("identity residuals require p >= 2")
    _check_word(p, x)

    a = x & ((1 << (p - 1)) - 1)
    s_zero = table_sum_word(p, a)
    s_one = table_sum_word(p, a | (1 << (p - 1)))
    substitution = (s_zero - s_one) - (a - reverse_complement(a, p - 1))

    b = x & ((1 << (p - 2)) - 1) if p > 2 else 0
    s_01 = table_sum_word(p, (0b01 << (p - 2)) | b)
    s_10 = table_sum_word(p, (0b10 << (p - 2)) | b)
    ones = (1 << (p - 2)) - 1
    transposition = (s_01 - s_10) - (ones - b - reverse_complement(b, p - 2))

    return IdentityResiduals(substitution, transposition)
