"""Ring-spin reformulation of the cyclic-table functional.

Bits become spins via ``spin = 2*bit - 1``.  On a ring of p sites with the
long-range pair weight ``2**(-d)`` over the forward cyclic distance
``d(i, j) = (j - i) mod p``, the word functional

    F(x) = sum over ordered pairs i != j of (1 - bit_i) * bit_j * 2**(-d(i,j))

is an affine image (with negative slope) of the spin quadratic form

    Q(spins) = sum over ordered pairs i != j of spin_i spin_j * 2**(-d(i,j)),

so maximizing F over words is the same problem as minimizing Q -- i.e.
finding the ground states of a ring antiferromagnet whose symmetric pair
potential is ``2**(-d(i,j)) + 2**(-d(j,i))``.  The affine identity

    F = (p * (1 - 2**(1-p)) - Q) / 4

holds exactly because the per-site weight sum is the same constant at every
site of the ring; :func:`affine_bridge_residual` evaluates it in exact
integers.  Everything here uses rationals over the fixed denominator
``2**(p-1)`` (``2**(p+1)`` for the residual).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .patterns import _check_exponent
from .rational import ExactRational


@dataclass(frozen=True)
class SpinConfig:
    """p spins on a ring, each exactly -1 or +1."""

    p: int
    spins: tuple[int, ...]

    def __post_init__(self):
        if len(self.spins) != self.p:
            raise ValueError(f"expected {self.p} spins, got {len(self.spins)}")
        if any(s not in (-1, 1) for s in self.spins):
            raise ValueError("spins must be -1 or +1")

    def to_word(self) -> int:
        return sum(1 << i for i, s in enumerate(self.spins) if s == 1)


def spins_from_word(p: int, x: int) -> SpinConfig:
    """Map bit i of the word to the spin 2*bit - 1 at ring site i."""
    _check_exponent(p)
    if not 0 <= x <= (1 << p) - 1:
        raise ValueError(f"word must be in [0, {(1 << p) - 1}], got {x}")
    return SpinConfig(p, tuple(2 * (x >> i & 1) - 1 for i in range(p)))


def cyclic_distances(p: int, i: int, j: int) -> tuple[int, int]:
    """The two arc lengths between distinct ring sites: (|i-j|, p - |i-j|)."""
    if not (0 <= i < p and 0 <= j < p):
        raise ValueError(f"sites must be in [0, {p - 1}], got ({i}, {j})")
    if i == j:
        raise ValueError("sites must be distinct")
    a = abs(i - j)
    return a, p - a


@dataclass(frozen=True)
class PairPotential:
    """Symmetric long-range weight 2**(-d) + 2**(-(p-d)) over gap d."""

    p: int

    def value(self, i: int, j: int) -> ExactRational:
        a, b = cyclic_distances(self.p, i, j)
        return ExactRational((1 << (self.p - 1 - a)) + (1 << (self.p - 1 - b)),
                             1 << (self.p - 1))


def spin_quadratic(cfg: SpinConfig) -> ExactRational:
    """Q: the ordered-pair quadratic form over denominator 2**(p-1)."""
    p = cfg.p
    num = 0
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            num += cfg.spins[i] * cfg.spins[j] * (1 << (p - 1 - (j - i) % p))
    return ExactRational(num, 1 << (p - 1))


def pair_energy(cfg: SpinConfig) -> ExactRational:
    """Antiferromagnet energy: -sum over i<j of spin_i spin_j P(i, j)."""
    p = cfg.p
    pot = PairPotential(p)
    num = 0
    for i in range(p):
        for j in range(i + 1, p):
            num -= cfg.spins[i] * cfg.spins[j] * pot.value(i, j).num
    return ExactRational(num, 1 << (p - 1))


def table_functional(p: int, x: int) -> ExactRational:
    """F: the word functional over denominator 2**(p-1).

    Numerically its numerator coincides with the cyclic-table sum of
    :mod:`fasthough.maximizer` (the table sum is 2**(p-1) * F), which the
    tests check exhaustively.
    """
    _check_exponent(p)
    if not 0 <= x <= (1 << p) - 1:
        raise ValueError(f"word must be in [0, {(1 << p) - 1}], got {x}")
    num = 0
    for i in range(p):
        if x >> i & 1:
            continue
        for j in range(p):
            if i == j or not (x >> j & 1):
                continue
            num += 1 << (p - 1 - (j - i) % p)
    return ExactRational(num, 1 << (p - 1))


def affine_bridge_residual(p: int, x: int) -> ExactRational:
    """F(x) - (p*(1 - 2**(1-p)) - Q(spins(x))) / 4; identically zero."""
    f = table_functional(p, x)
    q = spin_quadratic(spins_from_word(p, x))
    const_num = p * ((1 << (p - 1)) - 1)  # p*(1 - 2**(1-p)) over 2**(p-1)
    num = 4 * f.num - (const_num - q.num)
    return ExactRational(num, 1 << (p + 1))


# -- vectorized whole-space scans ---------------------------------------------


def _bit_matrix(p: int) -> np.ndarray:
    n = 1 << p
    return ((np.arange(n, dtype=np.int64)[:, None] >> np.arange(p)[None, :]) & 1)


def functional_numerators(p: int) -> np.ndarray:
    """F numerators (over 2**(p-1)) for every word, by the double sum."""
    _check_exponent(p)
    bits = _bit_matrix(p)
    num = np.zeros(1 << p, dtype=np.int64)
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            num += (1 - bits[:, i]) * bits[:, j] * (1 << (p - 1 - (j - i) % p))
    return num


def quadratic_numerators(p: int) -> np.ndarray:
    """Q numerators (over 2**(p-1)) for every word, by the spin products."""
    _check_exponent(p)
    spins = 2 * _bit_matrix(p) - 1
    num = np.zeros(1 << p, dtype=np.int64)
    for gap in range(1, p):
        weight = 1 << (p - 1 - gap)
        ring = np.zeros(1 << p, dtype=np.int64)
        for i in range(p):
            ring += spins[:, i] * spins[:, (i + gap) % p]
        num += weight * ring
    return num


def functional_maximizers(p: int) -> frozenset[int]:
    nums = functional_numerators(p)
    return frozenset(int(i) for i in np.nonzero(nums == nums.max())[0])


def quadratic_minimizers(p: int) -> frozenset[int]:
    """Words whose spin image minimizes the quadratic form Q."""
    nums = quadratic_numerators(p)
    return frozenset(int(i) for i in np.nonzero(nums == nums.min())[0])
