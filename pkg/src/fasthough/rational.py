"""Exact rational values with a fixed, unreduced denominator.

The error analysis works with values of the form ``num / (2**p - 1)`` and
the spin-model code with ``num / 2**(p-1)``.  Keeping the denominator as
constructed (``fractions.Fraction`` would reduce ``10/15`` to ``2/3``)
makes numerators directly comparable across a scan and keeps CSV output in
the documented ``num,den`` form.  Equality and ordering compare the
represented value, so ``ExactRational(10, 15) == ExactRational(2, 3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ExactRational:
    """A signed integer numerator over a positive integer denominator."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError(f"denominator must be positive, got {self.den}")

    # conversions ---------------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __float__(self) -> float:
        return self.num / self.den

    def approx(self) -> str:
        """Decimal rendering at 12 significant digits (CSV convention)."""
        return f"{self.num / self.den:.12g}"

    def __repr__(self) -> str:
        return f"{self.num}/{self.den}"

    # exact value semantics -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "ExactRational | None":
        if isinstance(other, ExactRational):
            return other
        if isinstance(other, int):
            return ExactRational(other, 1)
        if isinstance(other, Fraction):
            return ExactRational(other.numerator, other.denominator)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den < o.num * self.den

    def __le__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den <= o.num * self.den

    def __gt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den > o.num * self.den

    def __ge__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den >= o.num * self.den

    # arithmetic (results keep the least common fixed denominator) ----------

    def __neg__(self) -> "ExactRational":
        return ExactRational(-self.num, self.den)

    def __abs__(self) -> "ExactRational":
        return ExactRational(abs(self.num), self.den)

    def __add__(self, other) -> "ExactRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ExactRational(self.num + o.num, self.den)
        return ExactRational(self.num * o.den + o.num * self.den,
                             self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "ExactRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "ExactRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "ExactRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__
