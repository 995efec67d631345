"""Exact values of the form q * pi^w.

Every closed form produced by this package is a rational multiple of an
integer power of pi.  ``PiValue`` keeps that shape explicit: a normalized
``fractions.Fraction`` coefficient plus a nonnegative integer exponent of
pi (the "weight").  Values are homogeneous: adding two values of different
weight is a caller bug and raises :class:`~mtv.errors.HomogeneityError`
instead of silently promoting to a polynomial in pi.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import HomogeneityError

#: Rational scalars accepted wherever a coefficient is expected.
RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class PiValue:
    """A value ``coef * pi**weight`` with an exact rational coefficient."""

    coef: Fraction
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "coef", Fraction(self.coef))
        if not isinstance(self.weight, int) or self.weight < 0:
            raise ValueError(f"pi-weight must be a nonnegative integer, got {self.weight!r}")

    @staticmethod
    def zero(weight: int = 0) -> "PiValue":
        return PiValue(Fraction(0), weight)

    @staticmethod
    def one() -> "PiValue":
        return PiValue(Fraction(1), 0)

    @property
    def is_zero(self) -> bool:
        return self.coef == 0

    def __add__(self, other: "PiValue") -> "PiValue":
        if not isinstance(other, PiValue):
            return NotImplemented
        if self.weight != other.weight:
            raise HomogeneityError(
                f"cannot add pi^{self.weight} value to pi^{other.weight} value"
            )
        return PiValue(self.coef + other.coef, self.weight)

    def __neg__(self) -> "PiValue":
        return PiValue(-self.coef, self.weight)

    def __sub__(self, other: "PiValue") -> "PiValue":
        if not isinstance(other, PiValue):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["PiValue", RationalLike]) -> "PiValue":
        if isinstance(other, PiValue):
            return PiValue(self.coef * other.coef, self.weight + other.weight)
        if isinstance(other, (int, Fraction)):
            return PiValue(self.coef * other, self.weight)
        return NotImplemented

    __rmul__ = __mul__

    def scaled(self, q: RationalLike) -> "PiValue":
        return PiValue(self.coef * Fraction(q), self.weight)

    def __str__(self) -> str:
        return format_pi_value(self)


def pi_add(a: PiValue, b: PiValue) -> PiValue:
    """Exact sum of two values of equal pi-weight."""
    return a + b


_PI_VALUE_RE = re.compile(r"^(-?\d+)(?:/(\d+))?(?: \* pi\^(\d+))?$")


def format_pi_value(v: PiValue) -> str:
    """Render ``v`` as ``<sign><num>/<den> * pi^<w>``.

    A denominator of 1 and a weight of 0 are elided, so ``pi^2/8`` prints
    as ``1/8 * pi^2`` and the empty product prints as ``1``.  The output
    round-trips through :func:`parse_pi_value`.
    """
    q = v.coef
    rat = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if v.weight == 0:
        return rat
    return f"{rat} * pi^{v.weight}"


def format_rational(q: Fraction) -> str:
    """The coefficient part of the grammar, without the pi factor."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_pi_value(text: str) -> PiValue:
    """Inverse of :func:`format_pi_value`."""
    m = _PI_VALUE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a pi-value literal: {text!r}")
    num, den, w = m.groups()
    try:
        coef = Fraction(int(num), int(den) if den else 1)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return PiValue(coef, int(w) if w else 0)
