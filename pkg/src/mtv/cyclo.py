"""Cyclotomic field arithmetic over the rationals.

Elements of Q(zeta_N) are stored as rational coordinate vectors in the
power basis 1, zeta, ..., zeta^(phi(N)-1), i.e. as polynomials in zeta_N
reduced modulo the N-th cyclotomic polynomial Phi_N.  Reducing modulo
Phi_N (rather than x^N - 1) makes rationality decidable by inspection:
an element is rational iff every coordinate past the constant one is zero.

Phi_N itself is built by the classical recursion: divide x^N - 1 by the
product of Phi_d over the proper divisors d of N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class RationalPoly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of x^i.  The zero polynomial is the
    empty tuple; otherwise the leading coefficient is nonzero.
    """

    coeffs: Tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(cs: Sequence[Union[int, Fraction]]) -> "RationalPoly":
        cs = [Fraction(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RationalPoly(tuple(cs))

    @staticmethod
    def monomial(deg: int, c: Union[int, Fraction] = 1) -> "RationalPoly":
        c = Fraction(c)
        if c == 0:
            return RationalPoly(())
        return RationalPoly((_ZERO,) * deg + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [_ZERO] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return RationalPoly.from_coeffs(out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        if self.is_zero or other.is_zero:
            return RationalPoly(())
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return RationalPoly.from_coeffs(out)

    def divmod(self, divisor: "RationalPoly") -> Tuple["RationalPoly", "RationalPoly"]:
        """Euclidean division; the divisor must be nonzero."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [_ZERO] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            quot[i - dd] = f
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= f * b
        return RationalPoly.from_coeffs(quot), RationalPoly.from_coeffs(rem)


def _x_pow_minus_one(n: int) -> RationalPoly:
    return RationalPoly((-_ONE,) + (_ZERO,) * (n - 1) + (_ONE,))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> RationalPoly:
    """The monic N-th cyclotomic polynomial Phi_N, exact integer coefficients."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    if n == 1:
        return RationalPoly((-_ONE, _ONE))
    poly = _x_pow_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly.divmod(cyclotomic_polynomial(d))
            assert rem.is_zero, f"Phi_{d} does not divide x^{n}-1"
    return poly


@lru_cache(maxsize=None)
def _phi_degree(n: int) -> int:
    return cyclotomic_polynomial(n).degree


def _reduce_mod_phi(n: int, dense: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = phi.degree
    rem = list(dense)
    lead_inv = 1  # Phi_N is monic
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = c * lead_inv
        for j, b in enumerate(phi.coeffs):
            rem[i - deg + j] -= c * b
    rem = rem[:deg]
    rem.extend([_ZERO] * (deg - len(rem)))
    return tuple(rem)


@dataclass(frozen=True)
class CycloElem:
    """Element of Q(zeta_order) modulo Phi_order."""

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        deg = _phi_degree(self.order)
        if len(self.coeffs) != deg:
            raise ValueError(
                f"coefficient vector of length {len(self.coeffs)}, expected phi({self.order}) = {deg}"
            )

    @staticmethod
    def zero(order: int) -> "CycloElem":
        return CycloElem(order, (_ZERO,) * _phi_degree(order))

    @staticmethod
    def from_rational(order: int, q: Union[int, Fraction]) -> "CycloElem":
        deg = _phi_degree(order)
        return CycloElem(order, (Fraction(q),) + (_ZERO,) * (deg - 1))

    @staticmethod
    def root_power(order: int, e: int) -> "CycloElem":
        """zeta_order**e, reduced."""
        e %= order
        dense = [_ZERO] * (e + 1)
        dense[e] = _ONE
        return CycloElem(order, _reduce_mod_phi(order, dense))

    def _check_order(self, other: "CycloElem"):
        if self.order != other.order:
            raise ValueError(f"mixed cyclotomic orders {self.order} and {other.order}")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "CycloElem") -> "CycloElem":
        self._check_order(other)
        return CycloElem(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        return self + (-other)

    def __mul__(self, other: Union["CycloElem", int, Fraction]) -> "CycloElem":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElem(self.order, tuple(c * q for c in self.coeffs))
        self._check_order(other)
        dense = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    dense[i + j] += a * b
        return CycloElem(self.order, _reduce_mod_phi(self.order, dense))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycloElem":
        return cyclo_pow(self, e)

    def conj(self) -> "CycloElem":
        """Complex conjugation, i.e. the automorphism zeta -> zeta**(order-1)."""
        dense = [_ZERO] * self.order
        for i, c in enumerate(self.coeffs):
            if c != 0:
                dense[(self.order - i) % self.order] += c
        return CycloElem(self.order, _reduce_mod_phi(self.order, dense))

    def as_rational(self) -> Optional[Fraction]:
        """The element as a Fraction, or None if it is not rational."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]


def cyclo_pow(z: CycloElem, e: int) -> CycloElem:
    """z**e by square-and-multiply, reducing mod Phi after each product."""
    if e < 0:
        raise ValueError("negative exponents are not supported")
    acc = CycloElem.from_rational(z.order, 1)
    base = z
    while e:
        if e & 1:
            acc = acc * base
        e >>= 1
        if e:
            base = base * base
    return acc


def cyclo_real_rational(z: CycloElem) -> Tuple[CycloElem, Optional[Fraction]]:
    """Real part of z, plus its value as a rational when it is one.

    Returns ``(re, q)`` where ``re = (z + conj(z)) / 2`` and ``q`` is
    ``re.as_rational()``.  ``q`` being None is a legitimate outcome (the
    real part may be a nonrational real algebraic number).
    """
    re = (z + z.conj()) * Fraction(1, 2)
    return re, re.as_rational()
