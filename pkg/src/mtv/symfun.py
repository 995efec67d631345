"""Symmetric-function oracle for equal-argument string values.

Over the alphabet x_j = (2j-1)^(-a) (j = 1, 2, ...; a even so everything
converges and is a rational multiple of a pi power):

    t({a}^n)  = e_n(x)   -- elementary symmetric function,
    t*({a}^n) = h_n(x)   -- complete homogeneous symmetric function,
    t(a*k)    = p_k(x)   -- power sum.

The only evaluation fed in from outside is the weight-2 string
t({2}^n) = pi^{2n} / (4^n (2n)!).  Newton's identities then produce the
power sums p_k = t(2k), and from those the e_n / h_n for every even
argument a (the alphabet for argument a has power sums p'_k = p_{(a/2)k}).
Because nothing else is assumed, these values are an independent check of
every other evaluation formula in the package.

Newton's identities used (exact rational arithmetic throughout):

    n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i
    n h_n = sum_{i=1}^{n}            h_{n-i} p_i
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from .errors import DomainError, UnsupportedExactError
from .exact import PiValue

# Grow-only: _PSUMS[k-1] is the coefficient of p_k (a value of weight 2k).
_PSUMS: list[Fraction] = []


def _e2_coef(n: int) -> Fraction:
    # coefficient of t({2}^n), the seed evaluation
    return Fraction(1, 4**n * factorial(2 * n))


@dataclass(frozen=True)
class PowerSumTable:
    """p_1..p_kmax as PiValues; ``entries[k-1]`` is p_k = t(2k), weight 2k."""

    entries: Tuple[PiValue, ...]

    def p(self, k: int) -> PiValue:
        if not 1 <= k <= len(self.entries):
            raise DomainError(f"power sum index {k} outside computed range 1..{len(self.entries)}")
        return self.entries[k - 1]


def _power_sum_coefs(kmax: int) -> list[Fraction]:
    while len(_PSUMS) < kmax:
        n = len(_PSUMS) + 1
        # invert n*e_n = sum_{i=1}^{n} (-1)^(i-1) e_{n-i} p_i  for p_n
        acc = n * _e2_coef(n)
        for i in range(1, n):
            sign = 1 if (i - 1) % 2 == 0 else -1
            acc -= sign * _e2_coef(n - i) * _PSUMS[i - 1]
        p_n = acc if (n - 1) % 2 == 0 else -acc
        _PSUMS.append(p_n)
    return _PSUMS[:kmax]


def power_sums(kmax: int) -> PowerSumTable:
    """Power sums p_k = sum_j (2j-1)^(-2k) for k = 1..kmax."""
    if kmax < 1:
        raise DomainError(f"kmax must be >= 1, got {kmax}")
    coefs = _power_sum_coefs(kmax)
    return PowerSumTable(tuple(PiValue(c, 2 * k) for k, c in enumerate(coefs, start=1)))


def _require_even_arg(a: int):
    if a < 2 or a % 2:
        raise UnsupportedExactError(
            f"no exact route for argument {a}: only even arguments >= 2 have closed forms"
        )


@lru_cache(maxsize=None)
def _string_coefs(a: int, nmax: int, star: bool) -> Tuple[Fraction, ...]:
    # e_n (or h_n) coefficients over the argument-a alphabet, indices 0..nmax
    half = a // 2
    ps = _power_sum_coefs(half * nmax) if nmax else []
    out = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            term = out[n - i] * ps[half * i - 1]
            if not star and (i - 1) % 2:
                term = -term
            acc += term
        out.append(acc / n)
    return tuple(out)


def t_string_oracle(a: int, n: int) -> PiValue:
    """t({a}^n) for even a, as the n-th elementary symmetric function."""
    _require_even_arg(a)
    if n < 0:
        raise DomainError(f"string length must be >= 0, got {n}")
    if n == 0:
        return PiValue.one()  # empty-string convention
    return PiValue(_string_coefs(a, n, False)[n], a * n)


def tstar_string_oracle(a: int, n: int) -> PiValue:
    """t*({a}^n) for even a, as the n-th complete homogeneous symmetric function."""
    _require_even_arg(a)
    if n < 0:
        raise DomainError(f"string length must be >= 0, got {n}")
    if n == 0:
        return PiValue.one()
    return PiValue(_string_coefs(a, n, True)[n], a * n)


def power_sum_snapshot() -> Tuple[Fraction, ...]:
    """Power-sum coefficients computed so far in this process (for the CLI cache)."""
    return tuple(_PSUMS)
