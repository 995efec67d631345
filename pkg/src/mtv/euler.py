"""Euler numbers E_0, E_2, E_4, ... under the secant sign convention.

The convention fixed here is  sec x = sum_{n>=0} (-1)^n E_{2n} x^{2n} / (2n)!,
so E_0 = 1, E_2 = -1, E_4 = 5, E_6 = -61 and generally (-1)^n E_{2n} > 0.
Multiplying that expansion by the cosine series and matching coefficients
of x^{2n} forces the integer recurrence

    sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0        (n >= 1),

which is what we compute with: exact, integer-only, and fast enough that
tables of a few hundred entries are instantaneous.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Tuple

# Grow-only table; values[n] holds E_{2n}.  Appending is idempotent, so
# concurrent growth under the GIL behaves as if computed exactly once.
_VALUES = [1]


@dataclass(frozen=True)
class EulerTable:
    """Euler numbers E_0..E_{2N}; ``values[n]`` is E_{2n}."""

    values: Tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def e(self, two_n: int) -> int:
        """E_{two_n} for an even index."""
        if two_n < 0 or two_n % 2:
            raise ValueError(f"Euler numbers are indexed by even integers, got {two_n}")
        return self.values[two_n // 2]


def euler_numbers(n_max: int) -> EulerTable:
    """Table of E_0..E_{2*n_max}."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    while len(_VALUES) <= n_max:
        n = len(_VALUES)
        acc = 0
        for k in range(n):
            acc += comb(2 * n, 2 * k) * _VALUES[k]
        _VALUES.append(-acc)
    return EulerTable(tuple(_VALUES[: n_max + 1]))


def euler_number(two_n: int) -> int:
    """E_{two_n} for an even index two_n >= 0."""
    if two_n < 0 or two_n % 2:
        raise ValueError(f"Euler numbers are indexed by even integers, got {two_n}")
    return euler_numbers(two_n // 2).values[two_n // 2]


def table_snapshot() -> Tuple[int, ...]:
    """Everything computed so far in this process (for the CLI cache)."""
    return tuple(_VALUES)
