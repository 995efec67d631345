"""Exact evaluation formulas for even-argument strings and sums.

Notation used throughout this module (and the docstrings below):

* ``t({a}^n)``  -- the depth-n nested sum over strictly increasing odd
  denominators, all exponents equal to ``a``;
* ``t*({a}^n)`` -- the same with non-strict inequalities;
* ``T(m*n, k)`` / ``T*(m*n, k)`` -- the sum of ``t`` (resp. ``t*``) over
  all compositions of n into k parts, each part scaled by m.

All functions here return exact :class:`~mtv.exact.PiValue` results.  The
even-argument string evaluations go through cyclotomic arithmetic: they
sum powers of small root-of-unity combinations which collapse to rational
numbers.  That collapse is asserted at runtime; a nonrational remainder
means the formula was transcribed wrongly and raises ConsistencyError.

Sign conventions are pinned by depth-1 anchor values which every formula
must reproduce:

    t(2) = pi^2/8,  t(4) = pi^4/96,  t(6) = pi^6/960,
    t(8) = 17 pi^8/161280,  t*(a) = t(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian_product
from math import comb, factorial
from typing import Callable, Dict, Iterator, Optional, Tuple

from .cyclo import CycloElem, cyclo_pow, cyclo_real_rational
from .errors import ConsistencyError, DomainError, UnsupportedExactError
from .euler import euler_numbers
from .exact import PiValue

#: A choice of +1/-1 for each of the m-1 free slots in the cosine splitting.
SignVector = Tuple[int, ...]


def sign_vectors(length: int, parity: Optional[int] = None) -> Iterator[SignVector]:
    """All +-1 vectors of the given length, optionally filtered by the
    parity of the number of -1 entries (parity=0 keeps the even ones)."""
    for eps in cartesian_product((1, -1), repeat=length):
        if parity is None or eps.count(-1) % 2 == parity:
            yield eps


@dataclass(frozen=True)
class SumValue:
    """An exact composition-sum value T(m*n, k) or T*(m*n, k)."""

    kind: str  # "T" or "Tstar"
    m: int
    n: int
    k: int
    value: PiValue

    def __post_init__(self):
        if self.kind not in ("T", "Tstar"):
            raise ValueError(f"kind must be 'T' or 'Tstar', got {self.kind!r}")
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.value.weight != self.m * self.n:
            raise ValueError(
                f"weight {self.value.weight} does not match m*n = {self.m * self.n}"
            )


def _check_range(n: int, k: int):
    if k < 1 or k > n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")


def t2_string(n: int) -> PiValue:
    """t({2}^n) = pi^(2n) / (4^n (2n)!)."""
    if n < 0:
        raise DomainError(f"string length must be >= 0, got {n}")
    return PiValue(Fraction(1, 4**n * factorial(2 * n)), 2 * n)


def tstar2_string(n: int) -> PiValue:
    """t*({2}^n) = (-1)^n E_{2n} pi^(2n) / (4^n (2n)!)."""
    if n < 0:
        raise DomainError(f"string length must be >= 0, got {n}")
    e2n = euler_numbers(n).values[n]
    coef = Fraction((-1) ** n * e2n, 4**n * factorial(2 * n))
    return PiValue(coef, 2 * n)


def sum_even(n: int, k: int, star: bool = False, variant: str = "theorem") -> SumValue:
    """Weight-2n sums T(2n,k) / T*(2n,k) as Euler-number combinations.

    Two published shapes of the non-star sum are implemented and must
    agree:

    * ``variant="theorem"``:
        T(2n,k)  = (-1)^(n-k) pi^(2n)/(4^n (2n)!) *
                   sum_{p=k}^{n} C(2n,2p) C(p,k) E_{2n-2p}
        T*(2n,k) = (-1)^n pi^(2n)/(4^n (2n)!) *
                   sum_{q=k}^{n} C(2n,2q) C(q,k) E_{2q}
    * ``variant="zhao"`` (non-star only):
        T(2n,k)  = (-1)^(n-k) pi^(2n)/(4^n (2n)!) *
                   sum_{l=0}^{n-k} C(n-l,k) C(2n,2l) E_{2l}
    """
    _check_range(n, k)
    if variant not in ("theorem", "zhao"):
        raise DomainError(f"unknown variant {variant!r}")
    if star and variant == "zhao":
        raise UnsupportedExactError("the zhao-form sum is defined for the non-star kind only")
    ev = euler_numbers(n).values
    if star:
        s = sum(comb(2 * n, 2 * q) * comb(q, k) * ev[q] for q in range(k, n + 1))
        coef = Fraction((-1) ** n * s, 4**n * factorial(2 * n))
    elif variant == "theorem":
        s = sum(comb(2 * n, 2 * p) * comb(p, k) * ev[n - p] for p in range(k, n + 1))
        coef = Fraction((-1) ** (n - k) * s, 4**n * factorial(2 * n))
    else:
        s = sum(comb(n - l, k) * comb(2 * n, 2 * l) * ev[l] for l in range(0, n - k + 1))
        coef = Fraction((-1) ** (n - k) * s, 4**n * factorial(2 * n))
    return SumValue("Tstar" if star else "T", 2, n, k, PiValue(coef, 2 * n))


def _euler_pair_sum(p: int) -> int:
    # sum over even splits l1 + l2 = 2p of (-1)^l1 C(4p, 2*l1) E_{2*l1} E_{2*l2}:
    # the x^(4p) coefficient of the product of the two secant-type series.
    # The split total is 2p, not p; the depth-1 anchors T(8,1) = 17 pi^8/161280
    # and T*(4,1) = pi^4/96 only come out with the even-split convention.
    ev = euler_numbers(2 * p).values
    return sum(
        (-1) ** l1 * comb(4 * p, 2 * l1) * ev[l1] * ev[2 * p - l1] for l1 in range(2 * p + 1)
    )


def sum_weight4(n: int, k: int, star: bool = False) -> SumValue:
    """Weight-4n sums T(4n,k) / T*(4n,k) via double Euler-number sums."""
    _check_range(n, k)
    if star:
        total = Fraction(0)
        for q in range(k, n + 1):
            total += (
                Fraction((-1) ** q, 4**q)
                * comb(q, k)
                * comb(4 * n, 4 * q)
                * _euler_pair_sum(q)
            )
    else:
        total = Fraction(0)
        for p in range(0, n - k + 1):
            total += (
                Fraction((-1) ** (p + k), 4**p)
                * comb(n - p, k)
                * comb(4 * n, 4 * p)
                * _euler_pair_sum(p)
            )
    coef = Fraction((-1) ** n, 4**n * factorial(4 * n)) * total
    return SumValue("Tstar" if star else "T", 4, n, k, PiValue(coef, 4 * n))


def _require_even_string_arg(two_m: int):
    if two_m < 4 or two_m % 2:
        raise UnsupportedExactError(
            f"general string evaluation needs an even argument >= 4, got {two_m}"
        )


def _rational_or_fail(q: Optional[Fraction], what: str) -> Fraction:
    if q is None:
        raise ConsistencyError(f"{what} did not reduce to a rational number")
    return q


def t_string_even_arg(two_m: int, n: int, full_sum: bool = False) -> PiValue:
    """t({2m}^n) for 2m >= 4 via root-of-unity power sums.

    For odd m the value is

        pi^(2mn) / (2^(m-1) (2mn)!) *
        sum_{k=1}^{(m-1)/2} sum_{0<=j_1<...<j_k<=m-1} (z^{j_1}+...+z^{j_k})^{2mn}

    with z a primitive m-th root of unity.  For even m it is

        (-1)^n pi^(2mn) / (2^(2mn+m-2) (2mn)!) *
        Re( sum over even-parity sign vectors of
            (w^{m-1} + e_1 w^{m-2} + ... + e_{m-1})^{2mn} )

    with w a primitive 2m-th root of unity.  ``full_sum=True`` evaluates
    the even-m case over all 2^(m-1) sign vectors instead (prefactor
    2^(m-1) 2^(2mn) instead of 2^(2mn+m-2)); conjugation pairs the two
    halves, so both variants must agree exactly.
    """
    _require_even_string_arg(two_m)
    if n < 1:
        raise DomainError(f"string length must be >= 1, got {n}")
    m = two_m // 2
    e = two_m * n
    if m % 2:  # odd m >= 3
        order = m
        total = CycloElem.zero(order)
        roots = [CycloElem.root_power(order, j) for j in range(m)]
        for size in range(1, (m - 1) // 2 + 1):
            for subset in _subsets(m, size):
                s = CycloElem.zero(order)
                for j in subset:
                    s = s + roots[j]
                total = total + cyclo_pow(s, e)
        q = _rational_or_fail(total.as_rational(), f"root-of-unity sum for t({{{two_m}}}^{n})")
        coef = q / (2 ** (m - 1) * factorial(e))
        return PiValue(coef, e)
    # even m >= 2
    order = 2 * m
    w = [CycloElem.root_power(order, j) for j in range(m)]
    acc = CycloElem.zero(order)
    vectors = sign_vectors(m - 1) if full_sum else sign_vectors(m - 1, parity=0)
    for eps in vectors:
        s = w[m - 1]
        for i, sign in enumerate(eps):
            term = w[m - 2 - i]
            s = s + (term if sign == 1 else -term)
        acc = acc + cyclo_pow(s, e)
    if full_sum:
        q = _rational_or_fail(acc.as_rational(), f"full sign-vector sum for t({{{two_m}}}^{n})")
        coef = Fraction((-1) ** n) * q / (2 ** (m - 1) * 2**e * factorial(e))
    else:
        _, q = cyclo_real_rational(acc)
        q = _rational_or_fail(q, f"real part of sign-vector sum for t({{{two_m}}}^{n})")
        coef = Fraction((-1) ** n) * q / (2 ** (e + m - 2) * factorial(e))
    return PiValue(coef, e)


def _subsets(m: int, size: int) -> Iterator[Tuple[int, ...]]:
    from itertools import combinations

    return combinations(range(m), size)


def tstar_string_even_arg(two_m: int, n: int) -> PiValue:
    """t*({2m}^n) for 2m >= 4, from the secant-product generating function.

    The generating function of t*({2m}^n) is the product of sec(w^j pi x/2)
    over j = 0..m-1, where w has order m for odd m and order 2m for even m.
    Extracting the x^(2mn) coefficient gives

        sgn * pi^(2mn)/2^(2mn) *
        sum_{l_1+...+l_m = mn} prod_{j=0}^{m-1} E_{2 l_{j+1}} / (2 l_{j+1})! * w^{2 j l_{j+1}}

    with sgn = (-1)^n for odd m and +1 for even m (the per-factor signs of
    the secant series multiply up to (-1)^{mn}).  The same index l_{j+1}
    feeds both the Euler factor and the root-of-unity exponent; re-deriving
    the coefficient from the secant product fixes that pairing, and the
    depth-1 anchor t*(6) = pi^6/960 confirms it.
    """
    _require_even_string_arg(two_m)
    if n < 1:
        raise DomainError(f"string length must be >= 1, got {n}")
    m = two_m // 2
    order = m if m % 2 else 2 * m
    total = m * n
    ev = euler_numbers(total).values
    coef_table = [Fraction(ev[l], factorial(2 * l)) for l in range(total + 1)]
    residue_acc: Dict[int, Fraction] = {}

    def descend(pos: int, left: int, residue: int, prod: Fraction):
        if pos == m - 1:
            r = (residue + 2 * pos * left) % order
            residue_acc[r] = residue_acc.get(r, Fraction(0)) + prod * coef_table[left]
            return
        for l in range(left + 1):
            descend(pos + 1, left - l, (residue + 2 * pos * l) % order, prod * coef_table[l])

    descend(0, total, 0, Fraction(1))
    elem = CycloElem.zero(order)
    for r, c in sorted(residue_acc.items()):
        elem = elem + CycloElem.root_power(order, r) * c
    q = _rational_or_fail(
        elem.as_rational(), f"secant-product coefficient for t*({{{two_m}}}^{n})"
    )
    sgn = (-1) ** n if m % 2 else 1
    return PiValue(Fraction(sgn) * q / 2 ** (2 * m * n), 2 * m * n)


def t_string_closed(m: int, n: int) -> PiValue:
    """Closed-form t({m}^n) for even m (n = 0 gives the empty product 1)."""
    if n == 0:
        return PiValue.one()
    if m == 2:
        return t2_string(n)
    return t_string_even_arg(m, n)


def tstar_string_closed(m: int, n: int) -> PiValue:
    """Closed-form t*({m}^n) for even m (n = 0 gives 1)."""
    if n == 0:
        return PiValue.one()
    if m == 2:
        return tstar2_string(n)
    return tstar_string_even_arg(m, n)


def sum_from_strings(
    m: int,
    n: int,
    k: int,
    star: bool,
    t_of: Callable[[int], PiValue],
    tstar_of: Callable[[int], PiValue],
) -> PiValue:
    """Depth-filtered combination of string values:

        T(mn,k)  = sum_{p=k}^{n} (-1)^(p-k) C(p,k) t({m}^p)   t*({m}^{n-p})
        T*(mn,k) = sum_{q=k}^{n} (-1)^(n+q) C(q,k) t({m}^{n-q}) t*({m}^q)

    ``t_of(p)`` / ``tstar_of(q)`` supply the string values, so callers can
    route this through either the closed forms or the symmetric-function
    oracle.
    """
    _check_range(n, k)
    acc = PiValue.zero(m * n)
    if star:
        for q in range(k, n + 1):
            term = (t_of(n - q) * tstar_of(q)).scaled(Fraction((-1) ** (n + q) * comb(q, k)))
            acc = acc + term
    else:
        for p in range(k, n + 1):
            term = (t_of(p) * tstar_of(n - p)).scaled(Fraction((-1) ** (p - k) * comb(p, k)))
            acc = acc + term
    return acc


def closed_sum(m: int, n: int, k: int, star: bool = False) -> SumValue:
    """Exact T(mn,k) / T*(mn,k) for even m.

    m = 2 and m = 4 use the direct Euler-number formulas; larger even m
    combines the cyclotomic string evaluations through
    :func:`sum_from_strings`.  Odd m has no exact route here.
    """
    if m < 2:
        raise DomainError(f"argument scale m must be >= 2, got {m}")
    if m % 2:
        raise UnsupportedExactError(f"no exact closed form for odd m = {m}")
    _check_range(n, k)
    if m == 2:
        return sum_even(n, k, star)
    if m == 4:
        return sum_weight4(n, k, star)
    value = sum_from_strings(
        m, n, k, star, lambda p: t_string_closed(m, p), lambda q: tstar_string_closed(m, q)
    )
    return SumValue("Tstar" if star else "T", m, n, k, value)


def hurwitz_scaled(m: int, n: int, k: int) -> PiValue:
    """2^(mn) * T(mn,k): the same sum normalized over half-odd shifts."""
    return closed_sum(m, n, k, star=False).value.scaled(Fraction(2) ** (m * n))
