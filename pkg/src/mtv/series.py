"""High-precision numeric evaluation with rigorous error accounting.

Values are returned as balls: an MPFR center plus a radius that is a true
bound, i.e. the exact infinite sum always lies inside
[center - radius, center + radius].  Three error sources are tracked:

1. rounding: the nested-sum dynamic program runs in MPFR nearest-rounding
   arithmetic at ``precision_bits + 32`` bits; every operation on positive
   quantities perturbs the result by a relative factor (1 +- 2^-P), and a
   crude global budget (3 * ops-per-term * terms * 2^-P) covers the
   accumulation with a wide margin;
2. truncation: the omitted tail over indices j > J is *bracketed*, not
   just bounded.  For a single exponent a >= 2 the midpoint rule gives

       I - E  <=  sum_{j>J} (2j-1)^(-a)  <=  I,
       I = (2J)^(1-a) / (2(a-1)),
       E = a(a+1)/(6 (2J)^(a+2)) + a/(12 (2J)^(a+1)),

   because x -> (2x-1)^(-a) is positive, decreasing and convex.  For the
   nested sum the bracket is applied level by level: the tail past J at
   depth i lies between (depth-1 bracket low) * (partial sum of the depth
   i-1 prefix) and (depth-1 bracket high) * (upper bound for the full
   depth i-1 prefix value).  The enclosure midpoint is folded into the
   center, so ball widths shrink like J^-(a+1) rather than J^(1-a);
3. directed rounding: all bound computations run in round-up (upper
   bounds) or round-down (lower bounds) MPFR contexts.

Compositions with an exponent 1 before the last position still converge,
but their inner partial sums grow logarithmically; for those a coarser
one-sided tail bound is used (see ``_coarse_tail``) and the enclosure
sharpening is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence, Tuple, Union

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import DivergenceError, DomainError, InsufficientTermsError
from .exact import PiValue

#: Ordered tuple of positive integers: the argument string of a value.
Composition = Tuple[int, ...]

GUARD_BITS = 32
DEFAULT_PRECISION_BITS = 128
#: Hard cap on the automatically chosen number of summation terms.
TERMS_CAP = 10_000


def _rn(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundToNearest)


def _ru(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundUp)


def _rd(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundDown)


@lru_cache(maxsize=None)
def _eps(prec: int) -> mpfr:
    # 2^(1-prec): relative bound for one correctly rounded operation
    with _ru(prec):
        return gmpy2.exp2(mpfr(1 - prec))


@lru_cache(maxsize=None)
def _pi_bracket(prec: int) -> Tuple[mpfr, mpfr]:
    with _rd(prec):
        lo = gmpy2.const_pi()
    with _ru(prec):
        hi = gmpy2.const_pi()
    return lo, hi


def as_composition(parts: Sequence[int]) -> Composition:
    t = tuple(int(p) for p in parts)
    if not t:
        raise DomainError("argument string must be nonempty")
    if any(p < 1 for p in t):
        raise DomainError(f"argument parts must be positive integers, got {t}")
    return t


@dataclass(frozen=True)
class BallReal:
    """center +- radius with the guarantee that the true value is inside.

    ``prec`` is the working precision of the center.  ``tail_capped``
    marks results whose automatically chosen term count hit TERMS_CAP
    before reaching the requested accuracy (the ball is still valid, just
    wider).  ``tail_radius`` is the truncation component of the radius,
    kept separate so refinement behaviour can be observed.
    """

    center: mpfr
    radius: mpfr
    prec: int
    tail_capped: bool = False
    tail_radius: Optional[mpfr] = None

    @staticmethod
    def exact_zero(prec: int = DEFAULT_PRECISION_BITS + GUARD_BITS) -> "BallReal":
        return BallReal(mpfr(0), mpfr(0), prec)

    @staticmethod
    def from_pi_value(v: PiValue, precision_bits: int = DEFAULT_PRECISION_BITS) -> "BallReal":
        """Ball around the exact value q * pi^w."""
        prec = precision_bits + GUARD_BITS
        if v.coef == 0:
            return BallReal(mpfr(0), mpfr(0), prec)
        lo, hi = _pi_pow_bracket(v.weight, prec)
        num, den = v.coef.numerator, v.coef.denominator
        with _rd(prec):
            v_lo = (lo if num > 0 else hi) * num / den
        with _ru(prec):
            v_hi = (hi if num > 0 else lo) * num / den
        return _ball_from_bracket(v_lo, v_hi, prec)

    @property
    def width(self) -> mpfr:
        with _ru(self.prec):
            return 2 * self.radius

    def __neg__(self) -> "BallReal":
        # negation must run at full precision: operator arithmetic outside a
        # context block would round to the (53-bit) global default context
        with _rn(self.prec):
            c = -self.center
        return BallReal(c, self.radius, self.prec, self.tail_capped)

    def __add__(self, other: "BallReal") -> "BallReal":
        if not isinstance(other, BallReal):
            return NotImplemented
        prec = min(self.prec, other.prec)
        with _rn(prec):
            c = self.center + other.center
        with _ru(prec):
            r = self.radius + other.radius + abs(c) * _eps(prec)
        return BallReal(c, r, prec, self.tail_capped or other.tail_capped)

    def __sub__(self, other: "BallReal") -> "BallReal":
        return self + (-other)

    def __mul__(self, other: Union["BallReal", int, Fraction]) -> "BallReal":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, BallReal):
            return NotImplemented
        prec = min(self.prec, other.prec)
        with _rn(prec):
            c = self.center * other.center
        with _ru(prec):
            r = (
                abs(self.center) * other.radius
                + abs(other.center) * self.radius
                + self.radius * other.radius
                + abs(c) * _eps(prec)
            )
        return BallReal(c, r, prec, self.tail_capped or other.tail_capped)

    __rmul__ = __mul__

    def scaled(self, q: Union[int, Fraction]) -> "BallReal":
        q = Fraction(q)
        if q == 0:
            return BallReal(mpfr(0), mpfr(0), self.prec, self.tail_capped)
        with _rn(self.prec):
            c = self.center * q.numerator / q.denominator
        with _ru(self.prec):
            qa = mpfr(abs(q.numerator)) / q.denominator
            r = self.radius * qa + 2 * abs(c) * _eps(self.prec)
        return BallReal(c, r, self.prec, self.tail_capped)

    def contains_zero(self) -> bool:
        return abs(mpq(self.center)) <= mpq(self.radius)

    def contains_pi_value(self, v: PiValue) -> bool:
        """Exact check that the ball encloses the exact value q * pi^w.

        Uses a directed dyadic bracket of pi^w and exact rational
        comparisons, so a True answer is a proof of containment.
        """
        ball_lo = mpq(self.center) - mpq(self.radius)
        ball_hi = mpq(self.center) + mpq(self.radius)
        if v.coef == 0:
            return ball_lo <= 0 <= ball_hi
        lo, hi = _pi_pow_bracket(v.weight, self.prec + 16)
        q = mpq(v.coef.numerator, v.coef.denominator)
        cand = (q * mpq(lo), q * mpq(hi))
        v_lo, v_hi = min(cand), max(cand)
        return ball_lo <= v_lo and v_hi <= ball_hi

    def __repr__(self) -> str:
        return f"BallReal({self.center!r} +- {self.radius!r})"


@lru_cache(maxsize=None)
def _pi_pow_bracket(w: int, prec: int) -> Tuple[mpfr, mpfr]:
    if w == 0:
        return mpfr(1), mpfr(1)
    pi_lo, pi_hi = _pi_bracket(prec)
    with _rd(prec):
        lo = pi_lo**w
    with _ru(prec):
        hi = pi_hi**w
    return lo, hi


def _ball_from_bracket(lo: mpfr, hi: mpfr, prec: int, extra: mpfr = mpfr(0),
                       tail_capped: bool = False, tail_radius: Optional[mpfr] = None) -> BallReal:
    with _rn(prec):
        c = (lo + hi) / 2
    with _ru(prec):
        r = (hi - lo) / 2 + extra + 2 * abs(c) * _eps(prec)
    return BallReal(c, r, prec, tail_capped, tail_radius)


def decimal_str(x: mpfr, digits: int = 25) -> str:
    """Deterministic scientific-notation rendering of an MPFR value."""
    if gmpy2.is_zero(x):
        return "0"
    ds, exp, _ = gmpy2.digits(x, 10, digits)
    neg = ds.startswith("-")
    if neg:
        ds = ds[1:]
    mant = ds[0] + ("." + ds[1:] if len(ds) > 1 else "")
    return f"{'-' if neg else ''}{mant}e{exp - 1:+03d}"


def radius_str(ball: BallReal, digits: int = 6) -> str:
    """Printable radius, pre-inflated so decimal truncation cannot shrink it."""
    with _ru(ball.prec):
        inflated = ball.radius * (1 + _eps(16))
    return decimal_str(inflated, digits)


def compositions(n: int, k: int) -> Iterator[Composition]:
    """All compositions of n into k positive parts, lexicographically.

    There are C(n-1, k-1) of them; k > n yields nothing (empty stream).
    """
    if n < 1 or k < 1:
        raise DomainError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if k > n:
        return
    for cuts in combinations(range(1, n), k - 1):
        prev = 0
        parts = []
        for c in cuts:
            parts.append(c - prev)
            prev = c
        parts.append(n - prev)
        yield tuple(parts)


# ---------------------------------------------------------------------------
# tail brackets


def _tail_bracket(a: int, j_terms: int, prec: int) -> Tuple[mpfr, mpfr]:
    """Bracket [lo, hi] of sum_{j>J} (2j-1)^(-a) for a >= 2 (see module doc).

    The integer denominators can exceed the working precision, so each
    quotient is formed exactly in mpq first and rounded outward once;
    converting a big denominator inside a directed context would round it
    the wrong way.
    """
    two_j = 2 * j_terms
    integral = mpq(1, 2 * (a - 1) * two_j ** (a - 1))
    e_bound = mpq(a * (a + 1), 6 * two_j ** (a + 2)) + mpq(a, 12 * two_j ** (a + 1))
    with _ru(prec):
        hi = mpfr(integral)
    with _rd(prec):
        lo = mpfr(integral - e_bound)
        if lo < 0:
            lo = mpfr(0)
    return lo, hi


def _coarse_tail(parts: Composition, j_terms: int, prec: int) -> mpfr:
    """One-sided tail bound for compositions with interior exponent-1 parts.

    Inner factors with exponent >= 2 are bounded by 2; each exponent-1
    factor is bounded by 1 + ln(2j-1)/2 <= (1+s) (2j-1)^(1/(2s)) where s
    counts those factors (using ln y <= y^d / d).  That leaves a single
    series with effective exponent a - 1/2 >= 3/2, bounded by its integral.
    """
    k = len(parts)
    s = sum(1 for p in parts[:-1] if p == 1)
    a = parts[-1]
    base = 2 * j_terms - 1
    with _ru(prec):
        const = mpfr(2 ** (k - 1 - s) * (1 + s) ** s)
        tail = const * gmpy2.sqrt(mpfr(base)) / (mpfr(base) ** (a - 1) * (2 * a - 3))
    return tail


def _float_width_estimate(parts: Composition, j_terms: int) -> float:
    # rough non-rigorous model of the final ball width, for choosing J only
    est = 0.0
    prev_i = 0.0
    two_j = 2.0 * j_terms
    if any(p == 1 for p in parts[:-1]):
        k, a = len(parts), parts[-1]
        s = sum(1 for p in parts[:-1] if p == 1)
        return 2.0 ** (k - 1 - s) * (1 + s) ** s * two_j ** (1.5 - a) / (2 * a - 3)
    for a in parts:
        cur_i = two_j ** (1 - a) / (2 * (a - 1))
        est += a * (a + 1) / (6 * two_j ** (a + 2)) + a / (12 * two_j ** (a + 1))
        est += prev_i * cur_i
        prev_i = cur_i
    return est


def default_terms(parts: Composition, precision_bits: int) -> Tuple[int, bool]:
    """Smallest power-of-two-ish J whose predicted width meets 2^-bits.

    Returns ``(J, capped)``; ``capped`` is True when TERMS_CAP was hit
    before the target (slowly decaying tails make 2^-128 unreachable by
    direct summation, so this is the common case for small exponents).
    """
    target = 2.0 ** (-precision_bits)
    j_terms = max(64, 2 * len(parts))
    while j_terms < TERMS_CAP and _float_width_estimate(parts, j_terms) > target:
        j_terms *= 2
    j_terms = min(j_terms, TERMS_CAP)
    return j_terms, _float_width_estimate(parts, j_terms) > target


# ---------------------------------------------------------------------------
# nested summation


def _partial_sums(parts: Composition, star: bool, j_terms: int, prec: int) -> list:
    """Prefix partial sums S_1..S_k over indices j <= J (MPFR, nearest).

    S_i is the truncated depth-i nested sum over the first i exponents;
    ascending updates share the current index (non-strict chains), while
    descending updates see only previous indices (strict chains).
    """
    k = len(parts)
    with _rn(prec):
        sums = [mpfr(1)] + [mpfr(0)] * k
        one = mpfr(1)
        order = range(1, k + 1) if star else range(k, 0, -1)
        for j in range(1, j_terms + 1):
            u = one / mpfr(2 * j - 1)
            powers = {}
            for a in parts:
                if a not in powers:
                    powers[a] = u**a
            for i in order:
                sums[i] = sums[i] + powers[parts[i - 1]] * sums[i - 1]
    return sums


def t_numeric(
    alpha: Sequence[int],
    star: bool = False,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    terms: Optional[int] = None,
) -> BallReal:
    """Ball around t(alpha) (strict chains) or t*(alpha) (non-strict).

    ``terms`` fixes the truncation index J; when omitted it is chosen via
    :func:`default_terms`.  The last exponent must be >= 2 (otherwise the
    series diverges) and J must be at least the depth.
    """
    parts = as_composition(alpha)
    if precision_bits < 32:
        raise DomainError(f"precision must be >= 32 bits, got {precision_bits}")
    if parts[-1] < 2:
        raise DivergenceError(
            f"divergent series: last exponent must be >= 2, got {parts[-1]}"
        )
    k = len(parts)
    if terms is None:
        j_terms, capped = default_terms(parts, precision_bits)
    else:
        j_terms, capped = int(terms), False
        if j_terms < k:
            raise InsufficientTermsError(f"need at least depth={k} terms, got {j_terms}")
    return _t_numeric_resolved(parts, star, precision_bits, j_terms, capped)


@lru_cache(maxsize=8192)
def _t_numeric_resolved(
    parts: Composition, star: bool, precision_bits: int, j_terms: int, capped: bool
) -> BallReal:
    prec = precision_bits + GUARD_BITS
    k = len(parts)
    sums = _partial_sums(parts, star, j_terms, prec)

    # global rounding budget: every intermediate is positive and each MPFR
    # op is correctly rounded, so a per-prefix relative bound of
    # 3 * (sum(parts) + 4k + 8) * J * 2^-prec covers the accumulation.
    with _ru(prec):
        srel = 3 * (sum(parts) + 4 * k + 8) * j_terms * _eps(prec)
        rnd = [srel * s for s in sums]  # rnd[i] pairs with sums[i]

    if all(p >= 2 for p in parts[:-1]):
        upper_prev = mpfr(1)
        lower_k = upper_k = None
        for i in range(1, k + 1):
            t_lo, t_hi = _tail_bracket(parts[i - 1], j_terms, prec)
            with _ru(prec):
                upper = sums[i] + t_hi * upper_prev
            with _rd(prec):
                lower = sums[i] + t_lo * (sums[i - 1] - rnd[i - 1])
            upper_prev = upper
            lower_k, upper_k = lower, upper
        with _ru(prec):
            extra = 2 * rnd[k]
            tail_radius = (upper_k - lower_k) / 2
        return _ball_from_bracket(
            lower_k, upper_k, prec, extra=extra, tail_capped=capped, tail_radius=tail_radius
        )

    tail = _coarse_tail(parts, j_terms, prec)
    with _ru(prec):
        radius = rnd[k] + tail
    return BallReal(sums[k], radius, prec, capped, tail)


def sum_numeric(
    m: int,
    n: int,
    k: int,
    star: bool = False,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    terms: Optional[int] = None,
) -> BallReal:
    """Ball around T(mn,k) / T*(mn,k): composition-enumerated nested sums."""
    if m < 2:
        raise DomainError(f"argument scale m must be >= 2, got {m}")
    if k < 1 or k > n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    total: Optional[BallReal] = None
    tail_total = mpfr(0)
    for comp in compositions(n, k):
        ball = t_numeric(tuple(m * p for p in comp), star, precision_bits, terms)
        if ball.tail_radius is not None:
            with _ru(ball.prec):
                tail_total = tail_total + ball.tail_radius
        total = ball if total is None else total + ball
    assert total is not None  # k <= n guarantees at least one composition
    return BallReal(total.center, total.radius, total.prec, total.tail_capped, tail_total)
