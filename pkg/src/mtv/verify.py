"""Machine verification of the sum relations and evaluation formulas.

Each suite checks one identity over a parameter grid and returns a
:class:`VerifyReport`.  Even argument scales are checked by exact
rational arithmetic; odd scales (no closed forms) are checked by ball
arithmetic, where a pass means the difference ball contains zero and a
ball excluding zero is a hard failure.

The two sides of every identity come from computation routes that are as
independent as the package allows: Euler-number formulas on one side and
the Newton-identity oracle (seeded only by the weight-2 string values) on
the other, or enumerated nested sums for the numeric grids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from . import closed_forms as cf
from .errors import DomainError
from .euler import euler_numbers
from .exact import PiValue, format_pi_value
from .series import BallReal, decimal_str, sum_numeric, t_numeric
from .symfun import t_string_oracle, tstar_string_oracle

DEFAULT_EVEN_MS = (2, 4)
DEFAULT_EVEN_NMAX = 8
DEFAULT_ODD_M = 3
DEFAULT_ODD_NMAX = 4
#: Term count for the odd-m numeric grids; sized so the identity balls
#: come out well below the 2^-64 width requirement at 128 bits.
DEFAULT_ODD_TERMS = 120_000
DEFAULT_PAR_NMAX = 6
DEFAULT_ZHAO_NMAX = 10
DEFAULT_EULER_NMAX = 10
DEFAULT_PROPS_ARGS = (4, 6, 8, 10, 12)
DEFAULT_PROPS_NMAX = 3

SUITE_NAMES = ("lemma1", "theorem", "corollary", "euler-identity", "par", "props", "zhao")


@dataclass(frozen=True)
class CaseResult:
    params: Dict[str, Any]
    status: str  # "pass" | "fail" | "numeric-pass"
    detail: Any


@dataclass
class VerifyReport:
    suite: str
    grid: Dict[str, Any]
    cases: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.cases)

    @property
    def first_counterexample(self) -> Optional[CaseResult]:
        for c in self.cases:
            if c.status == "fail":
                return c
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "cases": [
                {"params": c.params, "status": c.status, "detail": c.detail}
                for c in self.cases
            ],
        }


def _exact_case(params: Dict[str, Any], lhs: PiValue, rhs: PiValue) -> CaseResult:
    if lhs == rhs:
        return CaseResult(params, "pass", format_pi_value(lhs))
    return CaseResult(
        params, "fail", {"lhs": format_pi_value(lhs), "rhs": format_pi_value(rhs)}
    )


def _numeric_case(params: Dict[str, Any], diff: BallReal) -> CaseResult:
    detail = {"center": decimal_str(diff.center), "width": decimal_str(diff.width)}
    if diff.contains_zero():
        return CaseResult(params, "numeric-pass", detail)
    return CaseResult(params, "fail", detail)


def _require_m(m: int):
    if m < 2:
        raise DomainError(f"argument scale m must be >= 2, got {m}")


# ---------------------------------------------------------------------------
# star-from-plain sum relation: T*(mn,k) = sum_r C(n-r, k-r) T(mn,r)


def verify_lemma1(
    m: int = 2,
    nmax: int = DEFAULT_EVEN_NMAX,
    precision_bits: int = 128,
    terms: Optional[int] = None,
) -> VerifyReport:
    _require_m(m)
    exact = m % 2 == 0
    report = VerifyReport(
        "lemma1",
        {"m": m, "nmax": nmax, "mode": "exact" if exact else "numeric"},
    )
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            params = {"m": m, "n": n, "k": k}
            if exact:
                lhs = cf.closed_sum(m, n, k, star=True).value
                rhs = PiValue.zero(m * n)
                for r in range(1, k + 1):
                    rhs = rhs + cf.closed_sum(m, n, r).value.scaled(comb(n - r, k - r))
                report.cases.append(_exact_case(params, lhs, rhs))
            else:
                j = terms if terms is not None else DEFAULT_ODD_TERMS
                diff = sum_numeric(m, n, k, star=True, precision_bits=precision_bits, terms=j)
                for r in range(1, k + 1):
                    t_ball = sum_numeric(m, n, r, precision_bits=precision_bits, terms=j)
                    diff = diff - t_ball.scaled(comb(n - r, k - r))
                report.cases.append(_numeric_case(params, diff))
    return report


# ---------------------------------------------------------------------------
# sums from string values:
#   T(mn,k)  = sum_p (-1)^(p-k) C(p,k) t({m}^p) t*({m}^{n-p})
#   T*(mn,k) = sum_q (-1)^(n+q) C(q,k) t({m}^{n-q}) t*({m}^q)


def verify_theorem(
    m: int = 2,
    nmax: int = DEFAULT_EVEN_NMAX,
    precision_bits: int = 128,
    terms: Optional[int] = None,
) -> VerifyReport:
    _require_m(m)
    exact = m % 2 == 0
    report = VerifyReport(
        "theorem",
        {"m": m, "nmax": nmax, "mode": "exact" if exact else "numeric"},
    )
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            for star in (False, True):
                params = {"m": m, "n": n, "k": k, "kind": "Tstar" if star else "T"}
                if exact:
                    lhs = cf.closed_sum(m, n, k, star).value
                    rhs = cf.sum_from_strings(
                        m, n, k, star,
                        lambda p: t_string_oracle(m, p),
                        lambda q: tstar_string_oracle(m, q),
                    )
                    report.cases.append(_exact_case(params, lhs, rhs))
                else:
                    j = terms if terms is not None else DEFAULT_ODD_TERMS
                    diff = sum_numeric(m, n, k, star, precision_bits, j)
                    for p in range(k, n + 1):
                        t_n, ts_n = (n - p, p) if star else (p, n - p)
                        prod = _string_ball(m, t_n, False, precision_bits, j) * _string_ball(
                            m, ts_n, True, precision_bits, j
                        )
                        sign = (-1) ** (n + p) if star else (-1) ** (p - k)
                        diff = diff - prod.scaled(sign * comb(p, k))
                    report.cases.append(_numeric_case(params, diff))
    return report


def _string_ball(m: int, n: int, star: bool, precision_bits: int, terms: int) -> BallReal:
    if n == 0:
        return BallReal.from_pi_value(PiValue.one(), precision_bits)
    return t_numeric((m,) * n, star, precision_bits, terms)


# ---------------------------------------------------------------------------
# star string as the full row of sums: t*({m}^n) = T(mn,1) + ... + T(mn,n)


def verify_corollary(
    m: int = 2,
    nmax: int = DEFAULT_EVEN_NMAX,
    precision_bits: int = 128,
    terms: Optional[int] = None,
) -> VerifyReport:
    _require_m(m)
    exact = m % 2 == 0
    report = VerifyReport(
        "corollary",
        {"m": m, "nmax": nmax, "mode": "exact" if exact else "numeric"},
    )
    for n in range(1, nmax + 1):
        params = {"m": m, "n": n}
        if exact:
            lhs = tstar_string_oracle(m, n)
            rhs = PiValue.zero(m * n)
            for k in range(1, n + 1):
                rhs = rhs + cf.closed_sum(m, n, k).value
            report.cases.append(_exact_case(params, lhs, rhs))
        else:
            j = terms if terms is not None else DEFAULT_ODD_TERMS
            diff = _string_ball(m, n, True, precision_bits, j)
            for k in range(1, n + 1):
                diff = diff - sum_numeric(m, n, k, False, precision_bits, j)
            report.cases.append(_numeric_case(params, diff))
    return report


# ---------------------------------------------------------------------------
# pure integer identity relating the two star-sum evaluations


def verify_euler_identity(nmax: int = DEFAULT_EULER_NMAX) -> VerifyReport:
    """For all k <= n:

    sum_{r=1}^{k} (-1)^r C(n-r,k-r) sum_{p=r}^{n} C(2n,2p) C(p,r) E_{2n-2p}
        = sum_{q=k}^{n} C(2n,2q) C(q,k) E_{2q}
    """
    report = VerifyReport("euler-identity", {"nmax": nmax, "mode": "exact"})
    ev = euler_numbers(nmax).values
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            lhs = sum(
                (-1) ** r
                * comb(n - r, k - r)
                * sum(comb(2 * n, 2 * p) * comb(p, r) * ev[n - p] for p in range(r, n + 1))
                for r in range(1, k + 1)
            )
            rhs = sum(comb(2 * n, 2 * q) * comb(q, k) * ev[q] for q in range(k, n + 1))
            params = {"n": n, "k": k}
            if lhs == rhs:
                report.cases.append(CaseResult(params, "pass", str(lhs)))
            else:
                report.cases.append(
                    CaseResult(params, "fail", {"lhs": str(lhs), "rhs": str(rhs)})
                )
    return report


# ---------------------------------------------------------------------------
# bivariate generating identity
#   sum_{r=1}^{n} z^(n-r) (y+z)^r T(mn,r) = sum_{p+q=n} y^p z^q t({m}^p) t*({m}^q)


@dataclass(frozen=True)
class BivariatePi:
    """Polynomial in (y, z) with PiValue coefficients, degree <= n.

    Both sides of the generating identity are homogeneous of degree n in
    (y, z) and of weight m*n in pi; every slot p + q <= n is stored so the
    comparison is structural (sub-degree slots are zero on both sides).
    """

    n: int
    coeff: Dict[Tuple[int, int], PiValue]

    @staticmethod
    def build(n: int, weight: int, top_row) -> "BivariatePi":
        coeff = {}
        for p in range(0, n + 1):
            for q in range(0, n + 1 - p):
                coeff[(p, q)] = top_row(p) if p + q == n else PiValue.zero(weight)
        return BivariatePi(n, coeff)


def verify_par(m: int = 2, nmax: int = DEFAULT_PAR_NMAX) -> VerifyReport:
    """Coefficientwise comparison in (y, z), exact path (even m only)."""
    _require_m(m)
    if m % 2:
        raise DomainError("the bivariate identity is checked exactly; m must be even")
    report = VerifyReport("par", {"m": m, "nmax": nmax, "mode": "exact"})
    for n in range(1, nmax + 1):
        sums = {r: cf.closed_sum(m, n, r).value for r in range(1, n + 1)}

        def lhs_top(p):
            # y^p z^(n-p) coefficient: the left side expands (y+z)^r binomially
            acc = PiValue.zero(m * n)
            for r in range(max(p, 1), n + 1):
                acc = acc + sums[r].scaled(comb(r, p))
            return acc

        lhs = BivariatePi.build(n, m * n, lhs_top)
        rhs = BivariatePi.build(
            n, m * n, lambda p: t_string_oracle(m, p) * tstar_string_oracle(m, n - p)
        )
        for (p, q) in sorted(lhs.coeff):
            params = {"m": m, "n": n, "y_power": p, "z_power": q}
            report.cases.append(_exact_case(params, lhs.coeff[(p, q)], rhs.coeff[(p, q)]))
    return report


# ---------------------------------------------------------------------------
# cyclotomic string evaluations against the oracle


def verify_props(two_m: int = 4, nmax: int = DEFAULT_PROPS_NMAX) -> VerifyReport:
    report = VerifyReport("props", {"arg": two_m, "nmax": nmax, "mode": "exact"})
    for n in range(1, nmax + 1):
        report.cases.append(
            _exact_case(
                {"arg": two_m, "n": n, "kind": "t"},
                cf.t_string_even_arg(two_m, n),
                t_string_oracle(two_m, n),
            )
        )
        report.cases.append(
            _exact_case(
                {"arg": two_m, "n": n, "kind": "tstar"},
                cf.tstar_string_even_arg(two_m, n),
                tstar_string_oracle(two_m, n),
            )
        )
        if (two_m // 2) % 2 == 0:
            # even half-argument: the restricted sign-vector sum must agree
            # with the full one (conjugation pairs the two halves)
            report.cases.append(
                _exact_case(
                    {"arg": two_m, "n": n, "kind": "full-vs-restricted"},
                    cf.t_string_even_arg(two_m, n, full_sum=True),
                    cf.t_string_even_arg(two_m, n),
                )
            )
    return report


# ---------------------------------------------------------------------------
# the two weight-2n sum evaluations


def verify_zhao(nmax: int = DEFAULT_ZHAO_NMAX) -> VerifyReport:
    report = VerifyReport("zhao", {"nmax": nmax, "mode": "exact"})
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            report.cases.append(
                _exact_case(
                    {"n": n, "k": k},
                    cf.sum_even(n, k, variant="theorem").value,
                    cf.sum_even(n, k, variant="zhao").value,
                )
            )
    return report


# ---------------------------------------------------------------------------
# dispatch


def _default_grid_reports(suite: str, fn, precision_bits: int, terms: Optional[int]):
    reports = [
        fn(m, DEFAULT_EVEN_NMAX, precision_bits, terms) for m in DEFAULT_EVEN_MS
    ]
    reports.append(fn(DEFAULT_ODD_M, DEFAULT_ODD_NMAX, precision_bits, terms))
    return reports


def run_suite(
    name: str,
    m: Optional[int] = None,
    nmax: Optional[int] = None,
    precision_bits: int = 128,
    terms: Optional[int] = None,
) -> List[VerifyReport]:
    """Run one named suite (or "all"); returns one report per grid setting."""
    if name == "all":
        out: List[VerifyReport] = []
        for suite in SUITE_NAMES:
            out.extend(run_suite(suite, m, nmax, precision_bits, terms))
        return out
    if name in ("lemma1", "theorem", "corollary"):
        fn = {"lemma1": verify_lemma1, "theorem": verify_theorem, "corollary": verify_corollary}[name]
        if m is None:
            return _default_grid_reports(name, fn, precision_bits, terms)
        default_nmax = DEFAULT_EVEN_NMAX if m % 2 == 0 else DEFAULT_ODD_NMAX
        return [fn(m, nmax if nmax is not None else default_nmax, precision_bits, terms)]
    if name == "euler-identity":
        return [verify_euler_identity(nmax if nmax is not None else DEFAULT_EULER_NMAX)]
    if name == "par":
        return [verify_par(m if m is not None else 2, nmax if nmax is not None else DEFAULT_PAR_NMAX)]
    if name == "props":
        args = (m,) if m is not None else DEFAULT_PROPS_ARGS
        return [verify_props(a, nmax if nmax is not None else DEFAULT_PROPS_NMAX) for a in args]
    if name == "zhao":
        return [verify_zhao(nmax if nmax is not None else DEFAULT_ZHAO_NMAX)]
    raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or all")
