import json
from fractions import Fraction

import pytest

from mtv import closed_forms as cf
from mtv import verify as V
from mtv.errors import DomainError
from mtv.exact import PiValue


def test_lemma1_exact_small():
    rep = V.verify_lemma1(2, 4)
    assert rep.passed and rep.first_counterexample is None
    assert len(rep.cases) == 10
    assert all(c.status == "pass" for c in rep.cases)
    # the worked example: T(4,1) + T(4,2) = T*(4,2) = 5 pi^4/384
    case = next(c for c in rep.cases if c.params == {"m": 2, "n": 2, "k": 2})
    assert case.detail == "5/384 * pi^4"


def test_theorem_exact_small():
    rep = V.verify_theorem(4, 3)
    assert rep.passed
    # both identities per (n, k)
    assert len(rep.cases) == 2 * 6


def test_corollary_exact_small():
    rep = V.verify_corollary(2, 4)
    assert rep.passed
    case = next(c for c in rep.cases if c.params == {"m": 2, "n": 2})
    assert case.detail == "5/384 * pi^4"


def test_euler_identity_small():
    rep = V.verify_euler_identity(6)
    assert rep.passed
    assert len(rep.cases) == 21
    first = rep.cases[0]
    assert first.params == {"n": 1, "k": 1} and first.detail == "-1"


def test_par_small():
    rep = V.verify_par(2, 3)
    assert rep.passed
    # all slots p+q <= n per degree n: 3 + 6 + 10
    assert len(rep.cases) == 3 + 6 + 10
    n2 = [c for c in rep.cases if c.params["n"] == 2]
    assert len(n2) == 6  # the degree-2 table has six coefficient slots


def test_par_specialization_recovers_sums():
    # differentiating the polynomial identity k times in y at y=-1, z=1
    # turns the coefficient table into the depth-k sum: the y^p z^(n-p)
    # coefficient picks up (-1)^(p-k) C(p,k)
    from math import comb

    m, n = 2, 4
    for k in range(1, n + 1):
        acc = PiValue.zero(m * n)
        for p in range(k, n + 1):
            coeff = cf.t_string_closed(m, p) * cf.tstar_string_closed(m, n - p)
            acc = acc + coeff.scaled(Fraction((-1) ** (p - k) * comb(p, k)))
        assert acc == cf.closed_sum(m, n, k).value


def test_par_rejects_odd_m():
    with pytest.raises(DomainError):
        V.verify_par(3, 2)


def test_props_small():
    rep = V.verify_props(4, 2)
    assert rep.passed
    kinds = [c.params["kind"] for c in rep.cases]
    assert kinds.count("full-vs-restricted") == 2  # even half-argument


def test_props_odd_half_argument_has_no_full_variant():
    rep = V.verify_props(6, 2)
    assert rep.passed
    assert all(c.params["kind"] in ("t", "tstar") for c in rep.cases)


def test_zhao_small():
    rep = V.verify_zhao(5)
    assert rep.passed and len(rep.cases) == 15


def test_numeric_suite_small_grid():
    rep = V.verify_lemma1(3, 2, terms=20_000)
    assert rep.passed
    assert all(c.status == "numeric-pass" for c in rep.cases)
    assert all("width" in c.detail for c in rep.cases)


def test_failure_reporting(monkeypatch):
    # corrupt one closed form and make sure the report pinpoints it
    real = cf.closed_sum

    def broken(m, n, k, star=False):
        sv = real(m, n, k, star)
        if (n, k, star) == (2, 1, False):
            return cf.SumValue(sv.kind, sv.m, sv.n, sv.k, sv.value.scaled(2))
        return sv

    monkeypatch.setattr(V.cf, "closed_sum", broken)
    rep = V.verify_lemma1(2, 3)
    assert not rep.passed
    ce = rep.first_counterexample
    assert ce is not None
    assert ce.params["n"] >= 2
    assert "lhs" in ce.detail and "rhs" in ce.detail


def test_report_json_schema():
    rep = V.verify_zhao(3)
    d = rep.to_dict()
    assert set(d) == {"suite", "grid", "cases"}
    assert d["suite"] == "zhao"
    for case in d["cases"]:
        assert set(case) == {"params", "status", "detail"}
        assert case["status"] in ("pass", "fail", "numeric-pass")
    json.dumps(d)  # serializable


def test_run_suite_dispatch():
    reports = V.run_suite("zhao", nmax=3)
    assert len(reports) == 1 and reports[0].suite == "zhao"
    reports = V.run_suite("props", m=4, nmax=1)
    assert len(reports) == 1 and reports[0].grid["arg"] == 4
    with pytest.raises(DomainError):
        V.run_suite("nonsense")


def test_run_suite_single_m_override():
    reports = V.run_suite("lemma1", m=2, nmax=3)
    assert len(reports) == 1
    assert reports[0].grid == {"m": 2, "nmax": 3, "mode": "exact"}
