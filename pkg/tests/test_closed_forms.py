from fractions import Fraction

import pytest

from mtv import closed_forms as cf
from mtv.errors import DomainError, UnsupportedExactError
from mtv.exact import PiValue
from mtv.symfun import power_sums, t_string_oracle, tstar_string_oracle


def pv(num, den, w):
    return PiValue(Fraction(num, den), w)


def test_weight2_strings():
    assert cf.t2_string(0) == PiValue.one()
    assert cf.t2_string(1) == pv(1, 8, 2)
    assert cf.t2_string(2) == pv(1, 384, 4)
    assert cf.tstar2_string(0) == PiValue.one()
    assert cf.tstar2_string(1) == pv(1, 8, 2)
    assert cf.tstar2_string(2) == pv(5, 384, 4)


def test_weight2_strings_match_oracle():
    for n in range(13):
        assert cf.t2_string(n) == t_string_oracle(2, n)
        assert cf.tstar2_string(n) == tstar_string_oracle(2, n)


def test_sum_even_examples():
    assert cf.sum_even(1, 1).value == pv(1, 8, 2)
    assert cf.sum_even(2, 1).value == pv(1, 96, 4)
    assert cf.sum_even(2, 1, variant="zhao").value == pv(1, 96, 4)
    assert cf.sum_even(2, 2, star=True).value == pv(5, 384, 4)


def test_sum_even_variants_agree():
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert cf.sum_even(n, k).value == cf.sum_even(n, k, variant="zhao").value


def test_sum_even_domain_errors():
    with pytest.raises(DomainError):
        cf.sum_even(2, 3)
    with pytest.raises(DomainError):
        cf.sum_even(2, 0)
    with pytest.raises(UnsupportedExactError):
        cf.sum_even(3, 1, star=True, variant="zhao")


def test_sum_weight4_examples():
    assert cf.sum_weight4(1, 1).value == pv(1, 96, 4)
    assert cf.sum_weight4(1, 1, star=True).value == pv(1, 96, 4)
    # depth-filtered slice at k = n is the plain string
    assert cf.sum_weight4(2, 2).value == t_string_oracle(4, 2)
    assert cf.sum_weight4(2, 1).value == pv(17, 161280, 8)


def test_sum_weight4_against_string_combination():
    for n in range(1, 4):
        for k in range(1, n + 1):
            for star in (False, True):
                direct = cf.sum_weight4(n, k, star).value
                combined = cf.sum_from_strings(
                    4, n, k, star,
                    lambda p: t_string_oracle(4, p),
                    lambda q: tstar_string_oracle(4, q),
                )
                assert direct == combined


@pytest.mark.parametrize("two_m,n,expected", [
    (4, 1, (1, 96, 4)),
    (6, 1, (1, 960, 6)),
    (8, 1, (17, 161280, 8)),
])
def test_string_even_arg_known_values(two_m, n, expected):
    assert cf.t_string_even_arg(two_m, n) == pv(*expected)


def test_string_even_arg_matches_oracle():
    for two_m in (4, 6, 8, 10, 12):
        for n in range(1, 4 if two_m < 12 else 3):
            assert cf.t_string_even_arg(two_m, n) == t_string_oracle(two_m, n)
            assert cf.tstar_string_even_arg(two_m, n) == tstar_string_oracle(two_m, n)


def test_string_even_arg_oracle_depth4():
    for two_m in (4, 6, 8, 10, 12):
        assert cf.t_string_even_arg(two_m, 4) == t_string_oracle(two_m, 4)
        assert cf.tstar_string_even_arg(two_m, 4) == tstar_string_oracle(two_m, 4)


def test_full_sign_vector_sum_agrees():
    for two_m in (4, 8, 12):
        for n in (1, 2):
            assert cf.t_string_even_arg(two_m, n, full_sum=True) == cf.t_string_even_arg(two_m, n)


def test_tstar_even_arg_examples():
    assert cf.tstar_string_even_arg(4, 1) == pv(1, 96, 4)
    assert cf.tstar_string_even_arg(4, 2) == tstar_string_oracle(4, 2)
    assert cf.tstar_string_even_arg(6, 1) == power_sums(3).p(3)


def test_string_even_arg_domain():
    for bad in (2, 3, 5):
        with pytest.raises(UnsupportedExactError):
            cf.t_string_even_arg(bad, 1)
    with pytest.raises(DomainError):
        cf.t_string_even_arg(4, 0)


def test_depth_one_degeneracy():
    # k = n = 1 sums collapse to power sums p_(w/2)
    ps = power_sums(8)
    assert cf.sum_even(1, 1).value == ps.p(1)
    assert cf.sum_weight4(1, 1).value == ps.p(2)
    assert cf.closed_sum(6, 1, 1).value == ps.p(3)
    assert cf.closed_sum(8, 1, 1).value == ps.p(4)


def test_k_equals_n_degeneracy():
    for m in (2, 4):
        for n in range(1, 6):
            assert cf.closed_sum(m, n, n).value == t_string_oracle(m, n)
            assert cf.closed_sum(m, n, n, star=True).value == tstar_string_oracle(m, n)


def test_closed_sum_large_even_m():
    for n in (1, 2):
        for k in range(1, n + 1):
            sv = cf.closed_sum(6, n, k)
            assert sv.value.weight == 6 * n
    assert cf.closed_sum(6, 1, 1).value == t_string_oracle(6, 1)


def test_closed_sum_odd_m_rejected():
    with pytest.raises(UnsupportedExactError):
        cf.closed_sum(3, 2, 1)


def test_hurwitz_scaled():
    assert cf.hurwitz_scaled(2, 1, 1) == pv(1, 2, 2)
    assert cf.hurwitz_scaled(2, 2, 1) == pv(1, 6, 4)
    assert cf.hurwitz_scaled(2, 2, 2) == pv(1, 24, 4)


def test_sign_vectors():
    allv = list(cf.sign_vectors(3))
    even = list(cf.sign_vectors(3, parity=0))
    assert len(allv) == 8 and len(even) == 4
    assert all(v.count(-1) % 2 == 0 for v in even)
    assert (1, 1, 1) in even and (-1, -1, 1) in even


def test_sum_value_invariants():
    sv = cf.sum_even(3, 2)
    assert (sv.kind, sv.m, sv.n, sv.k) == ("T", 2, 3, 2)
    assert sv.value.weight == 6
    with pytest.raises(DomainError):
        cf.SumValue("T", 2, 2, 3, pv(1, 8, 4))
