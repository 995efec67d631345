import random
from fractions import Fraction

import pytest

from mtv.errors import HomogeneityError
from mtv.exact import PiValue, format_pi_value, parse_pi_value, pi_add


def test_pi_add_examples():
    # T(4,1) + T(4,2)
    assert pi_add(PiValue(Fraction(1, 96), 4), PiValue(Fraction(1, 384), 4)) == PiValue(
        Fraction(5, 384), 4
    )
    v = PiValue(Fraction(7, 3), 6)
    assert pi_add(v, PiValue.zero(6)) == v
    assert pi_add(PiValue(Fraction(1, 8), 2), PiValue(Fraction(-1, 8), 2)) == PiValue.zero(2)


def test_weight_mismatch_rejected():
    with pytest.raises(HomogeneityError):
        pi_add(PiValue(Fraction(1), 2), PiValue(Fraction(1), 4))


def test_add_associative_commutative():
    rng = random.Random(20260810)
    for _ in range(200):
        w = rng.randrange(0, 7)
        a, b, c = (
            PiValue(Fraction(rng.randrange(-99, 100), rng.randrange(1, 60)), w)
            for _ in range(3)
        )
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)


def test_multiplication_adds_weights():
    a = PiValue(Fraction(1, 8), 2)
    b = PiValue(Fraction(1, 96), 4)
    assert a * b == PiValue(Fraction(1, 768), 6)
    assert a.scaled(Fraction(-3, 2)) == PiValue(Fraction(-3, 16), 2)
    assert 2 * a == PiValue(Fraction(1, 4), 2)


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        PiValue(Fraction(1), -1)


@pytest.mark.parametrize(
    "value,text",
    [
        (PiValue(Fraction(1, 384), 4), "1/384 * pi^4"),
        (PiValue(Fraction(17, 161280), 8), "17/161280 * pi^8"),
        (PiValue(Fraction(-5, 384), 4), "-5/384 * pi^4"),
        (PiValue(Fraction(1), 0), "1"),
        (PiValue(Fraction(3), 2), "3 * pi^2"),
        (PiValue(Fraction(0), 4), "0 * pi^4"),
        (PiValue(Fraction(0), 0), "0"),
    ],
)
def test_format_grammar(value, text):
    assert format_pi_value(value) == text
    assert parse_pi_value(text) == value


def test_parse_rejects_garbage():
    for bad in ("pi", "1/«", "1 * pi^-2", "1/0 * pi^2", ""):
        with pytest.raises(ValueError):
            parse_pi_value(bad)
