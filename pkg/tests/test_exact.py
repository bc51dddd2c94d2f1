"""Field arithmetic over Q(sqrt2, sqrt3)."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qutrit_teleport.exact import (
    INV_SQRT2,
    INV_SQRT3,
    INV_SQRT6,
    ONE,
    SQRT2,
    SQRT3,
    SQRT6,
    ZERO,
    ExtScalar,
    rational,
)


def random_scalar(rng, bound=30):
    return ExtScalar(
        *(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(4))
    )


def test_additive_inverse():
    assert rational(1) + rational(-1) == ZERO


def test_sum_of_reciprocal_sqrt6():
    # 1/sqrt6 + 1/sqrt6 = 2/sqrt6 = sqrt6/3, i.e. component q6 = 1/3
    total = INV_SQRT6 + INV_SQRT6
    assert total == ExtScalar(q6=Fraction(1, 3))
    # cross-check by squaring: (2/sqrt6)^2 == 2/3
    assert total * total == rational(2, 3)


def test_rational_addition():
    assert rational(1, 3) + rational(1, 6) == rational(1, 2)


def test_defining_products():
    assert SQRT2 * SQRT3 == SQRT6
    assert SQRT2 * SQRT6 == ExtScalar(q3=Fraction(2))
    assert SQRT3 * SQRT6 == ExtScalar(q2=Fraction(3))
    assert SQRT6 * SQRT6 == rational(6)


def test_reciprocal_sqrt3_squared():
    assert INV_SQRT3 * INV_SQRT3 == rational(1, 3)


def test_product_of_reciprocal_surds():
    # (1/sqrt2)(1/sqrt6) = 1/sqrt12 = sqrt3/6
    product = INV_SQRT2 * INV_SQRT6
    assert product == ExtScalar(q3=Fraction(1, 6))
    assert float(product) == pytest.approx(0.7071067811 * 0.4082482904, abs=1e-9)


def test_inverse_examples():
    assert SQRT6.inverse() == ExtScalar(q6=Fraction(1, 6))
    assert rational(1, 3).inverse() == rational(3)
    assert (ONE + SQRT2).inverse() == ExtScalar(Fraction(-1), Fraction(1))


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_float_evaluation():
    assert float(ZERO) == 0.0
    assert float(INV_SQRT6) == pytest.approx(0.408248290, abs=1e-9)
    # 1/(2 sqrt3) = sqrt3/6
    assert float(ExtScalar(q3=Fraction(1, 6))) == pytest.approx(0.288675134, abs=1e-9)


def test_float_matches_componentwise_sum_to_4ulp():
    rng = random.Random(11)
    for _ in range(200):
        x = random_scalar(rng)
        terms = (
            float(x.q1),
            float(x.q2) * math.sqrt(2),
            float(x.q3) * math.sqrt(3),
            float(x.q6) * math.sqrt(6),
        )
        direct = math.fsum(terms)
        # 4 ulp at the working scale of the evaluation (terms may cancel)
        scale = max(1.0, *(abs(t) for t in terms))
        assert abs(float(x) - direct) <= 4 * math.ulp(scale)


def test_field_axioms_on_random_triples():
    rng = random.Random(20240917)
    for _ in range(1000):
        a, b, c = (random_scalar(rng, 20) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


def test_inverse_roundtrip_exact():
    rng = random.Random(5)
    checked = 0
    while checked < 300:
        a = random_scalar(rng, 12)
        if a.is_zero():
            continue
        assert a * a.inverse() == ONE
        checked += 1


def test_float_is_ring_homomorphism_to_relative_1e12():
    rng = random.Random(99)
    for _ in range(300):
        a = random_scalar(rng, 10)
        b = random_scalar(rng, 10)
        s = a + b
        p = a * b
        assert abs(float(s) - (float(a) + float(b))) <= 1e-12 * max(1.0, abs(float(s)))
        assert abs(float(p) - float(a) * float(b)) <= 1e-12 * max(1.0, abs(float(p)))


def test_equality_is_componentwise():
    assert ExtScalar(q6=Fraction(1, 6)) != ExtScalar(q3=Fraction(1, 6))
    assert SQRT2 * SQRT3 == SQRT6  # same representation after multiply


def test_json_roundtrip_and_canonical_form():
    obj = INV_SQRT6.to_json_obj()
    assert obj == {"q1": "0/1", "q2": "0/1", "q3": "0/1", "q6": "1/6"}
    assert ExtScalar.from_json_obj(obj) == INV_SQRT6
    negative = rational(-2, 3).to_json_obj()
    assert negative["q1"] == "-2/3"
    assert ExtScalar.from_json_obj(negative) == rational(-2, 3)


def test_json_rejects_malformed_literals():
    with pytest.raises(ValueError):
        ExtScalar.from_json_obj({"q1": "1.5", "q2": "0/1", "q3": "0/1", "q6": "0/1"})


_small = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=8
)
_scalars = st.builds(ExtScalar, _small, _small, _small, _small)


@given(_scalars, _scalars)
def test_subtraction_inverts_addition(a, b):
    assert (a + b) - b == a


@given(_scalars, _scalars, _scalars)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c
