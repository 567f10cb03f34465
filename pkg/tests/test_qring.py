from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from laxforge.qring import (
    LaurentPoly,
    PoleError,
    RatFunc,
    q_int,
    q_minus_qinv,
    q_power,
)


coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=8)
polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6), coeffs, max_size=5
).map(LaurentPoly)


# -- LaurentPoly ring axioms -------------------------------------------------


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert a - a == LaurentPoly.zero()


@given(polys, polys)
def test_evaluation_is_a_homomorphism(a, b):
    s0 = Fraction(3, 2)
    assert (a + b).evaluate(s0) == a.evaluate(s0) + b.evaluate(s0)
    assert (a * b).evaluate(s0) == a.evaluate(s0) * b.evaluate(s0)


@given(polys)
def test_parse_str_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a


def test_canonical_text_form():
    p = LaurentPoly({-2: Fraction(-1), 0: 3, 4: Fraction(1, 2)})
    assert str(p) == "-1*s^-2 + 3 + 1/2*s^4"
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.const(Fraction(-5, 3))) == "-5/3"


def test_zero_coefficients_are_dropped():
    assert LaurentPoly({3: 0, 1: 1}) == LaurentPoly({1: 1})
    assert not LaurentPoly({2: Fraction(0)})


def test_q_power_and_q_int():
    # q = s^2, so q^t lives at s-exponent 2t
    assert q_power(1) == LaurentPoly({2: 1})
    assert q_power(Fraction(-1, 2)) == LaurentPoly({-1: 1})
    assert q_minus_qinv() == LaurentPoly({2: 1, -2: -1})
    # [n]_q = (q^n - q^-n)/(q - q^-1)
    assert q_int(1) == LaurentPoly.one()
    assert q_int(2) == LaurentPoly({2: 1, -2: 1})
    assert q_int(3) == LaurentPoly({4: 1, 0: 1, -4: 1})
    assert q_int(-2) == -q_int(2)
    assert q_int(0) == LaurentPoly.zero()


def test_monomial_inverse():
    m = LaurentPoly.s_power(3, Fraction(2, 5))
    assert m.inverse() * m == LaurentPoly.one()
    with pytest.raises(ValueError):
        (LaurentPoly.one() + m).inverse()


def test_q_power_rejects_non_half_integer():
    with pytest.raises(ValueError):
        q_power(Fraction(1, 3))


# -- RatFunc -----------------------------------------------------------------


def _rf(num_consts, den_consts):
    return RatFunc(
        [LaurentPoly.const(c) for c in num_consts],
        [LaurentPoly.const(c) for c in den_consts],
    )


def test_ratfunc_equality_by_cross_multiplication():
    # z / (1 + z) == 2z / (2 + 2z)
    assert _rf([0, 1], [1, 1]) == _rf([0, 2], [2, 2])
    assert _rf([0, 1], [1, 1]) != _rf([0, 1], [1, 2])


def test_ratfunc_field_operations():
    a = _rf([1, 1], [1])  # 1 + z
    b = _rf([0, 1], [2])  # z/2
    assert (a * b) / b == a
    assert a - a == RatFunc.const(0)
    assert (a + b).evaluate(Fraction(2), Fraction(3)) == Fraction(4) + Fraction(3, 2)
    assert a.reciprocal() * a == RatFunc.const(1)


def test_ratfunc_pole_detection():
    a = _rf([1], [-1, 1])  # 1/(z - 1)
    with pytest.raises(PoleError):
        a.evaluate(Fraction(2), Fraction(1))
    assert a.evaluate(Fraction(2), Fraction(3)) == Fraction(1, 2)


def test_ratfunc_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc([LaurentPoly.one()], [LaurentPoly.zero()])


def test_ratfunc_json_round_trip():
    a = RatFunc([q_power(1), q_minus_qinv()], [LaurentPoly.one(), -q_power(-1)])
    assert RatFunc.from_json(a.to_json()) == a
