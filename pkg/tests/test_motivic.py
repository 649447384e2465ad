import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from omk.errors import (
    IndeterminateZeroTimesInfinity,
    NotAPerfectPower,
    NotAPolynomial,
    ParseError,
    PoleAtPoint,
)
from omk.motivic import (
    INFINITY,
    L,
    ONE,
    ZERO,
    MotivicWeight,
    format_weight,
    parse_weight,
    stringy_factor,
    w_add,
    w_dim,
    w_eval,
    w_from_L_power,
    w_mul,
    w_poly_coeffs,
)

half = Fraction(1, 2)


def test_from_L_power():
    assert w_from_L_power(0) == ONE
    assert w_from_L_power(1) == L
    w = w_from_L_power(-half)
    assert w_dim(w) == -half
    assert w * w_from_L_power(half) == ONE


def test_add_mul_examples():
    assert w_add(L, L) == 2 * L
    assert w_mul(L - 1, L + 1) == L**2 - 1
    assert w_mul(w_from_L_power(half), w_from_L_power(Fraction(1, 3))) == w_from_L_power(Fraction(5, 6))


def test_fractional_root_power():
    for r in (2, 3, 7):
        assert w_from_L_power(Fraction(1, r)) ** r == L


def test_infinity_absorbs():
    assert L + INFINITY == INFINITY
    assert (L - 1) * INFINITY == INFINITY
    with pytest.raises(IndeterminateZeroTimesInfinity):
        ZERO * INFINITY


def test_dim_examples():
    assert w_dim(L**2 + L) == 2
    assert w_dim((L - 1) / (L**3 - 1)) == -2
    assert w_dim(ZERO) == -math.inf
    assert w_dim(INFINITY) == math.inf


def test_stringy_factor_examples():
    assert stringy_factor(0) == ONE
    assert stringy_factor(1) == 1 / (L + 1)
    s = stringy_factor(-half)
    assert s == w_from_L_power(half) + 1
    # multiply out: (L^(1/2) + 1)(L^(1/2) - 1) = L - 1
    assert s * (w_from_L_power(half) - 1) == L - 1
    assert stringy_factor(-1) == INFINITY
    assert stringy_factor(-2) == INFINITY


@pytest.mark.parametrize("e", [Fraction(-1, 2), Fraction(0), Fraction(1), Fraction(7, 3), Fraction(-2, 3)])
@pytest.mark.parametrize("N", [1, 3, 8])
def test_stringy_factor_is_limit_of_partial_sums(e, N):
    partial = sum(
        (w_from_L_power(-(e + 1) * s) * (L - 1) for s in range(1, N + 1)), ZERO
    )
    tail = stringy_factor(e) - partial
    assert w_dim(tail) <= -(e + 1) * (N + 1) + 1


def test_eval_examples():
    assert w_eval(L**2 + L, 1) == 2
    assert w_eval(w_from_L_power(half), 4) == 2
    assert w_eval(stringy_factor(1), 1) == half
    assert w_eval(w_from_L_power(Fraction(2, 3)), Fraction(8, 27)) == Fraction(4, 9)


def test_eval_errors():
    with pytest.raises(NotAPerfectPower):
        w_eval(w_from_L_power(half), 2)
    with pytest.raises(PoleAtPoint):
        w_eval(1 / (L - 1), 1)


def test_poly_coeffs_examples():
    assert w_poly_coeffs(L**2 + 3 * L + 1) == {2: 1, 1: 3, 0: 1}
    assert w_poly_coeffs(w_from_L_power(Fraction(3, 2))) == {Fraction(3, 2): 1}
    assert w_poly_coeffs((L**2 - 1) / (L - 1)) == {1: 1, 0: 1}
    with pytest.raises(NotAPolynomial):
        w_poly_coeffs(1 / (L + 1))


def test_canonical_r():
    w = MotivicWeight.fraction([0, 0, 1], [1], r=2)
    assert w.r == 1 and w == L


def test_serialization():
    assert format_weight(L**2 + L) == "L^2 + L"
    assert format_weight(w_from_L_power(Fraction(5, 6))) == "L^(5/6)"
    assert format_weight(INFINITY) == "infinity"
    assert format_weight(ZERO) == "0"
    assert format_weight(1 / (L + 1)) == "1/(L + 1)"
    assert format_weight(half * L - 3) == "1/2*L - 3"


@pytest.mark.parametrize("text", [
    "L^2 + L", "(L - 1)/(L^3 - 1)", "L^(1/2) + 1", "infinity", "-L + 2", "3/4*L^(2/3)", "L^-1", "0",
])
def test_parse_serialize_fixed_point(text):
    w = parse_weight(text)
    again = parse_weight(format_weight(w))
    assert again == w
    assert format_weight(again) == format_weight(w)


def test_parse_examples():
    assert parse_weight("L^2 - 1") == L**2 - 1
    assert parse_weight("2*(L + 1)^2") == 2 * (L + 1) ** 2
    assert parse_weight("L^(-1/2)") == w_from_L_power(-half)


@pytest.mark.parametrize("text", ["", "L^", "L +", "(L", "x", "(L+1)^(1/2)", "1/(L-L)", "L L"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_weight(text)


# -- properties ----------------------------------------------------------

exponents = st.fractions(min_value=0, max_value=4, max_denominator=3)
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=2)


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(exponents, coeffs, max_size=4))
    return MotivicWeight.polynomial(terms)


@st.composite
def weights(draw):
    num = draw(polys())
    den = draw(polys())
    assume(not den.is_zero())
    return num / den


@settings(max_examples=25, deadline=None)
@given(weights(), weights(), weights())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(weights(), weights())
def test_dim_multiplicative(a, b):
    assume(not a.is_zero() and not b.is_zero())
    assert w_dim(a * b) == w_dim(a) + w_dim(b)


@settings(max_examples=60, deadline=None)
@given(weights(), weights())
def test_dim_of_sum(a, b):
    assume(not a.is_zero() and not b.is_zero())
    s = a + b
    if w_dim(a) != w_dim(b):
        assert w_dim(s) == max(w_dim(a), w_dim(b))
    else:
        assert w_dim(s) <= w_dim(a)


@settings(max_examples=40, deadline=None)
@given(polys())
def test_poly_coeffs_round_trip(p):
    assert MotivicWeight.polynomial(w_poly_coeffs(p)) == p
