from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omk.errors import DivisionByZero, NotDivisible, OrderMismatch, ParseError
from omk.exactnum import (
    Cyclotomic,
    cyc_add,
    cyc_embed,
    cyc_inv,
    cyc_make,
    cyc_mul,
    cyc_neg,
    cyc_to_complex,
    cyclotomic_polynomial,
    euler_phi,
    format_cyclotomic,
    parse_cyclotomic,
    poly,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_xgcd,
)

from oracles import cyclotomic_poly_numeric


def test_phi_small():
    assert cyclotomic_polynomial(1) == poly([-1, 1])
    assert cyclotomic_polynomial(4) == poly([1, 0, 1])


def test_phi_12_matches_numeric_root_product():
    expected = cyclotomic_poly_numeric(12)
    assert expected == [1, 0, -1, 0, 1]
    assert cyclotomic_polynomial(12) == poly(expected)


@pytest.mark.parametrize("n", range(1, 41))
def test_phi_matches_numeric_oracle(n):
    p = cyclotomic_polynomial(n)
    assert p == poly(cyclotomic_poly_numeric(n))
    assert p[-1] == 1 and all(c.denominator == 1 for c in p)


def test_zeta4_cubed():
    assert cyc_make(4, [0, 0, 0, 1]) == -Cyclotomic.zeta(4)


def test_zero_canonical():
    for n in (1, 5, 12):
        z = cyc_make(n, [])
        assert z.is_zero() and len(z.coeffs) == euler_phi(n)


def test_zeta6_plus_inverse():
    a = cyc_make(6, [0, 1, 0, 0, 0, 1])
    # numeric oracle: 2 cos(pi/3)
    assert round(cyc_to_complex(a).real) == 1 and abs(cyc_to_complex(a).imag) < 1e-12
    assert a == 1


def test_basic_products():
    z4 = Cyclotomic.zeta(4)
    assert cyc_mul(z4, z4) == -1
    a = parse_cyclotomic("1/3*z - 2", 7)
    assert cyc_mul(a, Cyclotomic.one(7)) == a


def test_product_against_numeric():
    z = Cyclotomic.zeta(5)
    a = (1 + z) * (1 + z**4)
    expected = (1 + cyc_to_complex(z)) * (1 + cyc_to_complex(z**4))
    assert abs(cyc_to_complex(a) - expected) < 1e-9
    assert a == 2 + z + z**4


def test_inverse():
    assert cyc_inv(Cyclotomic.one(9)) == 1
    for n in (3, 5, 8, 12):
        z = Cyclotomic.zeta(n)
        assert cyc_inv(z) == Cyclotomic.zeta(n, n - 1)
    a = parse_cyclotomic("1 + z", 3)
    assert cyc_inv(a) == -Cyclotomic.zeta(3)
    assert a * cyc_inv(a) == 1


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        cyc_inv(Cyclotomic.zero(5))
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.one(5) / Cyclotomic.zero(5)


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        cyc_add(Cyclotomic.zeta(3), Cyclotomic.zeta(4))
    with pytest.raises(OrderMismatch):
        cyc_mul(Cyclotomic.zeta(3), Cyclotomic.zeta(4))


def test_embed_examples():
    assert cyc_embed(Cyclotomic.zeta(2), 4) == Cyclotomic.zeta(4, 2) == -1
    c = Cyclotomic.rational(3, Fraction(5, 7))
    assert cyc_embed(c, 12) == Cyclotomic.rational(12, Fraction(5, 7))
    a = cyc_embed(parse_cyclotomic("z + 1", 3), 6)
    assert a == Cyclotomic.zeta(6, 2) + 1
    assert abs(cyc_to_complex(a) - (cyc_to_complex(Cyclotomic.zeta(3)) + 1)) < 1e-12


def test_embed_not_divisible():
    with pytest.raises(NotDivisible):
        cyc_embed(Cyclotomic.zeta(4), 6)


def test_parse_examples():
    z8 = Cyclotomic.zeta(8)
    assert parse_cyclotomic("1/2*z^3 - z", 8) == Fraction(1, 2) * z8**3 - z8
    assert parse_cyclotomic("0", 8).is_zero()
    assert parse_cyclotomic("z^8", 8) == 1
    assert parse_cyclotomic(" ( 1 + z ) - 3/4 ", 5) == Cyclotomic.zeta(5) + Fraction(1, 4)
    assert parse_cyclotomic("-1", 4) == -1


@pytest.mark.parametrize("text,pos", [
    ("", 0),
    ("1 +", 3),
    ("z^", 2),
    ("2*", 2),
    ("(z", 2),
    ("1/0", 2),
    ("x", 0),
    ("z z", 2),
])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_cyclotomic(text, 5)
    assert info.value.position == pos


def test_cyc_to_complex():
    assert cyc_to_complex(Cyclotomic.one(7)) == 1
    assert abs(cyc_to_complex(Cyclotomic.zeta(4)) - 1j) < 1e-12
    w = cyc_to_complex(Cyclotomic.zeta(3))
    assert abs(w.real + 0.5) < 1e-9 and abs(w.imag - 0.8660254037844386) < 1e-9


def test_negation_function():
    a = parse_cyclotomic("z - 2", 5)
    assert cyc_neg(a) + a == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 20])
def test_zeta_has_exact_order(n):
    z = Cyclotomic.zeta(n)
    assert all(z**k != 1 for k in range(1, n))
    assert z**n == 1


def test_poly_helpers():
    p, q = poly([1, 2, 1]), poly([1, 1])
    quo, rem = poly_divmod(p, q)
    assert quo == q and rem == ()
    assert poly_gcd(poly_mul(p, poly([3, 1])), poly_mul(q, poly([5, 1]))) == q
    g, s, t = poly_xgcd(poly([2, 1]), poly([1, 0, 1]))
    assert g == (1,)
    assert poly(a + b for a, b in zip(
        list(poly_mul(s, poly([2, 1]))) + [0] * 4, list(poly_mul(t, poly([1, 0, 1]))) + [0] * 4)
    ) == (1,)


# -- properties ----------------------------------------------------------

ORDERS = st.sampled_from([3, 4, 5, 7, 8, 12])
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cyc_values(draw, order=None):
    n = draw(ORDERS) if order is None else order
    coeffs = draw(st.lists(small, min_size=0, max_size=n))
    return cyc_make(n, coeffs)


@st.composite
def same_order_triples(draw):
    n = draw(ORDERS)
    return draw(cyc_values(n)), draw(cyc_values(n)), draw(cyc_values(n))


@settings(max_examples=60, deadline=None)
@given(same_order_triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(same_order_triples(), st.sampled_from([2, 3, 5]))
def test_embed_is_ring_homomorphism(t, k):
    a, b, _ = t
    m = a.order * k
    assert (a * b).embed(m) == a.embed(m) * b.embed(m)
    assert (a + b).embed(m) == a.embed(m) + b.embed(m)


@settings(max_examples=60, deadline=None)
@given(cyc_values())
def test_parse_serialize_round_trip(a):
    text = format_cyclotomic(a)
    b = parse_cyclotomic(text, a.order)
    assert b == a
    assert format_cyclotomic(b) == text


@settings(max_examples=60, deadline=None)
@given(same_order_triples())
def test_numeric_consistency(t):
    a, b, _ = t
    lhs = cyc_to_complex(a * b)
    rhs = cyc_to_complex(a) * cyc_to_complex(b)
    assert abs(lhs - rhs) < 1e-6
