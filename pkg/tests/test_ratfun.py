from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redzeta.errors import NotExpandableError
from redzeta.ratfun import (
    Polynomial,
    RationalFunction,
    add,
    detect_functional_equation,
    display_factored,
    equals,
    mul,
    poly_gcd,
    render_polynomial,
    series,
    substitute_inverse,
)

P = Polynomial
RF = RationalFunction.from_polys
cyc = RationalFunction.cyclotomic_product

R_H_IDEAL = cyc([1], [1, 1, 3])
R_H_SUB = cyc([1, 1, 1], [1, 2, 2])
R_F23_IDEAL = cyc([1, 0, 0, 2, 0, 2, 0, 0, 1], [1, 1, 1, 3, 5, 6])
LW_PRINTED = cyc([1, 1, 1, 2, 2, 2, 2, 1, 1], [1, 1, 2, 3, 4, 5])


def test_polynomial_basics():
    p = P([1, 2, 0, 0])
    assert tuple(p.coeffs) == (1, 2)
    assert p.degree == 1
    assert P().is_zero() and P([0, 0]).is_zero()
    assert P([0, 0, 3]).valuation() == 2
    assert (P([1, 1]) * P([1, -1])) == P([1, 0, -1])
    q, r = P([1, 0, -1]).divmod(P([1, -1]))
    assert q == P([1, 1]) and r.is_zero()
    assert P([1, 2, 3])(2) == 17


def test_poly_gcd():
    g = poly_gcd(P([1, 0, -1]), P([1, -2, 1]))
    assert g.degree == 1 and g(1) == 0


def test_render_polynomial():
    assert render_polynomial(P([1, 0, 0, 2, 0, -1])) == "1+2T^3-T^5"
    assert render_polynomial(P([0, Fraction(1, 2)])) == "(1/2)T"
    assert render_polynomial(P()) == "0"
    assert render_polynomial(P([-1])) == "-1"


def test_mul_examples():
    a = RF([1], [1, -1])
    assert mul(a, a).den == P([1, -2, 1])
    assert equals(mul(R_H_IDEAL, R_H_IDEAL), R_H_IDEAL ** 2)


def test_add_examples():
    assert add(RF([0, 1], [1, -1]), RationalFunction.constant(1)) == RF([1], [1, -1])


def test_equals_examples():
    assert equals(RF(P.one_minus_power(2), P([1, -1]) * P.one_minus_power(2)), RF([1], [1, -1]))
    assert not equals(R_H_IDEAL, R_H_SUB)


def test_normalization():
    R = RF([2, 2], [4, -4])
    assert R.den[0] == 1
    assert R.num == P([Fraction(1, 2), Fraction(1, 2)])
    # common factor removed
    S = RF(P([1, 1]) * P([1, -1]), P([1, -1]) * P([1, 0, 1]))
    assert S.num == P([1, 1]) and S.den == P([1, 0, 1])
    # den(0) = 0: den made monic
    U = RF([1], [0, 0, 3])
    assert U.den == P([0, 0, 1]) and U.num == P([Fraction(1, 3)])


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RF([1], [0])


def test_substitute_inverse_examples():
    assert substitute_inverse(RF([1], [1, -1])) == RF([0, -1], [1, -1])
    assert substitute_inverse(R_H_IDEAL) == R_H_IDEAL * RF([0, 0, 0, 0, 0, -1])
    assert substitute_inverse(substitute_inverse(R_F23_IDEAL)) == R_F23_IDEAL


def test_series_examples():
    assert series(R_H_IDEAL, 3) == [1, 2, 3, 5]
    assert series(RF([1], [1, -1]), 4) == [1] * 5
    assert series(R_H_SUB, 2) == [1, 2, 5]
    with pytest.raises(NotExpandableError):
        series(RF([1], [0, 1]), 3)


def test_detect_examples():
    r = detect_functional_equation(R_H_SUB)
    assert (r.exists, r.epsilon, r.b) == (True, 1, 3)
    assert not detect_functional_equation(LW_PRINTED).exists
    one = detect_functional_equation(RationalFunction.constant(1))
    assert (one.exists, one.epsilon, one.b) == (True, 0, 0)
    r = detect_functional_equation(R_H_IDEAL)
    assert (r.epsilon, r.b) == (1, 5)
    r = detect_functional_equation(R_F23_IDEAL)
    assert (r.epsilon, r.b) == (0, 9)


def test_detect_rejects_non_unit_constant():
    assert not detect_functional_equation(RF([1, 2])).exists


def test_display_factored_examples():
    assert display_factored(R_H_IDEAL) == "1 / (1-T)^2 (1-T^3)"
    assert display_factored(RF([1], [1, -2, 1])) == "1 / (1-T)^2"
    assert display_factored(R_F23_IDEAL) == "(1+2T^3+2T^5+T^8) / (1-T)^3 (1-T^3) (1-T^5) (1-T^6)"
    assert display_factored(RationalFunction.constant(0)) == "0"
    assert display_factored(RF([1, 1])) == "1+T"
    assert display_factored(RF([1], [1, 1, 1])) == "1 / (1+T+T^2)"


# --- properties -------------------------------------------------------------

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def rational_functions(draw, positive_den0=True):
    num = draw(st.lists(small, min_size=1, max_size=4))
    den = draw(st.lists(small, min_size=1, max_size=4))
    if positive_den0:
        den[0] = Fraction(1)
    if not any(den):
        den = [Fraction(1)]
    return RF(num, den)


@settings(max_examples=80, deadline=None)
@given(rational_functions(), rational_functions())
def test_series_of_product_is_convolution(a, b):
    M = 8
    sa, sb, sab = series(a, M), series(b, M), series(mul(a, b), M)
    assert sab == [sum(sa[k] * sb[n - k] for k in range(n + 1)) for n in range(M + 1)]


@settings(max_examples=60, deadline=None)
@given(rational_functions(), rational_functions(), rational_functions())
def test_equals_is_an_equivalence(a, b, c):
    assert equals(a, a)
    assert equals(a, b) == equals(b, a)
    b2 = RF(b.num * P([1, 1]), b.den * P([1, 1]))
    assert equals(b, b2)
    if equals(a, b) and equals(b, c):
        assert equals(a, c)


@settings(max_examples=60, deadline=None)
@given(rational_functions(), st.fractions(min_value=-5, max_value=5).filter(lambda x: x != 0))
def test_detect_invariant_under_scaling(R, c):
    if R.is_zero():
        return
    a = detect_functional_equation(R)
    b = detect_functional_equation(R * RationalFunction.constant(c))
    assert a == b


@settings(max_examples=60, deadline=None)
@given(rational_functions())
def test_detect_on_inverse_is_consistent(R):
    if R.is_zero():
        return
    a = detect_functional_equation(R)
    b = detect_functional_equation(substitute_inverse(R))
    assert a.exists == b.exists
    if a.exists:
        assert b.b == -a.b and b.epsilon == a.epsilon


@settings(max_examples=60, deadline=None)
@given(rational_functions(positive_den0=False))
def test_substitute_inverse_involution(R):
    assert equals(substitute_inverse(substitute_inverse(R)), R)


@settings(max_examples=60, deadline=None)
@given(rational_functions(), rational_functions())
def test_add_matches_series(a, b):
    M = 6
    assert series(add(a, b), M) == [x + y for x, y in zip(series(a, M), series(b, M))]
