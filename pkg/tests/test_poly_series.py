"""Polynomials, truncated series, and the rational wire format."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fubini.poly import Polynomial, gamma_weight_integral
from fubini.rational import as_rational, format_rational, parse_rational
from fubini.series import TruncatedSeries

F = Fraction

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=9
)


def poly_strategy(max_len=6):
    return st.lists(rationals, min_size=0, max_size=max_len).map(Polynomial)


# --- rational boundary ---


def test_wire_format_roundtrip_examples():
    assert format_rational(F(-3, 6)) == "-1/2"
    assert format_rational(F(4, 2)) == "2"
    assert parse_rational("18/25") == F(18, 25)
    assert parse_rational("-7/2") == F(-7, 2)
    assert parse_rational("+3") == 3


@given(rationals)
def test_wire_format_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize(
    "bad", ["", "1.5", "1/0", "/2", "1/", "1//2", "a", "2/-3", "1 /2"]
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError, match="invalid rational"):
        parse_rational(bad)


def test_as_rational_rejects_float():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational(3) == F(3)
    assert as_rational(F(1, 3)) == F(1, 3)


@given(rationals, rationals)
def test_field_axioms(a, b):
    assert a + b == b + a
    assert a * b == b * a
    if a and b:
        assert (a / b) * (b / a) == 1


# --- polynomials ---


def test_eval_examples():
    assert Polynomial().evaluate(F(7, 2)) == 0
    assert Polynomial([0, 1, 2]).evaluate(1) == 3
    assert Polynomial([0, F(1, 2), 2]).evaluate(1) == F(5, 2)


def test_derivative_examples():
    assert Polynomial([0, 1, 2]).derivative() == Polynomial([1, 4])
    assert Polynomial([5]).derivative(3) == Polynomial()
    assert Polynomial([0, 0, 0, 1]).derivative(2) == Polynomial([0, 6])
    p = Polynomial([1, 2, 3])
    assert p.derivative(0) == p


def test_trailing_zeros_normalized():
    assert Polynomial([1, 0, 0]) == Polynomial([1])
    assert Polynomial([0, 0]).degree == -math.inf
    assert Polynomial([0, 1]).degree == 1
    assert not Polynomial([0])
    assert Polynomial([F(1, 2)])


def test_scale_argument():
    p = Polynomial([1, 2, 3])  # 1 + 2x + 3x^2
    q = p.scale_argument(F(1, 2))
    assert q == Polynomial([1, 1, F(3, 4)])
    assert q.evaluate(2) == p.evaluate(1)


@given(poly_strategy(), poly_strategy(), rationals)
def test_poly_ring_respects_evaluation(p, q, x):
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x)


@given(poly_strategy(), poly_strategy())
def test_derivative_is_linear(p, q):
    assert (p + q).derivative() == p.derivative() + q.derivative()


@given(poly_strategy(4), poly_strategy(4))
def test_derivative_product_rule(p, q):
    lhs = (p * q).derivative()
    assert lhs == p.derivative() * q + p * q.derivative()


def test_gamma_weight_integral_examples():
    assert gamma_weight_integral(Polynomial([0, 0, 1]), 1) == 2
    assert gamma_weight_integral(Polynomial([1]), 2) == 1
    assert gamma_weight_integral(Polynomial([0, 1]), 3) == 6
    with pytest.raises(ValueError):
        gamma_weight_integral(Polynomial([1]), 0)


@pytest.mark.parametrize("k", range(21))
def test_gamma_weight_integral_monomials(k):
    # int_0^inf y^k e^{-y} dy = k!
    assert gamma_weight_integral(Polynomial.monomial(k), 1) == math.factorial(k)


# --- truncated series ---


def series_strategy(order, zero_constant=False):
    first = st.just(F(0)) if zero_constant else rationals
    rest = st.lists(rationals, min_size=order, max_size=order)
    return st.tuples(first, rest).map(
        lambda t: TruncatedSeries([t[0]] + t[1])
    )


def test_series_mul_examples():
    one_plus_t = TruncatedSeries([1, 1, 0])
    assert (one_plus_t * one_plus_t).coeffs == (1, 2, 1)
    geom = TruncatedSeries([1, 1, 1])
    assert (geom * TruncatedSeries([1, -1, 0])).coeffs == (1, 0, 0)


def test_series_order_mismatch():
    with pytest.raises(ValueError, match="order mismatch"):
        TruncatedSeries([1, 2]) * TruncatedSeries([1, 2, 3])


def test_series_reciprocal_examples():
    geom = TruncatedSeries([1, -1, 0, 0]).reciprocal()
    assert geom.coeffs == (1, 1, 1, 1)
    assert TruncatedSeries([1, 0, 0]).reciprocal().coeffs == (1, 0, 0)
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1]).reciprocal()


def test_series_reciprocal_fubini_values():
    # 1/(1-t): t^n/n! coefficients are the degenerate Fubini numbers at
    # lambda = 1, x = 1
    s = TruncatedSeries([1, -1, 0]).reciprocal()
    assert [s.egf_coefficient(n) for n in range(3)] == [1, 1, 2]


def test_series_exp_examples():
    assert TruncatedSeries([0, 0, 0]).exp().coeffs == (1, 0, 0)
    e = TruncatedSeries([0, 1, 0, 0]).exp()
    assert e.coeffs == (1, 1, F(1, 2), F(1, 6))
    assert [e.egf_coefficient(n) for n in range(4)] == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1]).exp()


def test_egf_conversion_roundtrip():
    values = [F(1), F(3, 2), F(-2), F(7)]
    s = TruncatedSeries.from_egf(values)
    assert s.egf_coefficients() == values
    assert s.coeffs == (1, F(3, 2), -1, F(7, 6))
    with pytest.raises(ValueError):
        s.egf_coefficient(4)


@settings(max_examples=60)
@given(series_strategy(5))
def test_reciprocal_is_inverse(a):
    if a.coeffs[0] == 0:
        with pytest.raises(ZeroDivisionError):
            a.reciprocal()
        return
    prod = a * a.reciprocal()
    assert prod.coeffs == (1,) + (F(0),) * 5


@settings(max_examples=60)
@given(series_strategy(5, zero_constant=True), series_strategy(5, zero_constant=True))
def test_exp_is_homomorphism(a, b):
    assert ((a + b).exp()).coeffs == (a.exp() * b.exp()).coeffs


@settings(max_examples=40)
@given(series_strategy(4), series_strategy(4), series_strategy(4))
def test_series_ring_axioms(a, b, c):
    assert ((a + b) * c).coeffs == (a * c + b * c).coeffs
    assert (a * b).coeffs == (b * a).coeffs


def test_series_scalar_ops():
    s = TruncatedSeries([1, 2, 3])
    assert (s - 1).coeffs == (0, 2, 3)
    assert (1 - s).coeffs == (0, -2, -3)
    assert (s * F(1, 2)).coeffs == (F(1, 2), 1, F(3, 2))
    assert (s**0).coeffs == (1, 0, 0)
    assert (s**2).coeffs == (s * s).coeffs
