"""Moment-weighted (probabilistic) degenerate Stirling, Bell and Fubini objects.

S_k denotes the sum of k independent copies of Y. Sum moments come from the
binomial convolution recurrence; the probabilistic degenerate Stirling
numbers {n brace k}_{Y,lam} are computed from the k-th finite difference of
the sum moments, which is the defining alternating sum. Everything is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import hooks
from .combinat import binomial, factorial, falling_factorial_poly
from .distributions import Distribution
from .poly import Polynomial
from .rational import as_rational
from .series import TruncatedSeries


@lru_cache(maxsize=None)
def _raw_moment(dist: Distribution, m: int) -> Fraction:
    return as_rational(dist.moment_formula(m))


def raw_moment(dist: Distribution, m: int) -> Fraction:
    """E[Y**m], exactly; m >= 0."""
    if m < 0:
        raise ValueError("moment order must be >= 0")
    return _raw_moment(dist, m) + hooks.shift("raw_moment", (dist, m))


@lru_cache(maxsize=None)
def _sum_raw_moment(dist: Distribution, k: int, m: int) -> Fraction:
    if k == 0:
        return Fraction(1 if m == 0 else 0)
    total = Fraction(0)
    for j in range(m + 1):
        contrib = raw_moment(dist, j)
        if contrib:
            total += binomial(m, j) * _sum_raw_moment(dist, k - 1, m - j) * contrib
    return total


def sum_raw_moment(dist: Distribution, k: int, m: int) -> Fraction:
    """E[S_k**m] for the sum S_k of k independent copies of Y."""
    if k < 0 or m < 0:
        raise ValueError("sum moments need k, m >= 0")
    return _sum_raw_moment(dist, k, m) + hooks.shift("sum_moment", (dist, k, m))


@lru_cache(maxsize=None)
def _degenerate_moment(dist: Distribution, n: int, lam: Fraction) -> Fraction:
    poly = falling_factorial_poly(n, lam)
    return sum(
        (c * raw_moment(dist, m) for m, c in enumerate(poly.coeffs) if c),
        start=Fraction(0),
    )


def degenerate_moment(dist: Distribution, n: int, lam) -> Fraction:
    """E[(Y)_{n,lam}]: the raw moments contracted against (x)_{n,lam}."""
    if n < 0:
        raise ValueError("moment order must be >= 0")
    return _degenerate_moment(dist, n, as_rational(lam))


@lru_cache(maxsize=None)
def _sum_degenerate_moment(dist: Distribution, k: int, n: int, lam: Fraction) -> Fraction:
    poly = falling_factorial_poly(n, lam)
    return sum(
        (c * sum_raw_moment(dist, k, m) for m, c in enumerate(poly.coeffs) if c),
        start=Fraction(0),
    )


def sum_degenerate_moment(dist: Distribution, k: int, n: int, lam) -> Fraction:
    """E[(S_k)_{n,lam}] for the k-fold independent sum."""
    if k < 0 or n < 0:
        raise ValueError("sum moments need k, n >= 0")
    return _sum_degenerate_moment(dist, k, n, as_rational(lam))


@lru_cache(maxsize=None)
def _prob_stirling2(dist: Distribution, n: int, k: int, lam: Fraction) -> Fraction:
    total = Fraction(0)
    for j in range(k + 1):
        term = sum_degenerate_moment(dist, j, n, lam)
        if term:
            total += binomial(k, j) * (-1) ** (k - j) * term
    return total / factorial(k)


def prob_stirling2(dist: Distribution, n: int, k: int, lam) -> Fraction:
    """Probabilistic degenerate Stirling numbers {n brace k}_{Y,lam}.

    Defined through the k-th finite difference of j -> E[(S_j)_{n,lam}]
    divided by k!; zero for k > n.
    """
    if n < 0 or k < 0:
        raise ValueError("prob_stirling2 needs n, k >= 0")
    if k > n:
        return Fraction(0)
    return _prob_stirling2(dist, n, k, as_rational(lam))


def prob_bell_poly(dist: Distribution, n: int, lam) -> Polynomial:
    """phi^Y_{n,lam}(x) = sum_k {n brace k}_{Y,lam} x**k."""
    return Polynomial([prob_stirling2(dist, n, k, lam) for k in range(n + 1)])


def prob_fubini_poly(dist: Distribution, n: int, lam) -> Polynomial:
    """F^Y_{n,lam}(x) = sum_k {n brace k}_{Y,lam} k! x**k."""
    return Polynomial(
        [prob_stirling2(dist, n, k, lam) * factorial(k) for k in range(n + 1)]
    )


def prob_fubini_poly_order(dist: Distribution, n: int, r: int, lam) -> Polynomial:
    """Order-r variant with weight C(k+r-1, k) k!; r = 1 gives prob_fubini_poly."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    return Polynomial(
        [
            binomial(k + r - 1, k) * factorial(k) * prob_stirling2(dist, n, k, lam)
            for k in range(n + 1)
        ]
    )


def mgf_degenerate_series(dist: Distribution, lam, order: int) -> TruncatedSeries:
    """Truncation of E[e_lam^Y(t)]: EGF coefficients are E[(Y)_{n,lam}]."""
    if order < 0:
        raise ValueError("series order must be >= 0")
    lam = as_rational(lam)
    return TruncatedSeries(
        [degenerate_moment(dist, n, lam) / math.factorial(n) for n in range(order + 1)]
    )


def _clear_caches() -> None:
    _raw_moment.cache_clear()
    _sum_raw_moment.cache_clear()
    _degenerate_moment.cache_clear()
    _sum_degenerate_moment.cache_clear()
    _prob_stirling2.cache_clear()


hooks.register_cache_clearer(_clear_caches)
