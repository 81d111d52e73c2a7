"""Degenerate polynomial families: exponentials, Bell and Fubini polynomials.

The degenerate exponential e_lam^x(t) has EGF coefficients (x)_{n,lam}; the
families below are its images under the standard basis weights: Bell uses
{n brace k}_lam, Fubini adds k!, the order-r Fubini adds the rising binomial
weight C(k+r-1, k).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import hooks
from .combinat import binomial, factorial, stirling2_degenerate
from .poly import Polynomial
from .rational import as_rational
from .series import TruncatedSeries


def degenerate_exp_series(x, lam, order: int) -> TruncatedSeries:
    """Truncation of the degenerate exponential e_lam^x(t) = (1+lam*t)^(x/lam).

    The coefficient of t**n/n! is the degenerate falling factorial (x)_{n,lam};
    lam = 0 degenerates to the ordinary exp(x*t).
    """
    if order < 0:
        raise ValueError("series order must be >= 0")
    x = as_rational(x)
    lam = as_rational(lam)
    coeffs = []
    val = Fraction(1)
    for n in range(order + 1):
        if n:
            val *= x - (n - 1) * lam
        coeffs.append(val / math.factorial(n))
    return TruncatedSeries(coeffs)


@lru_cache(maxsize=None)
def _degenerate_bell_poly(n: int, lam: Fraction) -> Polynomial:
    return Polynomial([stirling2_degenerate(n, k, lam) for k in range(n + 1)])


def degenerate_bell_poly(n: int, lam) -> Polynomial:
    """phi_{n,lam}(x) = sum_k {n brace k}_lam x**k."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _degenerate_bell_poly(n, as_rational(lam))


@lru_cache(maxsize=None)
def _degenerate_fubini_poly(n: int, lam: Fraction) -> Polynomial:
    return Polynomial(
        [stirling2_degenerate(n, k, lam) * factorial(k) for k in range(n + 1)]
    )


def degenerate_fubini_poly(n: int, lam) -> Polynomial:
    """F_{n,lam}(x) = sum_k {n brace k}_lam k! x**k."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _degenerate_fubini_poly(n, as_rational(lam))


def classical_fubini_poly(n: int) -> Polynomial:
    """Ordered-set-partition polynomial F_n(x); the lam = 0 specialization."""
    return degenerate_fubini_poly(n, 0)


@lru_cache(maxsize=None)
def _degenerate_fubini_poly_order(n: int, r: int, lam: Fraction) -> Polynomial:
    return Polynomial(
        [
            binomial(k + r - 1, k) * factorial(k) * stirling2_degenerate(n, k, lam)
            for k in range(n + 1)
        ]
    )


def degenerate_fubini_poly_order(n: int, r: int, lam) -> Polynomial:
    """Order-r variant F^(r)_{n,lam}(x): weight C(k+r-1, k) k! {n brace k}_lam.

    r = 1 reduces to degenerate_fubini_poly.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if r < 1:
        raise ValueError("order r must be >= 1")
    return _degenerate_fubini_poly_order(n, r, as_rational(lam))


def _clear_caches() -> None:
    _degenerate_bell_poly.cache_clear()
    _degenerate_fubini_poly.cache_clear()
    _degenerate_fubini_poly_order.cache_clear()


hooks.register_cache_clearer(_clear_caches)
