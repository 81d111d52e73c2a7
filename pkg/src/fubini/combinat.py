"""Exact tables of classical and degenerate combinatorial numbers.

Integer-valued tables (factorials, binomials, Stirling and Lah numbers)
return Python ints; everything parameterized by the degeneracy parameter
``lam`` returns Fractions. Tables grow on demand and are never evicted.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import hooks
from .poly import Polynomial
from .rational import as_rational


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial needs n >= 0")
    return math.factorial(n) + hooks.shift("factorial", (n,))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, generalized to any integer upper index.

    C(n, k) = n(n-1)...(n-k+1) / k! for k >= 0, and 0 for k < 0. For
    negative n this gives C(n, k) = (-1)**k C(-n+k-1, k).
    """
    if k < 0:
        return 0 + hooks.shift("binomial", (n, k))
    if n >= 0:
        val = math.comb(n, k) if k <= n else 0
    else:
        val = (-1) ** k * math.comb(-n + k - 1, k)
    return val + hooks.shift("binomial", (n, k))


# Row-by-row tables for the Stirling recurrences; row n holds entries 0..n.
_s1_rows: list[list[int]] = [[1]]
_s2_rows: list[list[int]] = [[1]]


def _grow_s1(n: int) -> list[int]:
    while len(_s1_rows) <= n:
        m = len(_s1_rows)
        prev = _s1_rows[m - 1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = prev[k - 1] - (m - 1) * (prev[k] if k <= m - 1 else 0)
        _s1_rows.append(row)
    return _s1_rows[n]


def _grow_s2(n: int) -> list[int]:
    while len(_s2_rows) <= n:
        m = len(_s2_rows)
        prev = _s2_rows[m - 1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = (prev[k - 1] if k - 1 <= m - 1 else 0) + k * (
                prev[k] if k <= m - 1 else 0
            )
        _s2_rows.append(row)
    return _s2_rows[n]


def stirling1(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind: (x)_n = sum_k s(n,k) x**k."""
    if n < 0 or k < 0:
        raise ValueError("stirling1 needs n, k >= 0")
    val = _grow_s1(n)[k] if k <= n else 0
    return val + hooks.shift("stirling1", (n, k))


def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind (set partitions into k blocks)."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    val = _grow_s2(n)[k] if k <= n else 0
    return val + hooks.shift("stirling2", (n, k))


def lah(n: int, k: int) -> int:
    """Lah numbers: rising factorials expanded in falling factorials."""
    if n < 0 or k < 0:
        raise ValueError("lah needs n, k >= 0")
    if k > n or (k == 0 and n > 0):
        val = 0
    elif n == 0:
        val = 1
    else:
        val = math.factorial(n) // math.factorial(k) * math.comb(n - 1, k - 1)
    return val + hooks.shift("lah", (n, k))


@lru_cache(maxsize=None)
def _falling_factorial_poly(n: int, lam: Fraction) -> Polynomial:
    p = Polynomial([1])
    for j in range(n):
        p = p * Polynomial([-j * lam, 1])
    return p


def falling_factorial_poly(n: int, lam) -> Polynomial:
    """The degenerate falling factorial (x)_{n,lam} = x(x-lam)...(x-(n-1)lam).

    lam = 1 gives the classical falling factorial, lam = 0 gives x**n.
    """
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    return _falling_factorial_poly(n, as_rational(lam))


@lru_cache(maxsize=None)
def _stirling2_degenerate(n: int, k: int, lam: Fraction) -> Fraction:
    total = Fraction(0)
    for m in range(k, n + 1):
        s1 = stirling1(n, m)
        if s1:
            total += lam ** (n - m) * s1 * stirling2(m, k)
    return total


def stirling2_degenerate(n: int, k: int, lam) -> Fraction:
    """Degenerate Stirling numbers of the second kind.

    Connection coefficients of (x)_{n,lam} in the classical falling-factorial
    basis: (x)_{n,lam} = sum_k {n brace k}_lam (x)_k. Computed by composing
    the two classical basis changes, with lam**(n-m) weights.
    """
    if n < 0 or k < 0:
        raise ValueError("stirling2_degenerate needs n, k >= 0")
    if k > n:
        return Fraction(0)
    return _stirling2_degenerate(n, k, as_rational(lam))


def _partition_multiplicities(n: int, k: int, part: int):
    """Yield [(size, count), ...] with sum(count) = k, sum(size*count) = n."""
    if k == 0:
        if n == 0:
            yield []
        return
    if part < 1 or n < k or n > k * part:
        return
    for c in range(min(k, n // part), -1, -1):
        for rest in _partition_multiplicities(n - c * part, k - c, part - 1):
            yield [(part, c)] + rest if c else rest


def partial_bell(n: int, k: int, xs) -> Fraction:
    """Partial (incomplete) exponential Bell polynomial B_{n,k}(x_1, x_2, ...).

    Sums n! / prod(l_i! * (i!)**l_i) * prod(x_i**l_i) over all multiplicity
    vectors with sum l_i = k and sum i*l_i = n. Needs xs to supply at least
    x_1..x_{n-k+1}.
    """
    if n < 0 or not 0 <= k <= n:
        raise ValueError("partial_bell needs 0 <= k <= n")
    xs = [as_rational(x) for x in xs]
    if n > 0 and len(xs) < n - k + 1:
        raise ValueError(f"partial_bell(n={n}, k={k}) needs {n - k + 1} arguments")
    total = Fraction(0)
    for mult in _partition_multiplicities(n, k, n - k + 1):
        term = Fraction(factorial(n))
        for size, count in mult:
            term /= factorial(count) * factorial(size) ** count
            term *= xs[size - 1] ** count
        total += term
    return total


def _clear_caches() -> None:
    _falling_factorial_poly.cache_clear()
    _stirling2_degenerate.cache_clear()
    del _s1_rows[1:]
    del _s2_rows[1:]


hooks.register_cache_clearer(_clear_caches)
