"""Exact rational scalars and their wire format.

Every numeric value in this package is an arbitrary-precision rational
(`fractions.Fraction`, always in lowest terms with positive denominator).
Floats are rejected at construction boundaries so rounding can never enter
silently; integers pass through because they are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_WIRE_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def as_rational(value: int | Fraction | str) -> Fraction:
    """Coerce an exact value to Fraction, refusing floats."""
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass an int, Fraction, or 'p/q' string"
        )
    return Fraction(value)


def format_rational(value: int | Fraction) -> str:
    """Render in lowest terms as 'n' or '-p/q' (the wire format)."""
    return str(as_rational(value))


def parse_rational(text: str) -> Fraction:
    """Parse the wire format: an integer or p/q with positive denominator."""
    token = text.strip()
    if not _WIRE_RE.match(token):
        raise ValueError(f"invalid rational {token!r}: expected 'n' or 'p/q'")
    return Fraction(token)
