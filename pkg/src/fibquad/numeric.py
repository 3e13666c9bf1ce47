"""Exact integer and rational primitives shared by every other module.

Python ints are already arbitrary precision, and fractions.Fraction keeps
gcd(|num|, den) = 1 with den > 0 as construction invariants, so both are
used directly. Everything here is pure and exact; no floating point.
"""

from fractions import Fraction
from math import gcd as _gcd, isqrt as _isqrt
from typing import Optional, Union

# Canonical reduced rational: den > 0, gcd(|num|, den) = 1, sign on the
# numerator. Fraction guarantees all three on construction.
Rat = Fraction

Number = Union[int, Fraction]


def gcd(x: int, y: int) -> int:
    """Non-negative greatest common divisor; gcd(0, 0) is 0."""
    return _gcd(x, y)


def isqrt_exact(x: int) -> Optional[int]:
    """Return r with r*r == x, or None when x is not a perfect square.

    Raises ValueError for negative input.
    """
    if x < 0:
        raise ValueError(f"isqrt_exact of negative value {x}")
    r = _isqrt(x)
    return r if r * r == x else None


def rat(num: int, den: int = 1) -> Rat:
    """Canonical reduced rational. A zero denominator raises ZeroDivisionError."""
    return Fraction(num, den)


def is_integral(x: Number) -> bool:
    """True when x is a whole number (denominator 1 after reduction)."""
    return isinstance(x, int) or x.denominator == 1


def number_str(x: Number) -> str:
    """Decimal-string wire form used by JSON and CSV output.

    Integers and whole rationals render as plain decimal strings, other
    rationals as "num/den", so consumers never need 64-bit parsing.
    """
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)
