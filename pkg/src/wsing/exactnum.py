"""Exact integer and rational helpers.

Rationals are plain :class:`fractions.Fraction` values, which already keep a
positive denominator and lowest terms. Python integers are unbounded, so
nothing here can overflow.
"""
from fractions import Fraction
import math

Ratio = Fraction

LESS, EQUAL, GREATER = -1, 0, 1


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError(f"gcd expects nonnegative integers, got {a}, {b}")
    return math.gcd(a, b)


def lcm(*args: int) -> int:
    """Least common multiple of one or more positive integers."""
    if not args:
        raise ValueError("lcm needs at least one argument")
    for x in args:
        if x < 1:
            raise ValueError(f"lcm expects positive integers, got {x}")
    return math.lcm(*args)


def ratio(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def cmp_ratio(x: Fraction, y: Fraction) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``.

    Decided by cross-multiplying numerators and denominators, so no rounding
    ever enters.
    """
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    return (lhs > rhs) - (lhs < rhs)


def format_ratio(x: Fraction) -> str:
    """Serialize as ``"p/q"``; integers keep the ``/1`` suffix."""
    return f"{x.numerator}/{x.denominator}"


def parse_ratio(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected p/q, got {text!r}")
    return ratio(int(num), int(den))
