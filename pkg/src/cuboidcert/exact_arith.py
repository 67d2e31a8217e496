"""Exact integer and rational scalars.

Python's ``int`` is the arbitrary-precision integer; rationals are
:class:`fractions.Fraction`, which already keeps ``gcd(num, den) == 1`` and
``den > 0`` and compares by cross-multiplication.  This module pins those
invariants behind a small function surface and adds the decimal-string
codec used by the polynomial file format.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

Int = int
Rat = Fraction


class ZeroDenominator(ZeroDivisionError):
    """Raised when a rational is built with denominator 0."""


def int_gcd(a: int, b: int) -> int:
    """Nonnegative gcd; ``int_gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def int_lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a // int_gcd(a, b) * b)


def rat_canonical(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"{num}/0")
    return Fraction(num, den)


def as_rat(x) -> Fraction:
    """Coerce an int or rational-like value to ``Fraction`` without floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def is_integral(x) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


def parse_int(text: str) -> int:
    text = text.strip()
    body = text[1:] if text[:1] in "+-" else text
    if not body.isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def parse_rat(text: str) -> Fraction:
    """Parse ``"-6250"`` or ``"159/5"``; rejects floats and exponents."""
    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(parse_int(num))
    return rat_canonical(parse_int(num), parse_int(den))


def format_int(n: int) -> str:
    return str(int(n))


def format_rat(x) -> str:
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def lcm_of_denominators(values) -> int:
    out = 1
    for v in values:
        if isinstance(v, Fraction):
            out = math.lcm(out, v.denominator)
    return out
