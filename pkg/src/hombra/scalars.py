"""Ground field: arbitrary-precision rationals.

`fractions.Fraction` already guarantees everything we need (always reduced,
positive denominator, unique zero), so Scalar is just an alias.  What this
module adds is the strict text form used by the file format: "p" or "p/q"
with an optional sign, nothing else.
"""

from __future__ import annotations

import re
from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# Deliberately narrower than Fraction's constructor: no decimals, no exponents.
_SCALAR_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


def parse_scalar(text: str) -> Scalar:
    """Parse "p" or "p/q". Raises ValueError on malformed input,
    ZeroDivisionError on a zero denominator."""
    s = text.strip()
    if not _SCALAR_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


def format_scalar(x: Scalar) -> str:
    """Inverse of parse_scalar: "p" when the denominator is 1, else "p/q"."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def sub(x: Scalar, y: Scalar) -> Scalar:
    return x - y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def neg(x: Scalar) -> Scalar:
    return -x


def inverse(x: Scalar) -> Scalar:
    if x == 0:
        raise ZeroDivisionError("inverse of zero")
    return 1 / x
