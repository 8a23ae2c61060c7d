"""Exact rational helpers shared across the package.

All quantities (utilities, masses, grades, anchors) are Fraction-valued.
Serialization is the plain "p/q" form; decimal literals are rejected on
parse so that nothing silently passes through floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, ValidationError

ZERO = Fraction(0)
ONE = Fraction(1)

# integer, or integer/positive-integer; no decimals, no whitespace inside
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def ensure_unit(value: Fraction, label: str = "value") -> Fraction:
    """Return value unchanged after checking it lies in [0, 1]."""
    if not ZERO <= value <= ONE:
        raise ValidationError(f"{label} must lie in [0, 1], got {value}")
    return value


def unit_grid(denominator: int) -> tuple[Fraction, ...]:
    """All multiples of 1/denominator in [0, 1], in increasing order."""
    if denominator < 1:
        raise ValidationError(f"grid denominator must be >= 1, got {denominator}")
    return tuple(Fraction(k, denominator) for k in range(denominator + 1))


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" exactly; anything else (decimals included) fails."""
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise ParseError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" form ("p" when the denominator is 1)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
