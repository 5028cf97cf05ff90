"""Exact rational scalars.

Every coefficient in the engine is a `fractions.Fraction`, which already
guarantees the canonical reduced form (gcd(p,q)=1, q>0).  This module only
adds the string codec used by all JSON interfaces: scalars travel as
reduced-fraction strings "p/q", with the integer shorthand "p" allowed.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

Scalar = Fraction


def as_scalar(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational scalar: {value!r}") from exc
    raise ParseError(f"not a rational scalar: {value!r}")


def format_scalar(x: Fraction) -> str:
    """Render as "p" or "p/q"; inverse of as_scalar, bit-exact."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
