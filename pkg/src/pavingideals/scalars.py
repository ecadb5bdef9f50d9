"""Exact rational scalars.

Every number in this package is an exact rational: either a Python int or a
``fractions.Fraction``.  Fractions are always kept in lowest terms with a
positive denominator (the stdlib guarantees this), and no operation ever
rounds.  Ints are accepted everywhere a scalar is expected; they interoperate
with Fraction under arithmetic and compare/hash equal to the corresponding
Fraction, so mixed use is safe.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def as_scalar(value) -> Scalar:
    """Coerce ints, Fractions and 'p/q' strings to an exact scalar."""
    if isinstance(value, (int, Fraction)):
        return normalize_scalar(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def normalize_scalar(value: Scalar) -> Scalar:
    """Prefer int over Fraction-with-denominator-one (canonical and faster)."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def parse_rational(text: str) -> Scalar:
    """Parse 'n' or 'p/q' into an exact scalar."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return normalize_scalar(Fraction(int(num), int(den)))
    return int(text)


def format_rational(value: Scalar) -> str:
    """Render an exact scalar as 'n' or 'p/q' (lowest terms)."""
    value = normalize_scalar(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"
