"""Exact rational scalars.

Every quantity in this package is a :class:`fractions.Fraction`: arbitrary
precision, always in canonical form (positive denominator, gcd 1), with exact
arithmetic and a ``p/q`` string form that doubles as the wire format.
"""
from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: int | str | Fraction) -> Fraction:
    """Parse a rational from an int, a Fraction, or a ``p/q`` / ``p`` string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(value.strip())


def rat_str(value: Fraction) -> str:
    """Render a rational as ``p/q``, or just ``p`` when the denominator is 1."""
    return str(value)


def rat_tuple(text: str, sep: str = ",") -> tuple[Fraction, ...]:
    """Parse a separated list of rationals, e.g. ``"0,1/2,-2/3"``."""
    items = [piece for piece in text.split(sep) if piece.strip()]
    return tuple(rat(piece) for piece in items)
