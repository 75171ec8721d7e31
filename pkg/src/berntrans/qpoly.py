"""Dense univariate polynomials over exact rationals.

The same class stores polynomials in the transform variable q and polynomials
in the Appell variable y; only the interpretation differs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .rationals import rat, rat_str


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Polynomial ``sum coeffs[j] * t**j`` with no trailing zero coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int | str] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim([rat(c) for c in coeffs])

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def constant(cls, value: Fraction | int) -> "QPoly":
        return cls((rat(value),))

    @classmethod
    def monomial(cls, degree: int, coeff: Fraction | int = 1) -> "QPoly":
        return cls((0,) * degree + (rat(coeff),))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for j, c in enumerate(b):
            merged[j] += c
        return QPoly(merged)

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly | Fraction | int") -> "QPoly":
        if isinstance(other, (Fraction, int)):
            return QPoly(c * other for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __call__(self, point: Fraction | int) -> Fraction:
        """Exact evaluation by Horner's rule."""
        point = rat(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly(j * c for j, c in enumerate(self.coeffs) if j >= 1)

    def to_strings(self) -> list[str]:
        """Coefficients as ``p/q`` strings, index = power."""
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "QPoly":
        return cls(rat(item) for item in items)

    def __repr__(self) -> str:
        return f"QPoly({list(self.to_strings())})"
