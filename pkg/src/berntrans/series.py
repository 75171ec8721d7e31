"""Truncated formal power series over exact rationals.

A ``Series`` of order N stores the coefficients of z^0 .. z^N; every
operation truncates back to order N, so two series interoperate only when
their orders agree. Analytic operations (reciprocal, exp, log, rational
powers) follow the usual coefficient recurrences and stay exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .rationals import rat, rat_str


class SeriesError(ValueError):
    """Violated series precondition (order mismatch or bad constant term)."""


class Series:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Fraction | int | str] = ()):
        if order < 0:
            raise SeriesError("series order must be nonnegative")
        items = [rat(c) for c in coeffs]
        if len(items) > order + 1:
            raise SeriesError("more coefficients than the order allows")
        items.extend(Fraction(0) for _ in range(order + 1 - len(items)))
        self.order = order
        self.coeffs: tuple[Fraction, ...] = tuple(items)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls(order)

    @classmethod
    def constant(cls, value: Fraction | int, order: int) -> "Series":
        return cls(order, (rat(value),))

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series z."""
        return cls(order, (0, 1))

    @classmethod
    def geometric(cls, ratio: Fraction, order: int) -> "Series":
        """1/(1 - ratio*z) truncated: coefficients ratio^k."""
        out = [Fraction(1)]
        for _ in range(order):
            out.append(out[-1] * ratio)
        return cls(order, out)

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise SeriesError("series orders differ")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Series":
        return Series(self.order, (-a for a in self.coeffs))

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series | Fraction | int") -> "Series":
        if isinstance(other, (Fraction, int)):
            return Series(self.order, (c * other for c in self.coeffs))
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(n, out)

    __rmul__ = __mul__

    def coefficient(self, k: int) -> Fraction:
        if k > self.order:
            raise SeriesError(f"coefficient {k} beyond series order {self.order}")
        return self.coeffs[k]

    def compose(self, inner: "Series") -> "Series":
        """self(inner(z)) through the shared order; inner must vanish at 0."""
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        acc = Series.constant(self.coeffs[-1], self.order)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + Series.constant(c, self.order)
        return acc

    def reciprocal(self) -> "Series":
        """1/self for series with constant term 1."""
        if self.coeffs[0] != 1:
            raise SeriesError("reciprocal requires constant term 1")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            out[k] = -sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
        return Series(n, out)

    def exp(self) -> "Series":
        """exp(self) for series with zero constant term: u' = s'·u."""
        if self.coeffs[0] != 0:
            raise SeriesError("exp requires zero constant term")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            out[k] = sum(i * self.coeffs[i] * out[k - i] for i in range(1, k + 1)) / k
        return Series(n, out)

    def log(self) -> "Series":
        """log(self) for series with constant term 1: l' = s'/s."""
        if self.coeffs[0] != 1:
            raise SeriesError("log requires constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            out[k] = self.coeffs[k] - sum(
                i * out[i] * self.coeffs[k - i] for i in range(1, k)
            ) / k
        return Series(n, out)

    def pow(self, exponent: Fraction | int) -> "Series":
        """self**exponent for rational exponent, via exp(exponent*log(self))."""
        if self.coeffs[0] != 1:
            raise SeriesError("pow requires constant term 1")
        return (self.log() * rat(exponent)).exp()

    def to_strings(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Series(order={self.order}, coeffs={self.to_strings()})"
