"""Appell polynomial families and the identities that mix them with sequences.

An Appell family is determined by constants c_0 = 1, c_1, c_2, ... through
f_n(y) = sum_k C(n,k) c_{n-k} y^k, equivalently by the exponential generating
function F(t) e^{yt} with F(t) = sum c_n t^n / n!. Bernoulli and Euler
families of rational order get their constants from exact truncated-series
powers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import sequences as seqs
from . import transform
from .grid import IdentityCheck
from .qpoly import QPoly
from .rationals import rat, rat_str
from .series import Series
from .specialfn import DomainError, binomial, comb_int


@dataclass(frozen=True)
class GenericAppell:
    """Family given by an explicit finite constants table (c_0 must be 1)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[0] != 1:
            raise DomainError("generic appell family needs c_0 = 1")


@dataclass(frozen=True)
class BernoulliOrder:
    """Constants from (t/(e^t - 1))^alpha, rational alpha allowed."""

    alpha: Fraction


@dataclass(frozen=True)
class EulerOrder:
    """Constants from (2/(e^t + 1))^alpha, rational alpha allowed."""

    alpha: Fraction


AppellSpec = Union[GenericAppell, BernoulliOrder, EulerOrder]


def monomial_family(order: int) -> GenericAppell:
    """F(t) = 1, so f_n(y) = y^n; handy as the degenerate reference family."""
    return GenericAppell((Fraction(1),) + (Fraction(0),) * order)


@lru_cache(maxsize=None)
def family_constants(spec: AppellSpec, count: int) -> tuple[Fraction, ...]:
    """The constants c_0 .. c_{count-1} of the family."""
    if count < 1:
        return ()
    if isinstance(spec, GenericAppell):
        if count > len(spec.coeffs):
            raise DomainError(
                f"generic appell family holds {len(spec.coeffs)} constants, "
                f"{count} requested"
            )
        return spec.coeffs[:count]
    order = count - 1
    if isinstance(spec, BernoulliOrder):
        base = Series(order, [Fraction(1, math.factorial(k + 1)) for k in range(order + 1)])
        gf = base.pow(-spec.alpha)  # ((e^t-1)/t)^(-alpha)
    elif isinstance(spec, EulerOrder):
        half = [Fraction(1)] + [Fraction(1, 2 * math.factorial(k)) for k in range(1, order + 1)]
        gf = Series(order, half).pow(-spec.alpha)  # ((e^t+1)/2)^(-alpha)
    else:
        raise DomainError(f"unknown appell family {spec!r}")
    return tuple(math.factorial(k) * gf.coeffs[k] for k in range(count))


@lru_cache(maxsize=None)
def appell_poly(spec: AppellSpec, n: int) -> QPoly:
    """f_n as a monic degree-n polynomial in y."""
    if n < 0:
        raise DomainError("appell_poly needs n >= 0")
    c = family_constants(spec, n + 1)
    return QPoly(comb_int(n, k) * c[n - k] for k in range(n + 1))


@lru_cache(maxsize=None)
def appell_value(spec: AppellSpec, n: int, y: Fraction) -> Fraction:
    return appell_poly(spec, n)(y)


def generating_series(spec: AppellSpec, order: int) -> Series:
    """F(t) truncated: coefficient of t^k is c_k / k!."""
    c = family_constants(spec, order + 1)
    return Series(order, [c[k] / math.factorial(k) for k in range(order + 1)])


def operator_identity(spec: AppellSpec, n: int, q: Fraction, y: Fraction) -> IdentityCheck:
    """Weighted sum of f_k values against n application s of p -> (1-q)p + q p'.

    lhs = sum_k C(n,k) (n!/k!) f_k(y) (1-q)^k q^(n-k); rhs applies the
    operator n times to f_n and evaluates at y.
    """
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += (
            comb_int(n, k)
            * Fraction(math.factorial(n), math.factorial(k))
            * appell_value(spec, k, y)
            * (1 - q) ** k
            * q ** (n - k)
        )
    poly = appell_poly(spec, n)
    for _ in range(n):
        poly = poly * (1 - q) + poly.derivative() * q
    return IdentityCheck(lhs=lhs, rhs=poly(y))


def scaled_transform_identity(spec: AppellSpec, n: int, lam: Fraction,
                              x: Fraction, q: Fraction) -> IdentityCheck:
    """sum_k f_{n-k}(x) C(n,k) (1-q)^k (lam q)^(n-k) against the shifted value.

    rhs = (lam q)^n f_n(x - 1/lam + 1/(lam q)).
    """
    if lam == 0:
        raise DomainError("scaled transform identity needs lambda != 0")
    if q == 0:
        raise DomainError("scaled transform identity needs q != 0")
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += (
            appell_value(spec, n - k, x)
            * comb_int(n, k)
            * (1 - q) ** k
            * (lam * q) ** (n - k)
        )
    shift = x - 1 / lam + 1 / (lam * q)
    rhs = (lam * q) ** n * appell_value(spec, n, shift)
    return IdentityCheck(lhs=lhs, rhs=rhs)


UMBRAL_KINDS = ("f", "fbis", "u", "ubis", "v", "o1", "w", "wbis", "s2")


def umbral_identity(which: str, family: AppellSpec, n: int, x: Fraction, y: Fraction,
                    seq: seqs.SequenceSpec | None = None,
                    b: Fraction | None = None,
                    alpha: Fraction | None = None,
                    r: int = 0) -> IdentityCheck:
    """One of the expanded umbral-substitution identities.

    'f'/'fbis' are the scalar (no-family) base cases; 'u'/'ubis' mix an
    arbitrary sequence with the family through its difference tables; 'v'/'o1'
    are the Fibonacci cases, 'w'/'wbis' the alternating-binomial cases, and
    's2' rewrites the shifted transform values as family-weighted sums.
    """
    f = lambda k, at: appell_value(family, k, at)
    if which in ("f", "fbis", "u", "ubis", "s2"):
        if seq is None:
            raise DomainError(f"umbral identity {which!r} needs a sequence")
    if which == "f":
        lhs = sum(seqs.term(seq, k) * comb_int(n, k) * y**k * x ** (n - k)
                  for k in range(n + 1))
        table = seqs.diff_table(seq, n)
        rhs = sum((-1) ** j * comb_int(n, j) * table[j] * (x + y) ** (n - j) * x**j
                  for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which == "fbis":
        lhs = sum(seqs.term(seq, k) * comb_int(n, k) * y ** (n - k) * x**k
                  for k in range(n + 1))
        rhs = sum((-1) ** j * comb_int(n, j) * seqs.dual_diff(seq, j)
                  * x**j * (x + y) ** (n - j) for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which == "u":
        lhs = sum(seqs.term(seq, k) * comb_int(n, k) * f(k, y) * x ** (n - k)
                  for k in range(n + 1))
        table = seqs.diff_table(seq, n)
        rhs = sum((-1) ** j * comb_int(n, j) * table[j] * f(n - j, x + y) * x**j
                  for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which == "ubis":
        lhs = sum(seqs.term(seq, k) * comb_int(n, k) * f(n - k, y) * x**k
                  for k in range(n + 1))
        rhs = sum((-1) ** j * comb_int(n, j) * seqs.dual_diff(seq, j)
                  * f(n - j, x + y) * x**j for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which == "v":
        fib = seqs.FiboLike(a=Fraction(0), b=Fraction(1), c=Fraction(1))
        lhs = sum(comb_int(n, k) * fib.value(k + r) * f(k, y) * x ** (n - k)
                  for k in range(n + 1))
        rhs = sum((-1) ** j * comb_int(n, j) * fib.value(n + r - 2 * j)
                  * f(n - j, x + y) * x**j for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which == "o1":
        fib = seqs.FiboLike(a=Fraction(0), b=Fraction(1), c=Fraction(1))
        lhs = sum(comb_int(n, k) * fib.value(n + k) * f(k, y) * x ** (n - k)
                  for k in range(n + 1))
        rhs = sum((-1) ** (n - j) * comb_int(n, j) * fib.value(2 * j)
                  * f(j, x + y) * x ** (n - j) for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which in ("w", "wbis"):
        if alpha is None:
            raise DomainError(f"umbral identity {which!r} needs alpha")
        if which == "w":
            lhs = sum((-1) ** k * binomial(alpha, r + k) * comb_int(n, k)
                      * f(k, y) * x ** (n - k) for k in range(n + 1))
            rhs = sum((-1) ** (n - j) * comb_int(n, j) * binomial(alpha + j, n + r)
                      * f(n - j, x + y) * x**j for j in range(n + 1))
        else:
            lhs = sum((-1) ** k * binomial(alpha, r + k) * comb_int(n, k)
                      * f(n - k, y) * x**k for k in range(n + 1))
            rhs = sum((-1) ** j * comb_int(n, j) * binomial(alpha + j, j + r)
                      * f(n - j, x + y) * x**j for j in range(n + 1))
        return IdentityCheck(lhs, rhs)
    if which == "s2":
        if b is None:
            raise DomainError("umbral identity 's2' needs the scale b")
        lhs = sum(seqs.term(seq, k) * comb_int(n, k) * (b * x) ** k
                  * f(n - k, y + (1 - b) * x) for k in range(n + 1))
        rhs = sum(transform.direct_transform(seq, k, 1 - b) * comb_int(n, k)
                  * x**k * f(n - k, y) for k in range(n + 1))
        return IdentityCheck(lhs, rhs)
    raise DomainError(f"unknown umbral identity {which!r}")


def appell_derivative_check(spec: AppellSpec, n: int) -> bool:
    """d/dy f_n == n f_{n-1}, coefficient by coefficient."""
    if n == 0:
        return appell_poly(spec, 0) == QPoly.constant(1)
    return appell_poly(spec, n).derivative() == appell_poly(spec, n - 1) * n


# ---------------------------------------------------------------------------
# Compact family grammar: bernoulli:a=2 | euler:a=1/2 | generic:1,0,1/2
# ---------------------------------------------------------------------------

def parse_family(text: str) -> AppellSpec:
    text = text.strip()
    name, _, body = text.partition(":")
    name = name.strip().lower()
    if name == "generic":
        return GenericAppell(tuple(rat(v) for v in body.split(",")))
    if name in ("bernoulli", "euler"):
        params = dict(piece.split("=", 1) for piece in body.split(",") if piece)
        alpha = rat(params.get("a", "1"))
        return BernoulliOrder(alpha) if name == "bernoulli" else EulerOrder(alpha)
    raise DomainError(f"unknown appell family {name!r}")


def format_family(spec: AppellSpec) -> str:
    if isinstance(spec, GenericAppell):
        return "generic:" + ",".join(rat_str(c) for c in spec.coeffs)
    if isinstance(spec, BernoulliOrder):
        return f"bernoulli:a={rat_str(spec.alpha)}"
    if isinstance(spec, EulerOrder):
        return f"euler:a={rat_str(spec.alpha)}"
    raise DomainError(f"cannot format {spec!r}")
