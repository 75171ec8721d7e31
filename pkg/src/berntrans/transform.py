"""The transform engine: weighted binomial sums S_n(q) and their identities.

S_n(q) = sum_k a_k C(n,k) (1-q)^k q^(n-k) is computed here by four separate
routes (direct sum, difference-table polynomial, and two generating-function
extractions) that must agree exactly, plus the composition, shift, inverse
and alternating relations between S_n at different arguments.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import sequences as seqs
from .grid import IdentityCheck
from .qpoly import QPoly
from .series import Series, SeriesError
from .specialfn import DomainError, comb_int, q_integer


def bernstein_weight(n: int, k: int, q: Fraction, conjugate: bool = False) -> Fraction:
    """C(n,k) (1-q)^k q^(n-k), with the two exponents swapped when conjugated."""
    if conjugate:
        return comb_int(n, k) * (1 - q) ** (n - k) * q**k
    return comb_int(n, k) * (1 - q) ** k * q ** (n - k)


@lru_cache(maxsize=None)
def direct_transform(spec: seqs.SequenceSpec, n: int, q: Fraction,
                     conjugate: bool = False) -> Fraction:
    """S_n(q) (or the conjugate sum) as the literal weighted sum."""
    if n < 0:
        raise DomainError("direct_transform needs n >= 0")
    return sum(
        (seqs.term(spec, k) * bernstein_weight(n, k, q, conjugate) for k in range(n + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def basis_representation(spec: seqs.SequenceSpec, n: int,
                         conjugate: bool = False) -> QPoly:
    """S_n as a polynomial in q: coefficients (-1)^j C(n,j) M(n,j).

    The conjugate form replaces M(n,j) by the dual differences over a_0..a_j.
    """
    if n < 0:
        raise DomainError("basis_representation needs n >= 0")
    if conjugate:
        values = [seqs.dual_diff(spec, j) for j in range(n + 1)]
    else:
        values = list(seqs.diff_table(spec, n).values)
    return QPoly((-1) ** j * comb_int(n, j) * values[j] for j in range(n + 1))


def poly_from_diff_values(n: int, values: list[Fraction] | tuple[Fraction, ...]) -> QPoly:
    """Basis polynomial from externally supplied difference values M(n, 0..n)."""
    return QPoly((-1) ** j * comb_int(n, j) * values[j] for j in range(n + 1))


GF_MODES = ("product", "composed")


def gf_transform(spec: seqs.SequenceSpec, n: int, q: Fraction, mode: str,
                 order: int | None = None) -> Fraction:
    """S_n(q) extracted from a truncated generating function.

    mode 'product' reads the z^n coefficient of (1-q+qz)^n A(z); 'composed'
    reads it from A((1-q)z/(1-qz)) / (1-qz). Both use only series arithmetic.
    """
    if n < 0:
        raise DomainError("gf_transform needs n >= 0")
    order = n if order is None else order
    if order < n:
        raise SeriesError(f"series order {order} too small for coefficient {n}")
    a_series = Series(order, seqs.terms(spec, order + 1))
    if mode == "product":
        kernel = Series.constant(1, order)
        base = Series(order, [1 - q, q])
        for _ in range(n):
            kernel = kernel * base
        return (kernel * a_series).coefficient(n)
    if mode == "composed":
        inner = Series(order, [Fraction(0)] + [(1 - q) * q**k for k in range(order)])
        composed = a_series.compose(inner)
        return (composed * Series.geometric(q, order)).coefficient(n)
    raise DomainError(f"unknown gf mode {mode!r}")


PROVENANCES = ("direct-sum", "basis-rep", "gf-product", "gf-composed")


@dataclass(frozen=True)
class TransformResult:
    n: int
    value: Fraction
    provenance: str


def all_routes(spec: seqs.SequenceSpec, n: int, q: Fraction) -> dict[str, Fraction]:
    """The same S_n(q) by all four routes; they must coincide exactly."""
    return {
        "direct-sum": direct_transform(spec, n, q),
        "basis-rep": basis_representation(spec, n)(q),
        "gf-product": gf_transform(spec, n, q, "product"),
        "gf-composed": gf_transform(spec, n, q, "composed"),
    }


# ---------------------------------------------------------------------------
# Composition and shift laws.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComposeCheck:
    """Both sides of the composition law and of its mirrored form."""

    blend: IdentityCheck      # transform of (S_k(x)) at q vs S_n(x+q-xq)
    mirrored: IdentityCheck   # S_n(1-xq) vs conjugate transform of (S_k(1-x))

    @property
    def holds(self) -> bool:
        return self.blend.holds and self.mirrored.holds


def compose_transform(spec: seqs.SequenceSpec, n: int, x: Fraction,
                      q: Fraction) -> ComposeCheck:
    """Transforming the transformed sequence lands at the blended argument."""
    via_inner = direct_transform(seqs.TransformOf(inner=spec, at=x), n, q)
    direct = direct_transform(spec, n, x + q - x * q)
    mirrored_lhs = direct_transform(spec, n, 1 - x * q)
    mirrored_rhs = direct_transform(
        seqs.TransformOf(inner=spec, at=1 - x), n, q, conjugate=True
    )
    return ComposeCheck(
        blend=IdentityCheck(lhs=via_inner, rhs=direct),
        mirrored=IdentityCheck(lhs=mirrored_lhs, rhs=mirrored_rhs),
    )


def shifted_transform(spec: seqs.SequenceSpec, n: int, m: int, x: Fraction,
                      q: Fraction) -> IdentityCheck:
    """Shift law: (1-q)^m sum_k S_{k+m}(x) C(n,k)(1-q)^k q^(n-k) against
    sum_j C(m,j)(-q)^(m-j) S_{j+n}(x+q-xq)."""
    if n < 0 or m < 0:
        raise DomainError("shifted_transform needs n, m >= 0")
    if q == 1:
        raise DomainError("shifted_transform needs q != 1")
    lhs = (1 - q) ** m * sum(
        direct_transform(spec, k + m, x) * bernstein_weight(n, k, q)
        for k in range(n + 1)
    )
    blended = x + q - x * q
    rhs = sum(
        comb_int(m, j) * (-q) ** (m - j) * direct_transform(spec, j + n, blended)
        for j in range(m + 1)
    )
    return IdentityCheck(lhs=lhs, rhs=rhs)


def power_composition(spec: seqs.SequenceSpec, n: int, m: int,
                      q: Fraction) -> tuple[IdentityCheck, IdentityCheck]:
    """S_n(q^m) through the blend law, in both weight arrangements."""
    if m < 1:
        raise DomainError("power composition needs m >= 1")
    if q == 1:
        raise DomainError("power composition grids exclude q = 1")
    qm = q_integer(q, m)  # (1 - q^m)/(1 - q) as the polynomial 1 + q + ... + q^(m-1)
    target = direct_transform(spec, n, q**m)
    via_blend = direct_transform(seqs.TransformOf(inner=spec, at=1 - qm), n, q)
    via_swap = direct_transform(seqs.TransformOf(inner=spec, at=q), n, 1 - qm)
    return (
        IdentityCheck(lhs=target, rhs=via_blend),
        IdentityCheck(lhs=target, rhs=via_swap),
    )


def inverse_composition(spec: seqs.SequenceSpec, n: int,
                        q: Fraction) -> tuple[IdentityCheck, IdentityCheck]:
    """Recover a_n from transformed values (the blend argument driven to 0)."""
    if q == 1:
        raise DomainError("inverse composition needs q != 1")
    a_n = seqs.term(spec, n)
    via_blend = direct_transform(
        seqs.TransformOf(inner=spec, at=-q / (1 - q)), n, q
    )
    swapped = sum(
        direct_transform(spec, k, q) * comb_int(n, k) * (-q) ** (n - k)
        for k in range(n + 1)
    ) / (1 - q) ** n
    return (
        IdentityCheck(lhs=a_n, rhs=via_blend),
        IdentityCheck(lhs=a_n, rhs=swapped),
    )


def scaled_composition(spec: seqs.SequenceSpec, n: int, alpha: Fraction,
                       q: Fraction) -> tuple[IdentityCheck, IdentityCheck]:
    """S_n((alpha+1) q) through the blend law, in both arrangements."""
    if q == 1:
        raise DomainError("scaled composition needs q != 1")
    target = direct_transform(spec, n, (alpha + 1) * q)
    via_blend = direct_transform(
        seqs.TransformOf(inner=spec, at=alpha * q / (1 - q)), n, q
    )
    swapped = sum(
        direct_transform(spec, k, q) * comb_int(n, k)
        * (1 - (alpha + 1) * q) ** k * (alpha * q) ** (n - k)
        for k in range(n + 1)
    ) / (1 - q) ** n
    return (
        IdentityCheck(lhs=target, rhs=via_blend),
        IdentityCheck(lhs=target, rhs=swapped),
    )


def chain_composition(spec: seqs.SequenceSpec, n: int,
                      xs: tuple[Fraction, ...]) -> IdentityCheck:
    """Peel one factor off a product argument: S_n(1 - x0 x1 ... xr)."""
    if not xs:
        raise DomainError("chain composition needs at least x0")
    x0, rest = xs[0], xs[1:]
    tail = Fraction(1)
    for value in rest:
        tail *= value
    lhs = direct_transform(spec, n, 1 - x0 * tail)
    rhs = direct_transform(
        seqs.TransformOf(inner=spec, at=1 - tail), n, x0, conjugate=True
    )
    return IdentityCheck(lhs=lhs, rhs=rhs)


def chain_shifted(spec: seqs.SequenceSpec, n: int, m: int,
                  xs: tuple[Fraction, ...]) -> IdentityCheck:
    """Shift law written for product arguments 1 - x0 x1 ... xr."""
    if not xs:
        raise DomainError("chain composition needs at least x0")
    x0, rest = xs[0], xs[1:]
    tail = Fraction(1)
    for value in rest:
        tail *= value
    lhs = x0**m * sum(
        direct_transform(spec, k + m, 1 - tail)
        * comb_int(n, k) * (1 - x0) ** (n - k) * x0**k
        for k in range(n + 1)
    )
    rhs = sum(
        (-1) ** (m - j) * comb_int(m, j) * (1 - x0) ** (m - j)
        * direct_transform(spec, j + n, 1 - x0 * tail)
        for j in range(m + 1)
    )
    return IdentityCheck(lhs=lhs, rhs=rhs)


def alternating_transform(spec: seqs.SequenceSpec, n: int,
                          q: Fraction) -> IdentityCheck:
    """sum_k (-1)^k a_k C(n,k)(1-q)^k against q^n S_n(1/q)."""
    if q == 0:
        raise DomainError("alternating transform needs q != 0")
    lhs = sum(
        (-1) ** k * seqs.term(spec, k) * comb_int(n, k) * (1 - q) ** k
        for k in range(n + 1)
    )
    rhs = q**n * direct_transform(spec, n, 1 / q)
    return IdentityCheck(lhs=lhs, rhs=rhs)


def alternating_shift(spec: seqs.SequenceSpec, n: int, x: Fraction,
                      q: Fraction) -> IdentityCheck:
    """sum_k (-1)^(n-k) S_k(1-x) C(n,k)(1-q)^(n-k) against q^n S_n(1 - x/q)."""
    if q == 0:
        raise DomainError("alternating transform needs q != 0")
    lhs = sum(
        (-1) ** (n - k) * direct_transform(spec, k, 1 - x)
        * comb_int(n, k) * (1 - q) ** (n - k)
        for k in range(n + 1)
    )
    rhs = q**n * direct_transform(spec, n, 1 - x / q)
    return IdentityCheck(lhs=lhs, rhs=rhs)


def special_composition(spec: seqs.SequenceSpec, n: int, variant: str,
                        **params) -> list[tuple[str, IdentityCheck]]:
    """Dispatch over the named composition variants; returns (name, check) pairs."""
    if variant == "power":
        first, second = power_composition(spec, n, params["m"], params["q"])
        return [("power-blend", first), ("power-swap", second)]
    if variant == "scaled":
        first, second = scaled_composition(spec, n, params["alpha"], params["q"])
        return [("scaled-blend", first), ("scaled-swap", second)]
    if variant == "chain":
        checks = [("chain", chain_composition(spec, n, params["xs"]))]
        if "m" in params:
            checks.append(("chain-shift", chain_shifted(spec, n, params["m"], params["xs"])))
        return checks
    if variant == "alternating":
        checks = [("alternating", alternating_transform(spec, n, params["q"]))]
        if "x" in params:
            checks.append(("alternating-shift",
                           alternating_shift(spec, n, params["x"], params["q"])))
        return checks
    raise DomainError(f"unknown composition variant {variant!r}")
