"""Sequence families, their exact term generators, and difference tables.

Each family is a frozen dataclass so specs are hashable, comparable, and safe
to memoize on. ``term(spec, n)`` produces a_n exactly; ``diff_table`` builds
the backward-difference values M(n, j) and ``dual_diff`` the alternating sums
over the initial segment a_0..a_j.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import specialfn as sf
from .rationals import rat, rat_str
from .specialfn import DomainError


@dataclass(frozen=True)
class UserTable:
    terms: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise DomainError("usertable needs at least one term")

    def term(self, n: int) -> Fraction:
        if not 0 <= n < len(self.terms):
            raise DomainError(f"usertable index {n} outside 0..{len(self.terms) - 1}")
        return self.terms[n]


@dataclass(frozen=True)
class Harmonic:
    def term(self, n: int) -> Fraction:
        return sf.harmonic(n)


@dataclass(frozen=True)
class GenHarmonic:
    """Shifted generalized harmonic numbers: sum of 1/(k+x)^r, k = 1..n."""

    r: int
    x: Fraction

    def __post_init__(self) -> None:
        if self.r < 1:
            raise DomainError("genharmonic needs r >= 1")
        if self.x.denominator == 1 and self.x <= -1:
            raise DomainError("genharmonic pole: x must avoid -1, -2, ...")

    def term(self, n: int) -> Fraction:
        return sf.gen_harmonic(n, self.r, self.x)


@dataclass(frozen=True)
class FiboLike:
    """Two-term recurrence family: v(n+2) = c v(n) + v(n+1), v(0)=a, v(1)=b.

    Terms are a_n = v(n + r). Negative indices extend by the backward
    recurrence v(n) = (v(n+2) - v(n+1))/c, which is what makes the
    closed-form difference table c^j v(n+r-2j) valid at small n+r.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    r: int = 0

    def __post_init__(self) -> None:
        if self.c == 0:
            raise DomainError("fibolike needs c != 0")
        if self.r < 0:
            raise DomainError("fibolike needs shift r >= 0")

    def value(self, m: int) -> Fraction:
        return _fibolike_value(self.a, self.b, self.c, m)

    def term(self, n: int) -> Fraction:
        return self.value(n + self.r)


@lru_cache(maxsize=None)
def _fibolike_value(a: Fraction, b: Fraction, c: Fraction, m: int) -> Fraction:
    if m == 0:
        return a
    if m == 1:
        return b
    if m >= 2:
        lo, hi = a, b
        for _ in range(m - 1):
            lo, hi = hi, c * lo + hi
        return hi
    lo, hi = a, b  # walk backwards: v(n) = (v(n+2) - v(n+1)) / c
    for _ in range(-m):
        lo, hi = (hi - lo) / c, lo
    return lo


@dataclass(frozen=True)
class BinomAlt:
    """Alternating binomial coefficients a_n = (-1)^n C(alpha, n+r)."""

    alpha: Fraction
    r: int = 0

    def __post_init__(self) -> None:
        if self.r < 0:
            raise DomainError("binomalt needs r >= 0")

    def term(self, n: int) -> Fraction:
        return (-1) ** n * sf.binomial(self.alpha, n + self.r)


@dataclass(frozen=True)
class FussCatalan:
    """Ballot-type numbers a_n = A_m(s, n) = n/(sm+n) C(sm+n, m)."""

    m: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.s < 0:
            raise DomainError("fusscatalan needs m, s >= 0")

    def term(self, n: int) -> Fraction:
        return sf.fuss_catalan(self.m, self.s, n)


@dataclass(frozen=True)
class QInt:
    """q-integers a_n = [n+r]_p = 1 + p + ... + p^(n+r-1)."""

    p: Fraction
    r: int = 0

    def __post_init__(self) -> None:
        if self.p == 1:
            raise DomainError("qint needs p != 1")
        if self.r < 0:
            raise DomainError("qint needs r >= 0")

    def term(self, n: int) -> Fraction:
        return sf.q_integer(self.p, n + self.r)


@dataclass(frozen=True)
class BellAlt:
    """a_n = (-1)^n x B_n(x) with B_n the single-variable Bell polynomial."""

    x: Fraction

    def term(self, n: int) -> Fraction:
        return (-1) ** n * self.x * sf.bell_value(n, self.x)


@dataclass(frozen=True)
class GeomAlt:
    """a_n = (-1)^n x w_n(x) with w_n the geometric (Fubini) polynomial."""

    x: Fraction

    def term(self, n: int) -> Fraction:
        return (-1) ** n * self.x * sf.geometric_value(n, self.x)


@dataclass(frozen=True)
class Laguerre:
    """Generalized Laguerre values, indexed by degree or by order.

    mode "degree": a_n = L_{n+r}^(alpha)(x); mode "order": a_n = L_r^(alpha+n)(x).
    """

    alpha: Fraction
    x: Fraction
    mode: str = "degree"
    r: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("degree", "order"):
            raise DomainError("laguerre mode must be 'degree' or 'order'")
        if self.r < 0:
            raise DomainError("laguerre needs shift r >= 0")

    def term(self, n: int) -> Fraction:
        if self.mode == "degree":
            return sf.laguerre(n + self.r, self.alpha, self.x)
        return sf.laguerre(self.r, self.alpha + n, self.x)


@dataclass(frozen=True)
class Meixner:
    """a_n = M_{n+r}(x; alpha, beta) under a selectable normalization."""

    x: Fraction
    alpha: Fraction
    beta: Fraction
    r: int = 0
    definition: str = "scaled"

    def __post_init__(self) -> None:
        if self.beta == 0:
            raise DomainError("meixner needs beta != 0")
        if self.r < 0:
            raise DomainError("meixner needs r >= 0")
        if self.definition not in sf.MEIXNER_DEFINITIONS:
            raise DomainError(f"unknown meixner definition {self.definition!r}")

    def term(self, n: int) -> Fraction:
        return sf.meixner(n + self.r, self.x, self.alpha, self.beta, self.definition)


@dataclass(frozen=True)
class AppellScaled:
    """a_n = lambda^n f_n(x) for an Appell family f."""

    family: object  # an appell.AppellSpec; typed loosely to avoid an import cycle
    lam: Fraction
    x: Fraction

    def __post_init__(self) -> None:
        if self.lam == 0:
            raise DomainError("appellscaled needs lambda != 0")

    def term(self, n: int) -> Fraction:
        from . import appell

        return self.lam**n * appell.appell_value(self.family, n, self.x)


MAX_TRANSFORM_DEPTH = 3


@dataclass(frozen=True)
class TransformOf:
    """a_n = S_n(at) of an inner sequence: lets transforms feed transforms."""

    inner: "SequenceSpec"
    at: Fraction

    def __post_init__(self) -> None:
        depth, spec = 1, self.inner
        while isinstance(spec, TransformOf):
            depth += 1
            spec = spec.inner
        if depth > MAX_TRANSFORM_DEPTH:
            raise DomainError(f"transformof nesting deeper than {MAX_TRANSFORM_DEPTH}")

    def term(self, n: int) -> Fraction:
        from . import transform

        return transform.direct_transform(self.inner, n, self.at)


SequenceSpec = Union[
    UserTable, Harmonic, GenHarmonic, FiboLike, BinomAlt, FussCatalan, QInt,
    BellAlt, GeomAlt, Laguerre, Meixner, AppellScaled, TransformOf,
]


@lru_cache(maxsize=None)
def term(spec: SequenceSpec, n: int) -> Fraction:
    """Exact a_n; negative n is meaningful only for the recurrence family."""
    if n < 0:
        if isinstance(spec, FiboLike):
            return spec.value(n + spec.r)
        raise DomainError(f"negative index {n} for {type(spec).__name__}")
    return spec.term(n)


def terms(spec: SequenceSpec, count: int) -> list[Fraction]:
    """The initial segment a_0 .. a_{count-1}."""
    return [term(spec, n) for n in range(count)]


@dataclass(frozen=True)
class DiffTable:
    """Backward-difference values M(n, j) for one row index n."""

    n: int
    values: tuple[Fraction, ...]  # values[j] = M(n, j), 0 <= j <= n

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]


@lru_cache(maxsize=None)
def diff_table(spec: SequenceSpec, n: int) -> DiffTable:
    """M(n, j) for 0 <= j <= n by iterated differencing of a_0 .. a_n."""
    if n < 0:
        raise DomainError("diff_table needs n >= 0")
    row = terms(spec, n + 1)
    values = [row[-1]]
    for _ in range(n):
        row = [row[i] - row[i - 1] for i in range(1, len(row))]
        values.append(row[-1])
    return DiffTable(n=n, values=tuple(values))


def m_value(spec: SequenceSpec, n: int, j: int) -> Fraction:
    """Single difference value M(n, j)."""
    if not 0 <= j <= n:
        raise DomainError("m_value needs 0 <= j <= n")
    return diff_table(spec, n).values[j]


@lru_cache(maxsize=None)
def dual_diff(spec: SequenceSpec, j: int) -> Fraction:
    """Alternating sum over the initial segment: sum (-1)^l C(j,l) a_l."""
    if j < 0:
        raise DomainError("dual_diff needs j >= 0")
    return sum(
        ((-1) ** l * sf.comb_int(j, l) * term(spec, l) for l in range(j + 1)),
        Fraction(0),
    )


# A generic table with no special structure; long enough for every bound the
# harness uses (indices up to n_max + m_max).
GENERIC_TERMS: tuple[Fraction, ...] = tuple(
    rat(t) for t in ["1", "3/2", "-2", "5/3", "7", "-1/4", "2/7", "-3",
                     "1/9", "4", "-5/6", "11/2", "1/2", "-7/3", "2", "9/4"]
)


def generic_table() -> UserTable:
    return UserTable(GENERIC_TERMS)


def catalog() -> tuple[tuple[str, SequenceSpec], ...]:
    """One representative instance of each of the 12 built-in families."""
    from . import appell

    return (
        ("usertable", generic_table()),
        ("harmonic", Harmonic()),
        ("genharmonic", GenHarmonic(r=2, x=rat("1/3"))),
        ("fibolike", FiboLike(a=rat(0), b=rat(1), c=rat(1))),
        ("binomalt", BinomAlt(alpha=rat("5/2"), r=1)),
        ("fusscatalan", FussCatalan(m=4, s=2)),
        ("qint", QInt(p=rat(2), r=1)),
        ("bellalt", BellAlt(x=rat("2/3"))),
        ("geomalt", GeomAlt(x=rat("1/2"))),
        ("laguerre", Laguerre(alpha=rat("1/2"), x=rat("2/3"), mode="degree", r=1)),
        ("meixner", Meixner(x=rat("1/2"), alpha=rat("7/2"), beta=rat(3))),
        ("appellscaled", AppellScaled(family=appell.BernoulliOrder(rat(2)),
                                      lam=rat("-3/2"), x=rat("1/4"))),
    )


# ---------------------------------------------------------------------------
# Compact spec grammar shared by the CLI and JSON configs.
# ---------------------------------------------------------------------------

def _split_top(text: str, sep: str) -> list[str]:
    """Split on sep, ignoring separators inside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DomainError(f"unbalanced parentheses in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise DomainError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return parts


def _kwargs(body: str) -> dict[str, str]:
    out: dict[str, str] = {}
    if not body:
        return out
    for piece in _split_top(body, ","):
        if "=" not in piece:
            raise DomainError(f"expected key=value, got {piece!r}")
        key, value = piece.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _strip_parens(text: str) -> str:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return text[1:-1]
    return text


def parse_spec(text: str) -> SequenceSpec:
    """Parse the compact sequence grammar, e.g. ``fibolike:a=0,b=1,c=1,r=2``."""
    from . import appell

    text = text.strip()
    name, _, body = text.partition(":")
    name = name.strip().lower()
    if name == "harmonic":
        return Harmonic()
    if name == "usertable":
        return UserTable(tuple(rat(v) for v in body.split(",")))
    kw = _kwargs(body)
    try:
        if name == "genharmonic":
            return GenHarmonic(r=int(kw["r"]), x=rat(kw["x"]))
        if name == "fibolike":
            return FiboLike(a=rat(kw["a"]), b=rat(kw["b"]), c=rat(kw["c"]),
                            r=int(kw.get("r", "0")))
        if name == "binomalt":
            return BinomAlt(alpha=rat(kw["alpha"]), r=int(kw.get("r", "0")))
        if name == "fusscatalan":
            return FussCatalan(m=int(kw["m"]), s=int(kw["s"]))
        if name == "qint":
            return QInt(p=rat(kw["p"]), r=int(kw.get("r", "0")))
        if name == "bellalt":
            return BellAlt(x=rat(kw["x"]))
        if name == "geomalt":
            return GeomAlt(x=rat(kw["x"]))
        if name == "laguerre":
            return Laguerre(alpha=rat(kw["alpha"]), x=rat(kw["x"]),
                            mode=kw.get("mode", "degree"), r=int(kw.get("r", "0")))
        if name == "meixner":
            return Meixner(x=rat(kw["x"]), alpha=rat(kw["alpha"]), beta=rat(kw["beta"]),
                           r=int(kw.get("r", "0")),
                           definition=kw.get("definition", "scaled"))
        if name == "appellscaled":
            return AppellScaled(family=appell.parse_family(_strip_parens(kw["family"])),
                                lam=rat(kw["lambda"]), x=rat(kw["x"]))
        if name == "transformof":
            return TransformOf(inner=parse_spec(_strip_parens(kw["inner"])),
                               at=rat(kw["at"]))
    except KeyError as exc:
        raise DomainError(f"missing parameter {exc} for sequence {name!r}") from exc
    raise DomainError(f"unknown sequence family {name!r}")


def format_spec(spec: SequenceSpec) -> str:
    """Inverse of parse_spec, used to echo configurations in reports."""
    from . import appell

    if isinstance(spec, Harmonic):
        return "harmonic"
    if isinstance(spec, UserTable):
        return "usertable:" + ",".join(rat_str(t) for t in spec.terms)
    if isinstance(spec, GenHarmonic):
        return f"genharmonic:r={spec.r},x={rat_str(spec.x)}"
    if isinstance(spec, FiboLike):
        return (f"fibolike:a={rat_str(spec.a)},b={rat_str(spec.b)},"
                f"c={rat_str(spec.c)},r={spec.r}")
    if isinstance(spec, BinomAlt):
        return f"binomalt:alpha={rat_str(spec.alpha)},r={spec.r}"
    if isinstance(spec, FussCatalan):
        return f"fusscatalan:m={spec.m},s={spec.s}"
    if isinstance(spec, QInt):
        return f"qint:p={rat_str(spec.p)},r={spec.r}"
    if isinstance(spec, BellAlt):
        return f"bellalt:x={rat_str(spec.x)}"
    if isinstance(spec, GeomAlt):
        return f"geomalt:x={rat_str(spec.x)}"
    if isinstance(spec, Laguerre):
        return (f"laguerre:alpha={rat_str(spec.alpha)},x={rat_str(spec.x)},"
                f"mode={spec.mode},r={spec.r}")
    if isinstance(spec, Meixner):
        return (f"meixner:x={rat_str(spec.x)},alpha={rat_str(spec.alpha)},"
                f"beta={rat_str(spec.beta)},r={spec.r},definition={spec.definition}")
    if isinstance(spec, AppellScaled):
        return (f"appellscaled:family=({appell.format_family(spec.family)}),"
                f"lambda={rat_str(spec.lam)},x={rat_str(spec.x)}")
    if isinstance(spec, TransformOf):
        return f"transformof:inner=({format_spec(spec.inner)}),at={rat_str(spec.at)}"
    raise DomainError(f"cannot format {spec!r}")
