"""Exact polynomial identity checking on rational grids.

A polynomial identity in several variables with per-variable degree at most d
holds everywhere iff it holds on any Cartesian grid with at least d+1 distinct
sample points per variable. Both sides of an identity are evaluated exactly at
every grid point, so a pass is a proof and a failure yields a witness point.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .rationals import rat_str

Evaluator = Callable[[Mapping[str, Fraction]], Fraction]

#: Small-denominator default sample pool; kept modest so big integers stay small.
DEFAULT_POOL: tuple[Fraction, ...] = tuple(
    Fraction(n, d)
    for n, d in [(0, 1), (1, 5), (1, 3), (1, 2), (2, 3), (4, 5), (1, 1), (3, 2), (-1, 2), (2, 1)]
)

#: Pool restricted to [0, 1], for probability parameters.
UNIT_POOL: tuple[Fraction, ...] = tuple(
    Fraction(n, d)
    for n, d in [(0, 1), (1, 5), (1, 3), (1, 2), (2, 3), (4, 5), (1, 1),
                 (1, 7), (2, 7), (3, 7), (4, 7), (5, 7), (6, 7), (1, 11)]
)


class GridConfigError(ValueError):
    """Bad grid configuration, distinct from an identity failure."""


def sample_points(
    bound: int,
    pool: Sequence[Fraction] = DEFAULT_POOL,
    exclude: Iterable[Fraction] = (),
    count: int | None = None,
) -> tuple[Fraction, ...]:
    """Pick ``count`` (default bound+1) distinct points from the pool.

    Excluded values are skipped; if the pool runs short the sequence is
    extended with successive integers 3, 4, 5, ...
    """
    needed = bound + 1 if count is None else count
    banned = set(exclude)
    chosen: list[Fraction] = []
    seen: set[Fraction] = set()
    for p in pool:
        if p in banned or p in seen:
            continue
        chosen.append(p)
        seen.add(p)
        if len(chosen) >= needed:
            return tuple(chosen)
    extra = 3
    while len(chosen) < needed:
        candidate = Fraction(extra)
        if candidate not in banned and candidate not in seen:
            chosen.append(candidate)
            seen.add(candidate)
        extra += 1
    return tuple(chosen)


def unit_points(bound: int) -> tuple[Fraction, ...]:
    """Distinct points inside [0, 1], extended with 1/(k+11) as needed."""
    needed = bound + 1
    chosen = list(UNIT_POOL[:needed])
    k = 2
    seen = set(chosen)
    while len(chosen) < needed:
        candidate = Fraction(1, k + 11)
        if candidate not in seen:
            chosen.append(candidate)
            seen.add(candidate)
        k += 1
    return tuple(chosen)


@dataclass(frozen=True)
class GridAxis:
    """One grid variable: distinct sample points covering a degree bound."""

    name: str
    points: tuple[Fraction, ...]
    degree_bound: int

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise GridConfigError(f"axis {self.name}: sample points must be distinct")
        if len(self.points) < self.degree_bound + 1:
            raise GridConfigError(
                f"axis {self.name}: {len(self.points)} points cannot certify degree "
                f"{self.degree_bound}"
            )


@dataclass(frozen=True)
class GridSpec:
    """Cartesian product of axes; zero axes means a single evaluation."""

    axes: tuple[GridAxis, ...] = ()

    def points(self) -> Iterable[dict[str, Fraction]]:
        names = [axis.name for axis in self.axes]
        for combo in itertools.product(*(axis.points for axis in self.axes)):
            yield dict(zip(names, combo))

    def size(self) -> int:
        total = 1
        for axis in self.axes:
            total *= len(axis.points)
        return total


def axis(name: str, bound: int, exclude: Iterable[Fraction] = (),
         pool: Sequence[Fraction] = DEFAULT_POOL) -> GridAxis:
    return GridAxis(name, sample_points(bound, pool, exclude), bound)


@dataclass(frozen=True)
class Witness:
    """A grid point where the two sides disagree, with both exact values."""

    point: tuple[tuple[str, Fraction], ...]
    lhs: Fraction
    rhs: Fraction

    def as_dict(self) -> dict[str, str]:
        out = {name: rat_str(value) for name, value in self.point}
        out["lhs"] = rat_str(self.lhs)
        out["rhs"] = rat_str(self.rhs)
        return out


@dataclass(frozen=True)
class GridCheckResult:
    passed: bool
    points_checked: int
    witness: Witness | None = None


def check_identity_on_grid(lhs: Evaluator, rhs: Evaluator, grid: GridSpec) -> GridCheckResult:
    """Evaluate both sides at every grid point; first mismatch is the witness.

    A domain error raised by an evaluator means the grid strayed onto an
    excluded point, which is a configuration problem, not an identity failure.
    """
    from .specialfn import DomainError

    checked = 0
    for point in grid.points():
        try:
            left = lhs(point)
            right = rhs(point)
        except (DomainError, ZeroDivisionError) as exc:
            raise GridConfigError(
                f"evaluator domain error at {point}: {exc}"
            ) from exc
        checked += 1
        if left != right:
            return GridCheckResult(
                passed=False,
                points_checked=checked,
                witness=Witness(tuple(sorted(point.items())), left, right),
            )
    return GridCheckResult(passed=True, points_checked=checked)


@dataclass(frozen=True)
class IdentityCheck:
    """Both independently computed sides of an identity at one evaluation."""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs
