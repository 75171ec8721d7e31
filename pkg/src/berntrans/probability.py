"""Exact finite probability laws behind the transform.

With success probability 1-x per trial, the count of successes in n trials
has the law C(n,k)(1-x)^k x^(n-k), which is exactly the weight of a_k in
S_n(x). Running an independent second round of trials on top of the first
composes the laws; everything here stays in exact rationals, with a seeded
Monte Carlo cross-check as the only approximate (and advisory) piece.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import sequences as seqs
from . import transform
from .grid import IdentityCheck
from .rationals import rat_str
from .specialfn import DomainError, comb_int


@dataclass(frozen=True)
class FinitePMF:
    """Exact probability mass function on {0, ..., n}."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.probs:
            raise DomainError("a pmf needs at least one mass point")
        if any(p < 0 for p in self.probs):
            raise DomainError("pmf entries must be nonnegative")
        if sum(self.probs) != 1:
            raise DomainError("pmf entries must sum to exactly 1")

    @property
    def top(self) -> int:
        return len(self.probs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.probs[k]

    def to_strings(self) -> list[str]:
        return [rat_str(p) for p in self.probs]


def _check_unit(value: Fraction, name: str) -> None:
    if not 0 <= value <= 1:
        raise DomainError(f"{name} = {value} outside [0, 1]")


@lru_cache(maxsize=None)
def binomial_pmf(n: int, success: Fraction) -> FinitePMF:
    """Law of the success count in n independent trials."""
    if n < 0:
        raise DomainError("binomial_pmf needs n >= 0")
    _check_unit(success, "success")
    return FinitePMF(tuple(
        comb_int(n, k) * success**k * (1 - success) ** (n - k) for k in range(n + 1)
    ))


@lru_cache(maxsize=None)
def compose_pmf(outer_success: Fraction, inner: FinitePMF) -> FinitePMF:
    """Law of a second success count run for as many trials as the first gave.

    P(W = k) = sum_j P(inner = j) C(j,k) s^k (1-s)^(j-k); when the inner law
    is binomial the result is binomial with multiplied success probabilities.
    """
    _check_unit(outer_success, "outer success")
    n = inner.top
    out = [Fraction(0)] * (n + 1)
    for j, weight in enumerate(inner.probs):
        if weight == 0:
            continue
        for k in range(j + 1):
            out[k] += weight * comb_int(j, k) * outer_success**k \
                * (1 - outer_success) ** (j - k)
    return FinitePMF(tuple(out))


def expect(f: seqs.SequenceSpec, law: FinitePMF) -> Fraction:
    """E f(K) = sum_k f(k) P(K = k), with f given as a sequence spec."""
    return sum(
        (seqs.term(f, k) * p for k, p in enumerate(law.probs) if p != 0), Fraction(0)
    )


def shifted_compose_pmf(m: int, n: int, x: Fraction, y: Fraction) -> FinitePMF:
    """Law of T(m + Z(n)): a second round of m+j trials when the first gave j."""
    if m < 0 or n < 0:
        raise DomainError("shifted_compose_pmf needs m, n >= 0")
    _check_unit(x, "x")
    _check_unit(y, "y")
    inner = binomial_pmf(n, 1 - x)
    out = [Fraction(0)] * (m + n + 1)
    for j, weight in enumerate(inner.probs):
        if weight == 0:
            continue
        second = binomial_pmf(m + j, 1 - y)
        for k, p in enumerate(second.probs):
            out[k] += weight * p
    return FinitePMF(tuple(out))


EXPECTATION_KINDS = ("m2", "o2", "p2")


@dataclass(frozen=True)
class ExpectationCheck:
    """Both sides of an expectation identity plus the matching transform law."""

    sides: IdentityCheck
    transform_sides: IdentityCheck

    @property
    def holds(self) -> bool:
        return self.sides.holds and self.transform_sides.holds


def verify_expectation_identity(f: seqs.SequenceSpec, m: int, n: int,
                                x: Fraction, y: Fraction,
                                which: str = "m2") -> ExpectationCheck:
    """Shift law for expectations of f over composed-trial counts.

    'm2' is the full law; 'o2' sets y = 0 (the second round is deterministic);
    'p2' additionally sets n = 0. Each is cross-checked against the equivalent
    transform-level shift law with a_k = f(k).
    """
    if which not in EXPECTATION_KINDS:
        raise DomainError(f"unknown expectation identity {which!r}")
    if which == "o2":
        y = Fraction(0)
    elif which == "p2":
        y = Fraction(0)
        n = 0
    _check_unit(x, "x")
    _check_unit(y, "y")
    lhs = (1 - x) ** m * expect(f, shifted_compose_pmf(m, n, x, y))
    rhs = Fraction(0)
    for j in range(m + 1):
        composed = compose_pmf(1 - y, binomial_pmf(j + n, 1 - x))
        rhs += comb_int(m, j) * (-x) ** (m - j) * expect(f, composed)
    if x == 1:
        transform_sides = IdentityCheck(lhs, rhs)  # the q = 1 point sits outside the shift law
    else:
        transform_sides = transform.shifted_transform(f, n, m, y, x)
    return ExpectationCheck(sides=IdentityCheck(lhs, rhs), transform_sides=transform_sides)


@dataclass(frozen=True)
class BinReport:
    k: int
    count: int
    expected: str
    observed: str
    flagged: bool


@dataclass(frozen=True)
class MonteCarloReport:
    n: int
    x: str
    y: str
    trials: int
    seed: int
    bins: tuple[BinReport, ...]

    @property
    def flagged(self) -> tuple[BinReport, ...]:
        return tuple(b for b in self.bins if b.flagged)


def _bernoulli(rng: random.Random, p: Fraction) -> int:
    # exact draw: p = a/b succeeds iff a uniform integer below b lands below a
    return 1 if rng.randrange(p.denominator) < p.numerator else 0


def monte_carlo_check(n: int, x: Fraction, y: Fraction, trials: int,
                      seed: int) -> MonteCarloReport:
    """Simulate the composed count and compare frequencies with the exact law.

    A bin is flagged when |freq - p| exceeds 5 sqrt(p(1-p)/trials); the
    comparison is done in exact arithmetic on squared deviations. Advisory
    only: the exact laws above are the contract, this guards against gross
    implementation slips.
    """
    if trials < 1:
        raise DomainError("monte_carlo_check needs trials >= 1")
    _check_unit(x, "x")
    _check_unit(y, "y")
    rng = random.Random(seed)
    counts = [0] * (n + 1)
    p_first = 1 - x
    p_second = 1 - y
    for _ in range(trials):
        z = sum(_bernoulli(rng, p_first) for _ in range(n))
        w = sum(_bernoulli(rng, p_second) for _ in range(z))
        counts[w] += 1
    exact = compose_pmf(1 - y, binomial_pmf(n, 1 - x))
    bins = []
    for k, p in enumerate(exact.probs):
        freq = Fraction(counts[k], trials)
        deviation_sq = (freq - p) ** 2
        threshold_sq = 25 * p * (1 - p) / trials
        flagged = deviation_sq > threshold_sq
        bins.append(BinReport(k=k, count=counts[k], expected=rat_str(p),
                              observed=rat_str(freq), flagged=flagged))
    return MonteCarloReport(n=n, x=rat_str(x), y=rat_str(y), trials=trials,
                            seed=seed, bins=tuple(bins))
