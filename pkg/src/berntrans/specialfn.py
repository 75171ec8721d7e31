"""Exact special-function evaluators used by the sequence families.

Everything returns a Fraction. Binomial coefficients with rational upper
argument use the falling-factorial form; Pochhammer symbols are rising
factorials, the usual convention for the hypergeometric formulas below.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class DomainError(ValueError):
    """Argument outside a function's domain (pole, bad index, ...)."""


def comb_int(n: int, k: int) -> int:
    """C(n, k) for integer n >= 0; 0 outside the triangle."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def binomial(a: Fraction | int, k: int) -> Fraction:
    """Generalized C(a, k) = a(a-1)...(a-k+1)/k! for rational a; 0 for k < 0."""
    if k < 0:
        return Fraction(0)
    a = Fraction(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / math.factorial(k)


@lru_cache(maxsize=None)
def rising(x: Fraction | int, j: int) -> Fraction:
    """Rising factorial (x)_j = x (x+1) ... (x+j-1); empty product is 1."""
    if j < 0:
        raise DomainError("rising factorial needs j >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(j):
        out *= x + i
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind via the triangle recurrence."""
    if n < 0 or k < 0:
        raise DomainError("stirling2 needs n, k >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def bell_value(n: int, x: Fraction) -> Fraction:
    """Single-variable Bell polynomial: sum of S2(n,j) x^j."""
    return sum((stirling2(n, j) * x**j for j in range(n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def geometric_value(n: int, x: Fraction) -> Fraction:
    """Geometric (Fubini) polynomial: sum of j! S2(n,j) x^j."""
    return sum(
        (math.factorial(j) * stirling2(n, j) * x**j for j in range(n + 1)), Fraction(0)
    )


@lru_cache(maxsize=None)
def laguerre(n: int, alpha: Fraction, x: Fraction) -> Fraction:
    """Generalized Laguerre value; zero for negative degree.

    L_n^(alpha)(x) = sum_k (-1)^k C(n+alpha, n-k) x^k / k!
    """
    if n < 0:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n + 1):
        total += (-1) ** k * binomial(n + alpha, n - k) * x**k / math.factorial(k)
    return total


MEIXNER_DEFINITIONS = ("scaled", "hypergeometric")


@lru_cache(maxsize=None)
def meixner(n: int, x: Fraction, alpha: Fraction, beta: Fraction,
            definition: str = "scaled") -> Fraction:
    """Meixner value under a selectable normalization.

    The "scaled" form multiplies 2F1(-n, -x; alpha; 1 - 1/beta) by (alpha)_n,
    which clears all alpha denominators; "hypergeometric" is the bare 2F1.
    """
    if n < 0:
        return Fraction(0)
    if beta == 0:
        raise DomainError("meixner needs beta != 0")
    z = 1 - Fraction(1) / beta
    total = Fraction(0)
    if definition == "scaled":
        for k in range(n + 1):
            total += (
                rising(-n, k) * rising(-x, k) / math.factorial(k)
                * rising(alpha + k, n - k) * z**k
            )
        return total
    if definition == "hypergeometric":
        for k in range(n + 1):
            denom = rising(alpha, k)
            if denom == 0:
                raise DomainError(f"meixner pole: (alpha)_{k} = 0 at alpha={alpha}")
            total += rising(-n, k) * rising(-x, k) / (denom * math.factorial(k)) * z**k
        return total
    raise DomainError(f"unknown meixner definition {definition!r}")


def meixner_step_coefficient(j: int, x: Fraction, alpha: Fraction, beta: Fraction) -> Fraction:
    """Coefficient (beta-1)^j (x+1)_j / ((alpha-j-1)_j beta^j) of the j-step rule."""
    denom = rising(alpha - j - 1, j) * beta**j
    if denom == 0:
        raise DomainError(f"vanishing step denominator at alpha={alpha}, j={j}")
    return (beta - 1) ** j * rising(x + 1, j) / denom


@lru_cache(maxsize=None)
def harmonic(n: int, r: int = 1) -> Fraction:
    """H_n^(r) = sum over 1 <= k <= n of 1/k^r, with H_0 = 0."""
    if n < 0 or r < 1:
        raise DomainError("harmonic needs n >= 0, r >= 1")
    return sum((Fraction(1, k**r) for k in range(1, n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def gen_harmonic(n: int, r: int, x: Fraction) -> Fraction:
    """Shifted harmonic sum: sum over 1 <= k <= n of 1/(k+x)^r."""
    if n < 0 or r < 1:
        raise DomainError("gen_harmonic needs n >= 0, r >= 1")
    total = Fraction(0)
    for k in range(1, n + 1):
        base = k + x
        if base == 0:
            raise DomainError(f"gen_harmonic pole at x = {x}")
        total += 1 / base**r
    return total


def komatsu_d(n: int, r: int, j: int) -> Fraction:
    """Coefficient D_n(r, j) of q^j/j in the generalized-harmonic transform.

    D_n(r,j) = sum over 0 <= l <= j-1 of
        (-1)^(j-l-1) C(n-l-1, n-j) C(n,l) / (n-l)^(r-1)
    which satisfies D_n(1,j) = 1 for 1 <= j <= n.
    """
    if not 1 <= j <= n:
        raise DomainError("komatsu_d needs 1 <= j <= n")
    total = Fraction(0)
    for l in range(j):
        total += (
            (-1) ** (j - l - 1)
            * comb_int(n - l - 1, n - j)
            * comb_int(n, l)
            / Fraction(n - l) ** (r - 1)
        )
    return total


def q_integer(p: Fraction, n: int) -> Fraction:
    """[n]_p = 1 + p + ... + p^(n-1); zero for n = 0."""
    if n < 0:
        raise DomainError("q_integer needs n >= 0")
    return sum((p**i for i in range(n)), Fraction(0))


@lru_cache(maxsize=None)
def fuss_catalan(m: int, s: int, n: int) -> Fraction:
    """Fuss-Catalan A_m(s, n) = n/(sm+n) C(sm+n, m), with A_m(s,0) = [m == 0].

    The n = 0 convention resolves the 0/0 in the closed form and is the one
    forced by the recurrence A_m(s,n) = A_m(s,n-1) + A_{m-1}(s, s+n-1).
    """
    if m < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1) if m == 0 else Fraction(0)
    return Fraction(n, s * m + n) * binomial(s * m + n, m)
