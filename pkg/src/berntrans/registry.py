"""The identity registry: one entry per verified equation, plus selection.

Each entry declares its grid variables, enumerates concrete cases from the
run configuration, and supplies two independently computed side evaluators.
Entries that depend on a normalization that cannot be pinned down (the
Meixner step rule) carry a gate: a small self-test that must pass before the
entry is attempted, otherwise the entry reports skipped(gate-failed).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import appell
from . import probability as prob
from . import sequences as seqs
from . import specialfn as sf
from . import transform as tr
from .config import ConfigError, VerifyConfig
from .grid import DEFAULT_POOL, GridAxis, GridSpec, sample_points, unit_points
from .harness import (GateResult, IdentityCase, IdentityEntry, VerificationReport,
                      run_entries)
from .rationals import rat, rat_str

# ---------------------------------------------------------------------------
# Shared parameter sweeps. Continuous variables are gridded to certify the
# per-case polynomial identity; the sweeps below supply representative
# rational values for the remaining family parameters.
# ---------------------------------------------------------------------------

FIBO_PARAMS: tuple[tuple[Fraction, Fraction, Fraction], ...] = tuple(
    (rat(a), rat(b), rat(c))
    for a, b, c in [("0", "1", "1"), ("2", "1", "1"), ("1", "-2", "3"),
                    ("1/2", "1/3", "-2")]
)
LAGUERRE_PARAMS = tuple(
    (rat(a), rat(x)) for a, x in [("1/2", "2/3"), ("5/2", "-1/3"), ("-3/2", "3"),
                                  ("3", "1/5")]
)
MEIXNER_PARAMS = tuple(
    (rat(x), rat(a), rat(b))
    for x, a, b in [("1/2", "7/2", "3"), ("2", "9/2", "-2"), ("1/3", "5/3", "1/2")]
)
QINT_PS = tuple(rat(p) for p in ["2", "1/2", "-3", "3/2"])
BELL_XS = tuple(rat(x) for x in ["1", "2/3", "-1/2", "3"])
SCALE_ALPHAS = tuple(rat(a) for a in ["1", "2", "-1/2", "5/3"])
APPELL_ORDERS = tuple(rat(a) for a in ["1", "2", "1/2"])
SCALED_LAMBDAS = tuple(rat(v) for v in ["1", "2", "-3/2"])
UMBRAL_ALPHAS = tuple(rat(v) for v in ["5/2", "4", "-3/2"])
S2_SCALES = tuple(rat(v) for v in ["1", "2", "-1/2", "1/3"])
CHAIN_TAIL = tuple(rat(v) for v in ["1/2", "2/3", "3/4"])

GENERIC_FAMILY = appell.GenericAppell(tuple(
    rat(v) for v in ["1", "1/2", "-1/3", "2", "1/5", "7", "-1", "1/2", "3",
                     "-2/7", "1", "0", "1/3", "2", "-1", "1/6"]
))
MONOMIAL_FAMILY = appell.monomial_family(16)

OPERATOR_FAMILIES: tuple[tuple[str, appell.AppellSpec], ...] = (
    ("bernoulli-1", appell.BernoulliOrder(rat(1))),
    ("bernoulli-2", appell.BernoulliOrder(rat(2))),
    ("euler-1", appell.EulerOrder(rat(1))),
    ("euler-half", appell.EulerOrder(rat("1/2"))),
    ("generic", GENERIC_FAMILY),
)
UMBRAL_FAMILIES: tuple[tuple[str, appell.AppellSpec], ...] = (
    ("monomial", MONOMIAL_FAMILY),
    ("generic", GENERIC_FAMILY),
    ("bernoulli-1", appell.BernoulliOrder(rat(1))),
)


def _compose_specs() -> tuple[tuple[str, seqs.SequenceSpec], ...]:
    return (("usertable", seqs.generic_table()), ("harmonic", seqs.Harmonic()))


def _prob_functions() -> tuple[tuple[str, seqs.SequenceSpec], ...]:
    identity_fn = seqs.UserTable(tuple(Fraction(k) for k in range(16)))
    return (("identity", identity_fn), ("harmonic", seqs.Harmonic()),
            ("usertable", seqs.generic_table()))


def _axis(cfg: VerifyConfig, name: str, bound: int,
          exclude: Iterable[Fraction] = (), unit: bool = False) -> GridAxis:
    override = cfg.grid_overrides.get(name)
    if override is not None:
        return GridAxis(name, override, bound)
    if unit:
        return GridAxis(name, unit_points(bound), bound)
    return GridAxis(name, sample_points(bound, DEFAULT_POOL, exclude), bound)


def _params(**kw: object) -> tuple[tuple[str, str], ...]:
    return tuple((key, str(value)) for key, value in kw.items())


def _case(cfg: VerifyConfig, params: tuple[tuple[str, str], ...], axes, lhs, rhs) -> IdentityCase:
    return IdentityCase(params=params, grid=GridSpec(tuple(axes)), lhs=lhs, rhs=rhs)


def _basis_poly(cfg: VerifyConfig, spec: seqs.SequenceSpec, n: int):
    """Basis polynomial built from the (injectable) difference-table provider."""
    return tr.poly_from_diff_values(n, cfg.diff_values(spec, n))


# ---------------------------------------------------------------------------
# Harmonic-number transforms.
# ---------------------------------------------------------------------------

def _bt_a_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    spec = seqs.Harmonic()
    for n in range(1, max(20, cfg.n_max) + 1):
        yield _case(
            cfg, _params(n=n), [_axis(cfg, "q", n)],
            lhs=lambda pt, n=n: tr.direct_transform(spec, n, pt["q"]),
            rhs=lambda pt, n=n: sf.harmonic(n) - sum(
                (pt["q"] ** j / j for j in range(1, n + 1)), Fraction(0)),
        )


def _bt_b_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(1, cfg.n_max + 1):
        def lhs(pt, n=n):
            return sum(sf.harmonic(k) * sf.comb_int(n, k) * pt["x"] ** k
                       * pt["y"] ** (n - k) for k in range(n + 1))

        def rhs(pt, n=n):
            s = pt["x"] + pt["y"]
            return s**n * sf.harmonic(n) - sum(
                (pt["y"] ** j / j * s ** (n - j) for j in range(1, n + 1)),
                Fraction(0))

        yield _case(cfg, _params(n=n), [_axis(cfg, "x", n), _axis(cfg, "y", n)], lhs, rhs)


def _bt_kom_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for r in range(1, max(1, cfg.r_max) + 1):
        spec = seqs.GenHarmonic(r=r, x=Fraction(0))
        for n in range(1, max(10, cfg.n_max) + 1):
            yield _case(
                cfg, _params(r=r, n=n), [_axis(cfg, "q", n)],
                lhs=lambda pt, n=n, spec=spec: tr.direct_transform(spec, n, pt["q"]),
                rhs=lambda pt, n=n, r=r: sf.harmonic(n, r) - sum(
                    (sf.komatsu_d(n, r, j) * pt["q"] ** j / j for j in range(1, n + 1)),
                    Fraction(0)),
            )


# ---------------------------------------------------------------------------
# The basis representation and difference-table structure.
# ---------------------------------------------------------------------------

def _p1_c_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in seqs.catalog():
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(seq=name, n=n), [_axis(cfg, "q", n)],
                lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                rhs=lambda pt, spec=spec, n=n: _basis_poly(cfg, spec, n)(pt["q"]),
            )


def _p1_cbis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in seqs.catalog():
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(seq=name, n=n), [_axis(cfg, "q", n)],
                lhs=lambda pt, spec=spec, n=n: tr.direct_transform(
                    spec, n, pt["q"], conjugate=True),
                rhs=lambda pt, spec=spec, n=n: tr.poly_from_diff_values(
                    n, [seqs.dual_diff(spec, j) for j in range(n + 1)])(pt["q"]),
            )


def _p1_n2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in seqs.catalog():
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(seq=name, n=n), [_axis(cfg, "q", n)],
                lhs=lambda pt, spec=spec, n=n: tr.direct_transform(
                    spec, n, pt["q"], conjugate=True),
                rhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, 1 - pt["q"]),
            )


def _r_i_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in seqs.catalog():
        for n in range(2, min(cfg.n_max, 8) + 1):
            for k in range(1, n):
                yield _case(
                    cfg, _params(seq=name, n=n, k=k), [],
                    lhs=lambda pt, spec=spec, n=n, k=k: (
                        cfg.diff_values(spec, n)[k] - cfg.diff_values(spec, n - 1)[k]),
                    rhs=lambda pt, spec=spec, n=n, k=k: cfg.diff_values(spec, n)[k + 1],
                )


def _r_j_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in seqs.catalog():
        for n in range(1, min(cfg.n_max, 6) + 1):
            for k in range(0, n):
                for j in range(1, n - k + 1):
                    yield _case(
                        cfg, _params(seq=name, n=n, k=k, j=j), [],
                        lhs=lambda pt, spec=spec, n=n, k=k, j=j: sum(
                            (-1) ** l * sf.comb_int(j, l) * cfg.diff_values(spec, n - l)[k]
                            for l in range(j + 1)),
                        rhs=lambda pt, spec=spec, n=n, k=k, j=j: cfg.diff_values(spec, n)[k + j],
                    )


def _r_i1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    top = min(cfg.n_max, 6)
    for name, spec in seqs.catalog():
        if isinstance(spec, seqs.UserTable) and len(spec.terms) < 2 * top + 1:
            continue
        for n in range(0, top + 1):
            for k in range(0, top + 1):
                yield _case(
                    cfg, _params(seq=name, n=n, k=k, form="dual-from-rows"), [],
                    lhs=lambda pt, spec=spec, n=n, k=k: sum(
                        (-1) ** ((k - j) % 2) * sf.comb_int(n, j)
                        * cfg.diff_values(spec, n + k)[j + k] for j in range(n + 1)),
                    rhs=lambda pt, spec=spec, k=k: seqs.dual_diff(spec, k),
                )
                yield _case(
                    cfg, _params(seq=name, n=n, k=k, form="rows-from-dual"), [],
                    lhs=lambda pt, spec=spec, n=n, k=k: sum(
                        (-1) ** ((k - j) % 2) * sf.comb_int(n, j)
                        * seqs.dual_diff(spec, j + k) for j in range(n + 1)),
                    rhs=lambda pt, spec=spec, n=n, k=k: cfg.diff_values(spec, n + k)[k],
                )


def _c_k_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for r in range(1, max(1, cfg.r_max) + 1):
        for n in range(1, cfg.n_max + 1):
            poles = tuple(Fraction(-i) for i in range(0, n + 1))

            def rhs(pt, n=n, r=r):
                q, x = pt["q"], pt["x"]
                total = sf.gen_harmonic(n, r, x)
                for j in range(1, n + 1):
                    step = sum(
                        (-1) ** l * sf.comb_int(j - 1, l) / (n - l + x) ** r
                        for l in range(j))
                    total += (-1) ** j * sf.comb_int(n, j) * step * q**j
                return total

            yield _case(
                cfg, _params(r=r, n=n),
                [_axis(cfg, "q", n), _axis(cfg, "x", n * r, exclude=poles)],
                lhs=lambda pt, n=n, r=r: tr.direct_transform(
                    seqs.GenHarmonic(r=r, x=pt["x"]), n, pt["q"]),
                rhs=rhs,
            )


# ---------------------------------------------------------------------------
# Closed-form corollaries for the built-in families.
# ---------------------------------------------------------------------------

def _fibo_closed_cases(cfg: VerifyConfig, param_set) -> Iterator[IdentityCase]:
    for a, b, c in param_set:
        fib = seqs.FiboLike(a=a, b=b, c=c)
        for r in range(0, cfg.r_max + 1):
            spec = seqs.FiboLike(a=a, b=b, c=c, r=r)
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(a=rat_str(a), b=rat_str(b), c=rat_str(c), r=r, n=n),
                    [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                    rhs=lambda pt, fib=fib, c=c, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j) * fib.value(n + r - 2 * j)
                        * (c * pt["q"]) ** j for j in range(n + 1)),
                )


def _c_e_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _fibo_closed_cases(cfg, FIBO_PARAMS)


def _c_d_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _fibo_closed_cases(cfg, [(rat(0), rat(1), rat(1))])


def _c_dbis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _fibo_closed_cases(cfg, [(rat(2), rat(1), rat(1))])


def _c_l_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for alpha, x in LAGUERRE_PARAMS:
        for r in range(0, cfg.r_max + 1):
            spec = seqs.Laguerre(alpha=alpha, x=x, mode="degree", r=r)
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(alpha=rat_str(alpha), x=rat_str(x), r=r, n=n),
                    [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                    rhs=lambda pt, alpha=alpha, x=x, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j)
                        * sf.laguerre(n + r, alpha - j, x) * pt["q"] ** j
                        for j in range(n + 1)),
                )


def _c_m_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for alpha, x in LAGUERRE_PARAMS:
        for r in range(0, cfg.r_max + 1):
            spec = seqs.Laguerre(alpha=alpha, x=x, mode="order", r=r)
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(alpha=rat_str(alpha), x=rat_str(x), r=r, n=n),
                    [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                    rhs=lambda pt, alpha=alpha, x=x, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j)
                        * sf.laguerre(r - j, alpha + n, x) * pt["q"] ** j
                        for j in range(n + 1)),
                )


def _meixner_gate(cfg: VerifyConfig) -> GateResult:
    """Self-test of the one-step difference rule for the configured definition."""
    defn = cfg.meixner_definition
    for x, alpha, beta in MEIXNER_PARAMS:
        for r in (0, 1):
            for n in range(1, 5):
                lhs = (sf.meixner(n + r, x, alpha, beta, defn)
                       - sf.meixner(n + r - 1, x, alpha, beta, defn))
                coeff = sf.meixner_step_coefficient(1, x, alpha, beta)
                rhs = coeff * sf.meixner(n + r - 1, x, alpha + 1, beta, defn)
                if lhs != rhs:
                    return GateResult(passed=False, detail={
                        "definition": defn, "x": rat_str(x), "alpha": rat_str(alpha),
                        "beta": rat_str(beta), "n": str(n), "r": str(r),
                        "lhs": rat_str(lhs), "rhs": rat_str(rhs),
                    })
    return GateResult(passed=True)


def _c_n_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    defn = cfg.meixner_definition
    for x, alpha, beta in MEIXNER_PARAMS:
        for r in range(0, min(cfg.r_max, 2) + 1):
            spec = seqs.Meixner(x=x, alpha=alpha, beta=beta, r=r, definition=defn)
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg,
                    _params(x=rat_str(x), alpha=rat_str(alpha), beta=rat_str(beta),
                            r=r, n=n),
                    [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                    rhs=lambda pt, x=x, alpha=alpha, beta=beta, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j)
                        * sf.meixner_step_coefficient(j, x, alpha, beta)
                        * sf.meixner(n + r - j, x, alpha + j, beta, defn) * pt["q"] ** j
                        for j in range(n + 1)),
                )


def _c_p_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for r in range(0, cfg.r_max + 1):
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(r=r, n=n),
                [_axis(cfg, "q", n), _axis(cfg, "alpha", n + r)],
                lhs=lambda pt, r=r, n=n: tr.direct_transform(
                    seqs.BinomAlt(alpha=pt["alpha"], r=r), n, pt["q"]),
                rhs=lambda pt, r=r, n=n: sum(
                    (-1) ** (n - j) * sf.comb_int(n, j)
                    * sf.binomial(pt["alpha"] + j, n + r) * pt["q"] ** j
                    for j in range(n + 1)),
            )


def _c_pbis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for r in range(0, cfg.r_max + 1):
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(r=r, n=n),
                [_axis(cfg, "q", n), _axis(cfg, "alpha", n + r)],
                lhs=lambda pt, r=r, n=n: tr.direct_transform(
                    seqs.BinomAlt(alpha=pt["alpha"], r=r), n, pt["q"], conjugate=True),
                rhs=lambda pt, r=r, n=n: sum(
                    (-1) ** j * sf.comb_int(n, j)
                    * sf.binomial(pt["alpha"] + j, j + r) * pt["q"] ** j
                    for j in range(n + 1)),
            )


def _c_q_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, cfg.n_max + 1):
        yield _case(
            cfg, _params(n=n), [_axis(cfg, "q", n)],
            lhs=lambda pt, n=n: sum(
                (-1) ** k * sf.comb_int(n, k) ** 2 * (1 - pt["q"]) ** k
                * pt["q"] ** (n - k) for k in range(n + 1)),
            rhs=lambda pt, n=n: sum(
                (-1) ** (n - j) * sf.comb_int(n, j) * sf.binomial(j + n, n)
                * pt["q"] ** j for j in range(n + 1)),
        )


def _c_qbis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, cfg.n_max + 1):
        yield _case(
            cfg, _params(n=n), [_axis(cfg, "q", n)],
            lhs=lambda pt, n=n: sum(
                (-1) ** k * sf.comb_int(n, k) ** 2 * (1 - pt["q"]) ** (n - k)
                * pt["q"] ** k for k in range(n + 1)),
            rhs=lambda pt, n=n: sum(
                (-1) ** j * sf.comb_int(n, j) * sf.binomial(j + n, n) * pt["q"] ** j
                for j in range(n + 1)),
        )


def _c_j1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, min(cfg.n_max, 6) + 1):
        for k in range(0, 3):
            for r in range(0, min(cfg.r_max, 2) + 1):
                bound = n + k + r
                yield _case(
                    cfg, _params(n=n, k=k, r=r, form="collapse"),
                    [_axis(cfg, "alpha", bound)],
                    lhs=lambda pt, n=n, k=k, r=r: sum(
                        (-1) ** (n - j) * sf.comb_int(n, j)
                        * sf.binomial(pt["alpha"] + j + k, n + k + r)
                        for j in range(n + 1)),
                    rhs=lambda pt, k=k, r=r: sf.binomial(pt["alpha"] + k, k + r),
                )
                yield _case(
                    cfg, _params(n=n, k=k, r=r, form="expand"),
                    [_axis(cfg, "alpha", bound)],
                    lhs=lambda pt, n=n, k=k, r=r: sum(
                        (-1) ** (n - j) * sf.comb_int(n, j)
                        * sf.binomial(pt["alpha"] + j + k, j + k + r)
                        for j in range(n + 1)),
                    rhs=lambda pt, n=n, k=k, r=r: sf.binomial(pt["alpha"] + k, n + k + r),
                )


def _c_b3_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for s in range(0, 4):
        for m in range(1, 9):
            spec = seqs.FussCatalan(m=m, s=s)
            for n in range(1, min(m, cfg.n_max) + 1):
                yield _case(
                    cfg, _params(s=s, m=m, n=n), [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                    rhs=lambda pt, s=s, m=m, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j)
                        * sf.fuss_catalan(m - j, s, j * (s - 1) + n) * pt["q"] ** j
                        for j in range(n + 1)),
                )


def _c_r_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for p in QINT_PS:
        for r in range(0, cfg.r_max + 1):
            spec = seqs.QInt(p=p, r=r)
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(p=rat_str(p), r=r, n=n), [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                    rhs=lambda pt, p=p, r=r, n=n: (
                        1 - p**r * (p + pt["q"] * (1 - p)) ** n) / (1 - p),
                )


def _c_l1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, cfg.n_max + 1):
        yield _case(
            cfg, _params(n=n), [_axis(cfg, "q", n), _axis(cfg, "x", n + 1)],
            lhs=lambda pt, n=n: tr.direct_transform(
                seqs.BellAlt(x=pt["x"]), n, pt["q"], conjugate=True),
            rhs=lambda pt, n=n: sum(
                (-1) ** j * sf.comb_int(n, j) * sf.bell_value(j + 1, pt["x"])
                * pt["q"] ** j for j in range(n + 1)),
        )


def _c_p1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, cfg.n_max + 1):
        yield _case(
            cfg, _params(n=n), [_axis(cfg, "q", n), _axis(cfg, "x", n + 1)],
            lhs=lambda pt, n=n: tr.direct_transform(
                seqs.GeomAlt(x=pt["x"]), n, pt["q"], conjugate=True),
            rhs=lambda pt, n=n: (pt["x"] + 1) * sum(
                sf.comb_int(n, j) * sf.geometric_value(j, pt["x"]) * (-pt["q"]) ** j
                for j in range(n + 1)) - 1,
        )


# ---------------------------------------------------------------------------
# Generating-function extraction.
# ---------------------------------------------------------------------------

def _p1_s_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in seqs.catalog():
        for n in range(0, cfg.n_max + 1):
            for mode in tr.GF_MODES:
                yield _case(
                    cfg, _params(seq=name, n=n, mode=mode), [_axis(cfg, "q", n)],
                    lhs=lambda pt, spec=spec, n=n, mode=mode: tr.gf_transform(
                        spec, n, pt["q"], mode),
                    rhs=lambda pt, spec=spec, n=n: tr.direct_transform(spec, n, pt["q"]),
                )


# ---------------------------------------------------------------------------
# Composition, shift, inverse and alternating laws.
# ---------------------------------------------------------------------------

def _p2_d1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for n in range(0, max(10, cfg.n_max) + 1):
            yield _case(
                cfg, _params(seq=name, n=n), [_axis(cfg, "x", n), _axis(cfg, "q", n)],
                lhs=lambda pt, spec=spec, n=n: tr.direct_transform(
                    seqs.TransformOf(inner=spec, at=pt["x"]), n, pt["q"]),
                rhs=lambda pt, spec=spec, n=n: tr.direct_transform(
                    spec, n, pt["x"] + pt["q"] - pt["x"] * pt["q"]),
            )


def _p2_d1bis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for n in range(0, max(10, cfg.n_max) + 1):
            yield _case(
                cfg, _params(seq=name, n=n), [_axis(cfg, "x", n), _axis(cfg, "q", n)],
                lhs=lambda pt, spec=spec, n=n: tr.direct_transform(
                    spec, n, 1 - pt["x"] * pt["q"]),
                rhs=lambda pt, spec=spec, n=n: tr.direct_transform(
                    seqs.TransformOf(inner=spec, at=1 - pt["x"]), n, pt["q"],
                    conjugate=True),
            )


def _c1_e1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for m in range(1, cfg.m_max + 1):
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(seq=name, m=m, n=n),
                    [_axis(cfg, "q", n * m, exclude=(Fraction(1),))],
                    lhs=lambda pt, spec=spec, n=n, m=m: tr.direct_transform(
                        spec, n, pt["q"] ** m),
                    rhs=lambda pt, spec=spec, n=n, m=m: tr.direct_transform(
                        seqs.TransformOf(inner=spec, at=1 - sf.q_integer(pt["q"], m)),
                        n, pt["q"]),
                )


def _c1_f1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for m in range(1, cfg.m_max + 1):
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(seq=name, m=m, n=n),
                    [_axis(cfg, "q", n * m, exclude=(Fraction(1),))],
                    lhs=lambda pt, spec=spec, n=n, m=m: tr.direct_transform(
                        spec, n, pt["q"] ** m),
                    rhs=lambda pt, spec=spec, n=n, m=m: tr.direct_transform(
                        seqs.TransformOf(inner=spec, at=pt["q"]), n,
                        1 - sf.q_integer(pt["q"], m)),
                )


def _c1_q2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for n in range(0, cfg.n_max + 1):
            for form in ("blend", "swap"):
                yield _case(
                    cfg, _params(seq=name, n=n, form=form),
                    [_axis(cfg, "q", 2 * n, exclude=(Fraction(1),))],
                    lhs=lambda pt, spec=spec, n=n: seqs.term(spec, n),
                    rhs=lambda pt, spec=spec, n=n, form=form: (
                        tr.inverse_composition(spec, n, pt["q"])[0 if form == "blend" else 1].rhs),
                )


def _c1_g1_h1_cases(cfg: VerifyConfig, form_index: int) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for alpha in SCALE_ALPHAS:
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(seq=name, alpha=rat_str(alpha), n=n),
                    [_axis(cfg, "q", 2 * n, exclude=(Fraction(1),))],
                    lhs=lambda pt, spec=spec, n=n, alpha=alpha: tr.direct_transform(
                        spec, n, (alpha + 1) * pt["q"]),
                    rhs=lambda pt, spec=spec, n=n, alpha=alpha: (
                        tr.scaled_composition(spec, n, alpha, pt["q"])[form_index].rhs),
                )


def _p3_q1_cases(cfg: VerifyConfig, m_values: Sequence[int],
                 n_top: int) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for m in m_values:
            for n in range(0, n_top + 1):
                bound = n + m

                def lhs(pt, spec=spec, n=n, m=m):
                    q = pt["q"]
                    return (1 - q) ** m * sum(
                        tr.direct_transform(spec, k + m, pt["x"])
                        * tr.bernstein_weight(n, k, q) for k in range(n + 1))

                def rhs(pt, spec=spec, n=n, m=m):
                    q = pt["q"]
                    blended = pt["x"] + q - pt["x"] * q
                    return sum(
                        sf.comb_int(m, j) * (-q) ** (m - j)
                        * tr.direct_transform(spec, j + n, blended)
                        for j in range(m + 1))

                yield _case(
                    cfg, _params(seq=name, m=m, n=n),
                    [_axis(cfg, "x", bound), _axis(cfg, "q", bound, exclude=(Fraction(1),))],
                    lhs, rhs)


def _p3_i2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for m in range(0, cfg.m_max + 1):
            yield _case(
                cfg, _params(seq=name, m=m),
                [_axis(cfg, "x", m), _axis(cfg, "q", m, exclude=(Fraction(1),))],
                lhs=lambda pt, spec=spec, m=m: (1 - pt["q"]) ** m
                * tr.direct_transform(spec, m, pt["x"]),
                rhs=lambda pt, spec=spec, m=m: sum(
                    sf.comb_int(m, j) * (-pt["q"]) ** (m - j) * tr.direct_transform(
                        spec, j, pt["x"] + pt["q"] - pt["x"] * pt["q"])
                    for j in range(m + 1)),
            )


def _c2_u1_cases(cfg: VerifyConfig, m_values: Sequence[int],
                 n_top: int) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for m in m_values:
            for n in range(0, n_top + 1):
                def lhs(pt, spec=spec, n=n, m=m):
                    q = pt["q"]
                    return (1 - q) ** m * sum(
                        seqs.term(spec, k + m) * tr.bernstein_weight(n, k, q)
                        for k in range(n + 1))

                def rhs(pt, spec=spec, n=n, m=m):
                    q = pt["q"]
                    return sum(
                        sf.comb_int(m, j) * (-q) ** (m - j)
                        * tr.direct_transform(spec, j + n, q) for j in range(m + 1))

                yield _case(
                    cfg, _params(seq=name, m=m, n=n),
                    [_axis(cfg, "q", n + m, exclude=(Fraction(1),))], lhs, rhs)


def _c2_j2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for m in range(0, cfg.m_max + 1):
            yield _case(
                cfg, _params(seq=name, m=m),
                [_axis(cfg, "q", m, exclude=(Fraction(1),))],
                lhs=lambda pt, spec=spec, m=m: (1 - pt["q"]) ** m * seqs.term(spec, m),
                rhs=lambda pt, spec=spec, m=m: sum(
                    sf.comb_int(m, j) * (-pt["q"]) ** (m - j)
                    * tr.direct_transform(spec, j, pt["q"]) for j in range(m + 1)),
            )


def _r_u2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for r in range(1, len(CHAIN_TAIL) + 1):
            tail = CHAIN_TAIL[:r]
            prod = Fraction(1)
            for value in tail:
                prod *= value
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(seq=name, r=r, n=n,
                                 tail=";".join(rat_str(v) for v in tail)),
                    [_axis(cfg, "x0", n)],
                    lhs=lambda pt, spec=spec, n=n, prod=prod: tr.direct_transform(
                        spec, n, 1 - pt["x0"] * prod),
                    rhs=lambda pt, spec=spec, n=n, prod=prod: tr.direct_transform(
                        seqs.TransformOf(inner=spec, at=1 - prod), n, pt["x0"],
                        conjugate=True),
                )


def _r_t2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for r in range(1, len(CHAIN_TAIL) + 1):
            tail = CHAIN_TAIL[:r]
            prod = Fraction(1)
            for value in tail:
                prod *= value
            for m in range(0, min(cfg.m_max, 2) + 1):
                for n in range(0, min(cfg.n_max, 6) + 1):
                    def lhs(pt, spec=spec, n=n, m=m, prod=prod):
                        x0 = pt["x0"]
                        return x0**m * sum(
                            tr.direct_transform(spec, k + m, 1 - prod)
                            * sf.comb_int(n, k) * (1 - x0) ** (n - k) * x0**k
                            for k in range(n + 1))

                    def rhs(pt, spec=spec, n=n, m=m, prod=prod):
                        x0 = pt["x0"]
                        return sum(
                            (-1) ** (m - j) * sf.comb_int(m, j) * (1 - x0) ** (m - j)
                            * tr.direct_transform(spec, j + n, 1 - x0 * prod)
                            for j in range(m + 1))

                    yield _case(
                        cfg, _params(seq=name, r=r, m=m, n=n,
                                     tail=";".join(rat_str(v) for v in tail)),
                        [_axis(cfg, "x0", n + m)], lhs, rhs)


def _r_a3_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, spec in _compose_specs():
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(seq=name, n=n, form="sequence"),
                [_axis(cfg, "q", n, exclude=(Fraction(0),))],
                lhs=lambda pt, spec=spec, n=n: sum(
                    (-1) ** k * seqs.term(spec, k) * sf.comb_int(n, k)
                    * (1 - pt["q"]) ** k for k in range(n + 1)),
                rhs=lambda pt, spec=spec, n=n: pt["q"] ** n * tr.direct_transform(
                    spec, n, 1 / pt["q"]),
            )
            yield _case(
                cfg, _params(seq=name, n=n, form="transformed"),
                [_axis(cfg, "q", n, exclude=(Fraction(0),)), _axis(cfg, "x", n)],
                lhs=lambda pt, spec=spec, n=n: sum(
                    (-1) ** (n - k) * tr.direct_transform(spec, k, 1 - pt["x"])
                    * sf.comb_int(n, k) * (1 - pt["q"]) ** (n - k)
                    for k in range(n + 1)),
                rhs=lambda pt, spec=spec, n=n: pt["q"] ** n * tr.direct_transform(
                    spec, n, 1 - pt["x"] / pt["q"]),
            )


# ---------------------------------------------------------------------------
# Probabilistic layer.
# ---------------------------------------------------------------------------

def _pr_k2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(1, max(12, cfg.n_max) + 1):
        for k in range(0, n + 1):
            yield _case(
                cfg, _params(n=n, k=k),
                [_axis(cfg, "x", n, unit=True), _axis(cfg, "y", n, unit=True)],
                lhs=lambda pt, n=n, k=k: prob.compose_pmf(
                    1 - pt["y"], prob.binomial_pmf(n, 1 - pt["x"]))[k],
                rhs=lambda pt, n=n, k=k: (
                    sf.comb_int(n, k)
                    * ((1 - pt["x"]) * (1 - pt["y"])) ** k
                    * (1 - (1 - pt["x"]) * (1 - pt["y"])) ** (n - k)),
            )


def _expectation_sides(f: seqs.SequenceSpec, m: int, n: int, x: Fraction, y: Fraction):
    lhs = (1 - x) ** m * prob.expect(f, prob.shifted_compose_pmf(m, n, x, y))
    rhs = Fraction(0)
    for j in range(m + 1):
        law = prob.compose_pmf(1 - y, prob.binomial_pmf(j + n, 1 - x))
        rhs += sf.comb_int(m, j) * (-x) ** (m - j) * prob.expect(f, law)
    return lhs, rhs


def _pr_m2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for name, f in _prob_functions():
        for m in range(0, min(cfg.m_max, 3) + 1):
            for n in range(0, min(cfg.n_max, 6) + 1):
                bound = n + m
                yield _case(
                    cfg, _params(f=name, m=m, n=n),
                    [_axis(cfg, "x", bound, unit=True), _axis(cfg, "y", bound, unit=True)],
                    lhs=lambda pt, f=f, m=m, n=n: _expectation_sides(
                        f, m, n, pt["x"], pt["y"])[0],
                    rhs=lambda pt, f=f, m=m, n=n: _expectation_sides(
                        f, m, n, pt["x"], pt["y"])[1],
                )
                yield _case(
                    cfg, _params(f=name, m=m, n=n, form="transform-bridge"),
                    [_axis(cfg, "x", bound, unit=True, exclude=(Fraction(1),)),
                     _axis(cfg, "y", bound, unit=True)],
                    lhs=lambda pt, f=f, m=m, n=n: _expectation_sides(
                        f, m, n, pt["x"], pt["y"])[0],
                    rhs=lambda pt, f=f, m=m, n=n: tr.shifted_transform(
                        f, n, m, pt["y"], pt["x"]).lhs,
                )


def _pr_o2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    zero = Fraction(0)
    for name, f in _prob_functions():
        for m in range(0, min(cfg.m_max, 3) + 1):
            for n in range(0, min(cfg.n_max, 6) + 1):
                yield _case(
                    cfg, _params(f=name, m=m, n=n),
                    [_axis(cfg, "x", n + m, unit=True)],
                    lhs=lambda pt, f=f, m=m, n=n: _expectation_sides(
                        f, m, n, pt["x"], zero)[0],
                    rhs=lambda pt, f=f, m=m, n=n: _expectation_sides(
                        f, m, n, pt["x"], zero)[1],
                )


def _pr_p2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    zero = Fraction(0)
    for name, f in _prob_functions():
        for m in range(0, min(cfg.m_max, 3) + 1):
            yield _case(
                cfg, _params(f=name, m=m), [_axis(cfg, "x", m, unit=True)],
                lhs=lambda pt, f=f, m=m: (1 - pt["x"]) ** m * seqs.term(f, m),
                rhs=lambda pt, f=f, m=m: _expectation_sides(f, m, 0, pt["x"], zero)[1],
            )


# ---------------------------------------------------------------------------
# Appell layer.
# ---------------------------------------------------------------------------

def _ap_f2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    import math

    for name, fam in OPERATOR_FAMILIES:
        for n in range(0, cfg.n_max + 1):
            def lhs(pt, fam=fam, n=n):
                q = pt["q"]
                return sum(
                    sf.comb_int(n, k)
                    * Fraction(math.factorial(n), math.factorial(k))
                    * appell.appell_value(fam, k, pt["y"])
                    * (1 - q) ** k * q ** (n - k) for k in range(n + 1))

            def rhs(pt, fam=fam, n=n):
                q = pt["q"]
                poly = appell.appell_poly(fam, n)
                for _ in range(n):
                    poly = poly * (1 - q) + poly.derivative() * q
                return poly(pt["y"])

            yield _case(cfg, _params(family=name, n=n),
                        [_axis(cfg, "q", n), _axis(cfg, "y", n)], lhs, rhs)


def _scaled_family_cases(cfg: VerifyConfig,
                         families: Sequence[tuple[str, appell.AppellSpec]]
                         ) -> Iterator[IdentityCase]:
    for name, fam in families:
        for lam in SCALED_LAMBDAS:
            for n in range(0, cfg.n_max + 1):
                def lhs(pt, fam=fam, lam=lam, n=n):
                    q = pt["q"]
                    return sum(
                        appell.appell_value(fam, n - k, pt["x"]) * sf.comb_int(n, k)
                        * (1 - q) ** k * (lam * q) ** (n - k) for k in range(n + 1))

                def rhs(pt, fam=fam, lam=lam, n=n):
                    q = pt["q"]
                    shift = pt["x"] - 1 / lam + 1 / (lam * q)
                    return (lam * q) ** n * appell.appell_value(fam, n, shift)

                yield _case(
                    cfg, _params(family=name, lam=rat_str(lam), n=n),
                    [_axis(cfg, "x", n), _axis(cfg, "q", n, exclude=(Fraction(0),))],
                    lhs, rhs)


def _ap_k1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _scaled_family_cases(
        cfg, (("monomial", MONOMIAL_FAMILY), ("generic", GENERIC_FAMILY)))


def _ap_m1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _scaled_family_cases(
        cfg, tuple((f"bernoulli-{rat_str(a)}", appell.BernoulliOrder(a))
                   for a in APPELL_ORDERS))


def _ap_n1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _scaled_family_cases(
        cfg, tuple((f"euler-{rat_str(a)}", appell.EulerOrder(a))
                   for a in APPELL_ORDERS))


@lru_cache(maxsize=None)
def _umbral_cached(which: str, fam: appell.AppellSpec, n: int, x: Fraction,
                   y: Fraction, seq: seqs.SequenceSpec | None, b: Fraction | None,
                   alpha: Fraction | None, r: int):
    return appell.umbral_identity(which, fam, n, x, y, seq=seq, b=b, alpha=alpha, r=r)


def _umbral_seq_cases(cfg: VerifyConfig, which: str,
                      families: Sequence[tuple[str, appell.AppellSpec]]
                      ) -> Iterator[IdentityCase]:
    sequences = (("usertable", seqs.generic_table()),
                 ("fibolike", seqs.FiboLike(a=rat(0), b=rat(1), c=rat(1))))
    for fam_name, fam in families:
        for seq_name, seq in sequences:
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(which=which, family=fam_name, seq=seq_name, n=n),
                    [_axis(cfg, "x", n), _axis(cfg, "y", n)],
                    lhs=lambda pt, which=which, fam=fam, seq=seq, n=n: _umbral_cached(
                        which, fam, n, pt["x"], pt["y"], seq, None, None, 0).lhs,
                    rhs=lambda pt, which=which, fam=fam, seq=seq, n=n: _umbral_cached(
                        which, fam, n, pt["x"], pt["y"], seq, None, None, 0).rhs,
                )


def _ap_f_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _umbral_seq_cases(cfg, "f", (("monomial", MONOMIAL_FAMILY),))


def _ap_fbis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _umbral_seq_cases(cfg, "fbis", (("monomial", MONOMIAL_FAMILY),))


def _ap_u_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _umbral_seq_cases(cfg, "u", UMBRAL_FAMILIES)


def _ap_ubis_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    return _umbral_seq_cases(cfg, "ubis", UMBRAL_FAMILIES)


def _ap_v_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for fam_name, fam in UMBRAL_FAMILIES:
        for r in range(0, cfg.r_max + 1):
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg, _params(family=fam_name, r=r, n=n),
                    [_axis(cfg, "x", n), _axis(cfg, "y", n)],
                    lhs=lambda pt, fam=fam, n=n, r=r: _umbral_cached(
                        "v", fam, n, pt["x"], pt["y"], None, None, None, r).lhs,
                    rhs=lambda pt, fam=fam, n=n, r=r: _umbral_cached(
                        "v", fam, n, pt["x"], pt["y"], None, None, None, r).rhs,
                )


def _ap_o1_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for fam_name, fam in UMBRAL_FAMILIES:
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(family=fam_name, n=n),
                [_axis(cfg, "x", n), _axis(cfg, "y", n)],
                lhs=lambda pt, fam=fam, n=n: _umbral_cached(
                    "o1", fam, n, pt["x"], pt["y"], None, None, None, 0).lhs,
                rhs=lambda pt, fam=fam, n=n: _umbral_cached(
                    "o1", fam, n, pt["x"], pt["y"], None, None, None, 0).rhs,
            )


def _ap_w_cases(cfg: VerifyConfig, which: str) -> Iterator[IdentityCase]:
    for fam_name, fam in UMBRAL_FAMILIES:
        for alpha in UMBRAL_ALPHAS:
            for r in range(0, min(cfg.r_max, 2) + 1):
                for n in range(0, cfg.n_max + 1):
                    yield _case(
                        cfg, _params(which=which, family=fam_name,
                                     alpha=rat_str(alpha), r=r, n=n),
                        [_axis(cfg, "x", n), _axis(cfg, "y", n)],
                        lhs=lambda pt, which=which, fam=fam, n=n, alpha=alpha, r=r:
                            _umbral_cached(which, fam, n, pt["x"], pt["y"],
                                           None, None, alpha, r).lhs,
                        rhs=lambda pt, which=which, fam=fam, n=n, alpha=alpha, r=r:
                            _umbral_cached(which, fam, n, pt["x"], pt["y"],
                                           None, None, alpha, r).rhs,
                    )


def _ap_s2_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    sequences = (("usertable", seqs.generic_table()), ("harmonic", seqs.Harmonic()))
    for fam_name, fam in UMBRAL_FAMILIES[1:]:
        for seq_name, seq in sequences:
            for b in S2_SCALES:
                for n in range(0, cfg.n_max + 1):
                    yield _case(
                        cfg, _params(family=fam_name, seq=seq_name, b=rat_str(b), n=n),
                        [_axis(cfg, "x", n), _axis(cfg, "y", n)],
                        lhs=lambda pt, fam=fam, seq=seq, b=b, n=n: _umbral_cached(
                            "s2", fam, n, pt["x"], pt["y"], seq, b, None, 0).lhs,
                        rhs=lambda pt, fam=fam, seq=seq, b=b, n=n: _umbral_cached(
                            "s2", fam, n, pt["x"], pt["y"], seq, b, None, 0).rhs,
                    )


# ---------------------------------------------------------------------------
# The q -> 1 limit identities, checked both through the closed forms and
# through the basis-representation polynomial evaluated at q = 1.
# ---------------------------------------------------------------------------

def _qto1_fibonacci_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for a, b, c in FIBO_PARAMS:
        fib = seqs.FiboLike(a=a, b=b, c=c)
        for r in range(0, cfg.r_max + 1):
            spec = seqs.FiboLike(a=a, b=b, c=c, r=r)
            for n in range(0, cfg.n_max + 1):
                base = _params(a=rat_str(a), b=rat_str(b), c=rat_str(c), r=r, n=n)
                yield _case(
                    cfg, base + (("form", "closed"),), [],
                    lhs=lambda pt, fib=fib, c=c, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j) * fib.value(n + r - 2 * j) * c**j
                        for j in range(n + 1)),
                    rhs=lambda pt, fib=fib, r=r: fib.value(r),
                )
                yield _case(
                    cfg, base + (("form", "basis"),), [],
                    lhs=lambda pt, spec=spec, n=n: _basis_poly(cfg, spec, n)(Fraction(1)),
                    rhs=lambda pt, fib=fib, r=r: fib.value(r),
                )


def _qto1_binomial_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for r in range(0, cfg.r_max + 1):
        for n in range(0, cfg.n_max + 1):
            yield _case(
                cfg, _params(r=r, n=n, form="closed"), [_axis(cfg, "alpha", n + r)],
                lhs=lambda pt, n=n, r=r: sum(
                    (-1) ** (n - j) * sf.comb_int(n, j)
                    * sf.binomial(pt["alpha"] + j, r + n) for j in range(n + 1)),
                rhs=lambda pt, r=r: sf.binomial(pt["alpha"], r),
            )
            yield _case(
                cfg, _params(r=r, n=n, form="basis"), [_axis(cfg, "alpha", n + r)],
                lhs=lambda pt, n=n, r=r: _basis_poly(
                    cfg, seqs.BinomAlt(alpha=pt["alpha"], r=r), n)(Fraction(1)),
                rhs=lambda pt, r=r: sf.binomial(pt["alpha"], r),
            )


def _qto1_fusscatalan_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for s in range(0, 4):
        for m in range(1, 9):
            for n in range(1, min(m, cfg.n_max) + 1):
                yield _case(
                    cfg, _params(s=s, m=m, n=n, form="closed"), [],
                    lhs=lambda pt, s=s, m=m, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j)
                        * sf.fuss_catalan(m - j, s, j * (s - 1) + n)
                        for j in range(n + 1)),
                    rhs=lambda pt: Fraction(0),
                )
                yield _case(
                    cfg, _params(s=s, m=m, n=n, form="basis"), [],
                    lhs=lambda pt, s=s, m=m, n=n: _basis_poly(
                        cfg, seqs.FussCatalan(m=m, s=s), n)(Fraction(1)),
                    rhs=lambda pt: Fraction(0),
                )


def _qto1_laguerre_cases(cfg: VerifyConfig, mode: str) -> Iterator[IdentityCase]:
    for alpha, x in LAGUERRE_PARAMS:
        for r in range(0, cfg.r_max + 1):
            spec = seqs.Laguerre(alpha=alpha, x=x, mode=mode, r=r)
            for n in range(0, cfg.n_max + 1):
                base = _params(alpha=rat_str(alpha), x=rat_str(x), r=r, n=n)
                if mode == "degree":
                    closed = lambda pt, alpha=alpha, x=x, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j) * sf.laguerre(n + r, alpha - j, x)
                        for j in range(n + 1))
                else:
                    closed = lambda pt, alpha=alpha, x=x, r=r, n=n: sum(
                        (-1) ** j * sf.comb_int(n, j) * sf.laguerre(r - j, alpha + n, x)
                        for j in range(n + 1))
                yield _case(
                    cfg, base + (("form", "closed"),), [],
                    lhs=closed,
                    rhs=lambda pt, alpha=alpha, x=x, r=r: sf.laguerre(r, alpha, x),
                )
                yield _case(
                    cfg, base + (("form", "basis"),), [],
                    lhs=lambda pt, spec=spec, n=n: _basis_poly(cfg, spec, n)(Fraction(1)),
                    rhs=lambda pt, alpha=alpha, x=x, r=r: sf.laguerre(r, alpha, x),
                )


def _qto1_meixner_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    defn = cfg.meixner_definition
    for x, alpha, beta in MEIXNER_PARAMS:
        for r in range(0, min(cfg.r_max, 2) + 1):
            spec = seqs.Meixner(x=x, alpha=alpha, beta=beta, r=r, definition=defn)
            for n in range(0, cfg.n_max + 1):
                yield _case(
                    cfg,
                    _params(x=rat_str(x), alpha=rat_str(alpha), beta=rat_str(beta),
                            r=r, n=n, form="basis"), [],
                    lhs=lambda pt, spec=spec, n=n: _basis_poly(cfg, spec, n)(Fraction(1)),
                    rhs=lambda pt, x=x, alpha=alpha, beta=beta, r=r: sf.meixner(
                        r, x, alpha, beta, defn),
                )


def _qto1_bell_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, cfg.n_max + 1):
        yield _case(
            cfg, _params(n=n, form="closed"), [_axis(cfg, "x", n + 1)],
            lhs=lambda pt, n=n: sum(
                (-1) ** (n - j) * sf.comb_int(n, j) * sf.bell_value(j + 1, pt["x"])
                for j in range(n + 1)),
            rhs=lambda pt, n=n: pt["x"] * sf.bell_value(n, pt["x"]),
        )
        yield _case(
            cfg, _params(n=n, form="basis"), [_axis(cfg, "x", n + 1)],
            lhs=lambda pt, n=n: (-1) ** n * tr.basis_representation(
                seqs.BellAlt(x=pt["x"]), n, conjugate=True)(Fraction(1)),
            rhs=lambda pt, n=n: pt["x"] * sf.bell_value(n, pt["x"]),
        )


def _qto1_geometric_cases(cfg: VerifyConfig) -> Iterator[IdentityCase]:
    for n in range(0, cfg.n_max + 1):
        yield _case(
            cfg, _params(n=n, form="closed"), [_axis(cfg, "x", n + 1)],
            lhs=lambda pt, n=n: (pt["x"] + 1) * sum(
                (-1) ** (n - j) * sf.comb_int(n, j) * sf.geometric_value(j, pt["x"])
                for j in range(n + 1)),
            rhs=lambda pt, n=n: pt["x"] * sf.geometric_value(n, pt["x"]) + (-1) ** n,
        )
        yield _case(
            cfg, _params(n=n, form="basis"), [_axis(cfg, "x", n + 1)],
            lhs=lambda pt, n=n: (-1) ** n * tr.basis_representation(
                seqs.GeomAlt(x=pt["x"]), n, conjugate=True)(Fraction(1)),
            rhs=lambda pt, n=n: pt["x"] * sf.geometric_value(n, pt["x"]),
        )


# ---------------------------------------------------------------------------
# Registry assembly.
# ---------------------------------------------------------------------------

def _entry(id: str, label: str, module: str, description: str,
           variables: tuple[str, ...], build_cases, gate=None) -> IdentityEntry:
    return IdentityEntry(id=id, label=label, module=module, description=description,
                         variables=variables, build_cases=build_cases, gate=gate)


REGISTRY: tuple[IdentityEntry, ...] = (
    _entry("BT.a", "a", "intro",
           "harmonic transform collapses to H_n minus the power sum of q^j/j",
           ("q",), _bt_a_cases),
    _entry("BT.b", "b", "intro",
           "two-variable harmonic binomial sum against its closed form",
           ("x", "y"), _bt_b_cases),
    _entry("BT.kom", "kom", "intro",
           "generalized harmonic transform with corrected D(n,r,j) coefficients",
           ("q",), _bt_kom_cases),
    _entry("P1.c", "c", "basis",
           "direct sum equals the difference-table polynomial in q",
           ("q",), _p1_c_cases),
    _entry("P1.cbis", "cbis", "basis",
           "conjugate sum equals the dual-difference polynomial in q",
           ("q",), _p1_cbis_cases),
    _entry("P1.n2", "n2", "basis",
           "conjugate transform at q equals the transform at 1-q",
           ("q",), _p1_n2_cases),
    _entry("R.i", "i", "basis",
           "one backward difference in n moves M(n,k) to M(n,k+1)",
           (), _r_i_cases),
    _entry("R.j", "j", "basis",
           "j-fold backward differences in n move M(n,k) to M(n,k+j)",
           (), _r_j_cases),
    _entry("R.i1", "i1", "basis",
           "alternating row sums exchange M(n+k,j+k) with the dual differences",
           (), _r_i1_cases),
    _entry("C.k", "k", "basis",
           "shifted generalized harmonic transform with closed-form differences",
           ("q", "x"), _c_k_cases),
    _entry("C.e", "e", "corollaries",
           "two-term recurrence family: differences scale by c per step",
           ("q",), _c_e_cases),
    _entry("C.d", "d", "corollaries",
           "Fibonacci instance of the recurrence-family identity",
           ("q",), _c_d_cases),
    _entry("C.dbis", "dbis", "corollaries",
           "Lucas instance of the recurrence-family identity",
           ("q",), _c_dbis_cases),
    _entry("C.l", "l", "corollaries",
           "Laguerre degree-shift transform lowers the order parameter",
           ("q",), _c_l_cases),
    _entry("C.m", "m", "corollaries",
           "Laguerre order-shift transform lowers the degree index",
           ("q",), _c_m_cases),
    _entry("C.n", "n", "corollaries",
           "Meixner transform under the configured normalization (gated)",
           ("q",), _c_n_cases, gate=_meixner_gate),
    _entry("C.p", "p", "corollaries",
           "alternating binomial-coefficient transform, row form",
           ("q", "alpha"), _c_p_cases),
    _entry("C.pbis", "pbis", "corollaries",
           "alternating binomial-coefficient transform, dual form",
           ("q", "alpha"), _c_pbis_cases),
    _entry("C.q", "q", "corollaries",
           "squared-binomial alternating sum, row form",
           ("q",), _c_q_cases),
    _entry("C.qbis", "qbis", "corollaries",
           "squared-binomial alternating sum, dual form",
           ("q",), _c_qbis_cases),
    _entry("C.j1", "j1", "corollaries",
           "alternating binomial sums that collapse or expand an index shift",
           ("alpha",), _c_j1_cases),
    _entry("C.b3", "b3", "corollaries",
           "ballot-number transform via the two-parameter recurrence",
           ("q",), _c_b3_cases),
    _entry("C.r", "r", "corollaries",
           "q-integer transform sums to a single shifted power",
           ("q",), _c_r_cases),
    _entry("C.l1", "l1", "corollaries",
           "Bell-polynomial conjugate transform shifts the index by one",
           ("q", "x"), _c_l1_cases),
    _entry("C.p1", "p1", "corollaries",
           "geometric-polynomial conjugate transform with the (x+1) factor",
           ("q", "x"), _c_p1_cases),
    _entry("P1.s", "s", "series",
           "coefficient extraction from both generating-function products",
           ("q",), _p1_s_cases),
    _entry("P2.d1", "d1", "composition",
           "transforming the transformed values blends the two arguments",
           ("x", "q"), _p2_d1_cases),
    _entry("P2.d1bis", "d1bis", "composition",
           "mirrored blend law with the conjugate weights",
           ("x", "q"), _p2_d1bis_cases),
    _entry("C1.e1", "e1", "composition",
           "power argument q^m reached through the blend law",
           ("q",), _c1_e1_cases),
    _entry("C1.f1", "f1", "composition",
           "power argument q^m reached with swapped weights",
           ("q",), _c1_f1_cases),
    _entry("C1.q2", "q2", "composition",
           "sequence recovery from transformed values (inverse relation)",
           ("q",), _c1_q2_cases),
    _entry("C1.g1", "g1", "composition",
           "scaled argument (alpha+1)q through the blend law",
           ("q",), lambda cfg: _c1_g1_h1_cases(cfg, 0)),
    _entry("C1.h1", "h1", "composition",
           "scaled argument (alpha+1)q with swapped weights",
           ("q",), lambda cfg: _c1_g1_h1_cases(cfg, 1)),
    _entry("P3.q1", "q1", "composition",
           "shift law: transforms of shifted transforms telescope in m",
           ("x", "q"), lambda cfg: _p3_q1_cases(
               cfg, range(0, cfg.m_max + 1), min(cfg.n_max, 6))),
    _entry("P3.r1", "r1", "composition",
           "shift law at m = 0 (the plain blend law)",
           ("x", "q"), lambda cfg: _p3_q1_cases(cfg, [0], cfg.n_max)),
    _entry("P3.s1", "s1", "composition",
           "shift law at m = 1",
           ("x", "q"), lambda cfg: _p3_q1_cases(cfg, [1], cfg.n_max)),
    _entry("P3.t1", "t1", "composition",
           "shift law at m = 2",
           ("x", "q"), lambda cfg: _p3_q1_cases(cfg, [2], cfg.n_max)),
    _entry("P3.i2", "i2", "composition",
           "shift law at n = 0: the inverse relation for shifted transforms",
           ("x", "q"), _p3_i2_cases),
    _entry("C2.u1", "u1", "composition",
           "shift law specialized to the raw sequence (x = 0)",
           ("q",), lambda cfg: _c2_u1_cases(
               cfg, range(1, cfg.m_max + 1), min(cfg.n_max, 6))),
    _entry("C2.v1", "v1", "composition",
           "x = 0 shift law at m = 0 restates the transform itself",
           ("q",), lambda cfg: _c2_u1_cases(cfg, [0], cfg.n_max)),
    _entry("C2.w1", "w1", "composition",
           "x = 0 shift law at m = 1",
           ("q",), lambda cfg: _c2_u1_cases(cfg, [1], cfg.n_max)),
    _entry("C2.x1", "x1", "composition",
           "x = 0 shift law at m = 2",
           ("q",), lambda cfg: _c2_u1_cases(cfg, [2], cfg.n_max)),
    _entry("C2.j2", "j2", "composition",
           "inverse relation recovering (1-q)^m a_m from transformed values",
           ("q",), _c2_j2_cases),
    _entry("R.u2", "u2", "composition",
           "chain law peels one factor off a product argument",
           ("x0",), _r_u2_cases),
    _entry("R.t2", "t2", "composition",
           "shifted chain law over product arguments",
           ("x0",), _r_t2_cases),
    _entry("R.a3", "a3", "composition",
           "alternating sums reached by sending q to its reciprocal",
           ("q", "x"), _r_a3_cases),
    _entry("PR.k2", "k2", "probability",
           "composing success counts multiplies the success probabilities",
           ("x", "y"), _pr_k2_cases),
    _entry("PR.m2", "m2", "probability",
           "expectation shift law over composed trial counts",
           ("x", "y"), _pr_m2_cases),
    _entry("PR.o2", "o2", "probability",
           "expectation shift law with a deterministic second round",
           ("x",), _pr_o2_cases),
    _entry("PR.p2", "p2", "probability",
           "expectation shift law recovering (1-x)^m f(m)",
           ("x",), _pr_p2_cases),
    _entry("AP.f2", "f2", "appell",
           "weighted Appell sums equal iterates of the blend operator",
           ("q", "y"), _ap_f2_cases),
    _entry("AP.k1", "k1", "appell",
           "scaled Appell transform shifts the polynomial argument",
           ("x", "q"), _ap_k1_cases),
    _entry("AP.m1", "m1", "appell",
           "scaled transform law for Bernoulli families of rational order",
           ("x", "q"), _ap_m1_cases),
    _entry("AP.n1", "n1", "appell",
           "scaled transform law for Euler families of rational order",
           ("x", "q"), _ap_n1_cases),
    _entry("AP.f", "f", "appell",
           "homogeneous two-variable base identity over difference tables",
           ("x", "y"), _ap_f_cases),
    _entry("AP.fbis", "fbis", "appell",
           "homogeneous dual base identity over initial-segment differences",
           ("x", "y"), _ap_fbis_cases),
    _entry("AP.u", "u", "appell",
           "sequence-weighted Appell sums against difference tables",
           ("x", "y"), _ap_u_cases),
    _entry("AP.ubis", "ubis", "appell",
           "dual sequence-weighted Appell sums against initial differences",
           ("x", "y"), _ap_ubis_cases),
    _entry("AP.v", "v", "appell",
           "Fibonacci-weighted Appell identity",
           ("x", "y"), _ap_v_cases),
    _entry("AP.o1", "o1", "appell",
           "Fibonacci-weighted Appell identity at matched shift r = n",
           ("x", "y"), _ap_o1_cases),
    _entry("AP.w", "w", "appell",
           "alternating-binomial Appell identity, row form",
           ("x", "y"), lambda cfg: _ap_w_cases(cfg, "w")),
    _entry("AP.wbis", "wbis", "appell",
           "alternating-binomial Appell identity, dual form",
           ("x", "y"), lambda cfg: _ap_w_cases(cfg, "wbis")),
    _entry("AP.s2", "s2", "appell",
           "shifted-argument Appell sums against transformed coefficients",
           ("x", "y"), _ap_s2_cases),
    _entry("R.qto1.fibonacci", "qto1.fibonacci", "limits",
           "alternating recurrence-family sum collapses to the r-th term",
           (), _qto1_fibonacci_cases),
    _entry("R.qto1.binomial", "qto1.binomial", "limits",
           "alternating binomial sum collapses to a single coefficient",
           ("alpha",), _qto1_binomial_cases),
    _entry("R.qto1.fusscatalan", "qto1.fusscatalan", "limits",
           "alternating ballot-number sum vanishes for m >= n",
           (), _qto1_fusscatalan_cases),
    _entry("R.qto1.laguerre-degree", "qto1.laguerre-degree", "limits",
           "alternating degree-shift Laguerre sum collapses to L_r",
           (), lambda cfg: _qto1_laguerre_cases(cfg, "degree")),
    _entry("R.qto1.laguerre-order", "qto1.laguerre-order", "limits",
           "alternating order-shift Laguerre sum collapses to L_r",
           (), lambda cfg: _qto1_laguerre_cases(cfg, "order")),
    _entry("R.qto1.meixner", "qto1.meixner", "limits",
           "basis polynomial at q = 1 recovers the r-th Meixner value",
           (), _qto1_meixner_cases),
    _entry("R.qto1.bell", "qto1.bell", "limits",
           "alternating shifted Bell sum collapses to x B_n(x)",
           ("x",), _qto1_bell_cases),
    _entry("R.qto1.geometric", "qto1.geometric", "limits",
           "alternating geometric-polynomial sum with the parity correction",
           ("x",), _qto1_geometric_cases),
)

_BY_ID = {entry.id: entry for entry in REGISTRY}
ALL_IDS: tuple[str, ...] = tuple(sorted(_BY_ID))
MODULES: tuple[str, ...] = tuple(sorted({entry.module for entry in REGISTRY}))


def list_identities(module: str | None = None) -> list[IdentityEntry]:
    """Entries in deterministic id order, optionally filtered by module tag."""
    entries = sorted(REGISTRY, key=lambda e: e.id)
    if module is None:
        return entries
    return [e for e in entries if e.module == module]


def get_entry(entry_id: str) -> IdentityEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise ConfigError(f"unknown identity id {entry_id!r}") from None


def verify(ids: Sequence[str] | None = None, cfg: VerifyConfig | None = None,
           module: str | None = None) -> VerificationReport:
    """Run a selection of entries (all of them by default) and report."""
    if ids is not None and module is not None:
        raise ConfigError("select by ids or by module, not both")
    if module is not None:
        entries = list_identities(module)
        if not entries:
            raise ConfigError(f"unknown module {module!r}")
    elif ids is None:
        entries = list(REGISTRY)
    else:
        entries = [get_entry(i) for i in ids]
    return run_entries(entries, cfg)
