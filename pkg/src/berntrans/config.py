"""Run configuration for the verification harness.

Bounds, grids, the RNG seed, and the Meixner normalization selector can be
overridden from a key=value config file; the CLI output format can also come
from the BERNTRANS_FORMAT environment variable.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Callable, Mapping, Sequence

from . import sequences as seqs
from .rationals import rat, rat_str, rat_tuple
from .specialfn import MEIXNER_DEFINITIONS


class ConfigError(ValueError):
    """Invalid harness configuration (bad bounds, grids, or selectors)."""


MIN_N_MAX = 8
MIN_M_MAX = 4

FORMAT_ENV_VAR = "BERNTRANS_FORMAT"
OUTPUT_FORMATS = ("pretty", "json", "csv")

DiffValuesFn = Callable[[seqs.SequenceSpec, int], Sequence[Fraction]]


def standard_diff_values(spec: seqs.SequenceSpec, n: int) -> Sequence[Fraction]:
    return seqs.diff_table(spec, n).values


@dataclass
class VerifyConfig:
    """Everything a verification run depends on, echoed into its report."""

    n_max: int = 8
    m_max: int = 4
    r_max: int = 3
    seed: int = 42
    meixner_definition: str = "scaled"
    grid_overrides: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    # Difference tables are injectable so harness-integrity tests can corrupt
    # a single M(n, j) and watch the verifier catch it.
    diff_values: DiffValuesFn = standard_diff_values

    def validate(self) -> None:
        if self.n_max < MIN_N_MAX:
            raise ConfigError(f"n_max must be at least {MIN_N_MAX}")
        if self.m_max < MIN_M_MAX:
            raise ConfigError(f"m_max must be at least {MIN_M_MAX}")
        if self.r_max < 0:
            raise ConfigError("r_max must be nonnegative")
        if self.meixner_definition not in MEIXNER_DEFINITIONS:
            raise ConfigError(
                f"meixner_definition must be one of {MEIXNER_DEFINITIONS}"
            )

    def echo(self) -> dict[str, object]:
        """JSON-ready snapshot of the run configuration."""
        grids = {
            name: [rat_str(p) for p in points]
            for name, points in sorted(self.grid_overrides.items())
        }
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "r_max": self.r_max,
            "seed": self.seed,
            "meixner_definition": self.meixner_definition,
            "grid_overrides": grids,
            "standard_diff_tables": self.diff_values is standard_diff_values,
        }


def parse_config_text(text: str, base: VerifyConfig | None = None) -> VerifyConfig:
    """Apply ``key = value`` lines to a config; '#' starts a comment.

    Grid overrides use keys like ``grid.q = 0,1/2,2/3,...``.
    """
    cfg = replace(base) if base is not None else VerifyConfig()
    cfg.grid_overrides = dict(cfg.grid_overrides)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            if key in ("n_max", "m_max", "r_max", "seed"):
                setattr(cfg, key, int(value))
            elif key == "meixner_definition":
                cfg.meixner_definition = value
            elif key.startswith("grid."):
                cfg.grid_overrides[key[len("grid."):]] = rat_tuple(value)
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {value!r}") from exc
    return cfg


def load_config_file(path: str | Path, base: VerifyConfig | None = None) -> VerifyConfig:
    return parse_config_text(Path(path).read_text(), base)
