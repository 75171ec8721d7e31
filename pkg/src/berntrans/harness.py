"""Verification harness: runs identity entries on exact grids and reports.

An entry owns a family of concrete cases (fixed discrete parameters plus a
grid over the continuous variables) and optionally a gate: a precondition
identity that must pass before the entry is attempted at all. Reports are
deterministic apart from the timing fields.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .config import ConfigError, VerifyConfig
from .grid import Evaluator, GridCheckResult, GridSpec, Witness, check_identity_on_grid


@dataclass(frozen=True)
class IdentityCase:
    """One concrete instance of an identity: parameters plus a grid."""

    params: tuple[tuple[str, str], ...]
    grid: GridSpec
    lhs: Evaluator
    rhs: Evaluator

    def run(self) -> GridCheckResult:
        return check_identity_on_grid(self.lhs, self.rhs, self.grid)


@dataclass(frozen=True)
class GateResult:
    passed: bool
    detail: dict[str, str] | None = None


@dataclass(frozen=True)
class IdentityEntry:
    """A registered identity with its case builder and optional gate."""

    id: str
    label: str
    module: str
    description: str
    variables: tuple[str, ...]
    build_cases: Callable[[VerifyConfig], Iterable[IdentityCase]]
    gate: Callable[[VerifyConfig], GateResult] | None = None


STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIPPED = "skipped"


@dataclass
class EntryResult:
    id: str
    label: str
    module: str
    status: str
    cases_run: int
    points_checked: int
    millis: int
    skip_reason: str | None = None
    witness: dict[str, str] | None = None
    gate_detail: dict[str, str] | None = None
    # kept out of serialized reports; lets callers replay a failure in-process
    failed_case: IdentityCase | None = field(default=None, repr=False, compare=False)

    def as_dict(self, include_timing: bool = True) -> dict[str, object]:
        out: dict[str, object] = {
            "id": self.id,
            "label": self.label,
            "module": self.module,
            "status": self.status,
            "cases_run": self.cases_run,
            "points_checked": self.points_checked,
        }
        if include_timing:
            out["millis"] = self.millis
        if self.skip_reason is not None:
            out["skip_reason"] = self.skip_reason
        if self.witness is not None:
            out["witness"] = self.witness
        if self.gate_detail is not None:
            out["gate"] = self.gate_detail
        return out


@dataclass
class VerificationReport:
    config: dict[str, object]
    entries: list[EntryResult]
    wall_millis: int

    @property
    def counts(self) -> dict[str, int]:
        out = {STATUS_PASS: 0, STATUS_FAIL: 0, STATUS_SKIPPED: 0}
        for entry in self.entries:
            out[entry.status] += 1
        return out

    @property
    def all_ok(self) -> bool:
        return self.counts[STATUS_FAIL] == 0

    def as_dict(self, include_timing: bool = True) -> dict[str, object]:
        summary: dict[str, object] = dict(self.counts)
        summary["total"] = len(self.entries)
        if include_timing:
            summary["wall_millis"] = self.wall_millis
        return {
            "config": self.config,
            "entries": [e.as_dict(include_timing) for e in self.entries],
            "summary": summary,
        }

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.as_dict(include_timing), sort_keys=True, indent=2)

    def to_csv(self, include_timing: bool = True) -> str:
        header = ["id", "label", "module", "status", "cases_run", "points_checked"]
        if include_timing:
            header.append("millis")
        header += ["skip_reason", "witness"]
        lines = [",".join(header)]
        for e in self.entries:
            row = [e.id, e.label, e.module, e.status, str(e.cases_run),
                   str(e.points_checked)]
            if include_timing:
                row.append(str(e.millis))
            row.append(e.skip_reason or "")
            witness = ""
            if e.witness is not None:
                witness = "\"" + ";".join(f"{k}={v}" for k, v in sorted(e.witness.items())) + "\""
            row.append(witness)
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def _witness_dict(case: IdentityCase, witness: Witness) -> dict[str, str]:
    out = {f"param:{name}": value for name, value in case.params}
    out.update(witness.as_dict())
    return out


def run_entry(entry: IdentityEntry, cfg: VerifyConfig) -> EntryResult:
    start = time.perf_counter()

    def took() -> int:
        return int((time.perf_counter() - start) * 1000)

    if entry.gate is not None:
        gate = entry.gate(cfg)
        if not gate.passed:
            return EntryResult(
                id=entry.id, label=entry.label, module=entry.module,
                status=STATUS_SKIPPED, cases_run=0, points_checked=0,
                millis=took(), skip_reason="gate-failed", gate_detail=gate.detail,
            )
    cases_run = 0
    points = 0
    for case in entry.build_cases(cfg):
        result = case.run()
        cases_run += 1
        points += result.points_checked
        if not result.passed:
            assert result.witness is not None
            return EntryResult(
                id=entry.id, label=entry.label, module=entry.module,
                status=STATUS_FAIL, cases_run=cases_run, points_checked=points,
                millis=took(), witness=_witness_dict(case, result.witness),
                failed_case=case,
            )
    if cases_run == 0:
        return EntryResult(
            id=entry.id, label=entry.label, module=entry.module,
            status=STATUS_SKIPPED, cases_run=0, points_checked=0,
            millis=took(), skip_reason="excluded",
        )
    return EntryResult(
        id=entry.id, label=entry.label, module=entry.module, status=STATUS_PASS,
        cases_run=cases_run, points_checked=points, millis=took(),
    )


def run_entries(entries: Sequence[IdentityEntry],
                cfg: VerifyConfig | None = None) -> VerificationReport:
    """Run a nonempty selection of entries in id order."""
    cfg = cfg or VerifyConfig()
    cfg.validate()
    if not entries:
        raise ConfigError("empty entry selection")
    start = time.perf_counter()
    results = [run_entry(entry, cfg) for entry in sorted(entries, key=lambda e: e.id)]
    wall = int((time.perf_counter() - start) * 1000)
    return VerificationReport(config=cfg.echo(), entries=results, wall_millis=wall)
