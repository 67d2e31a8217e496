"""Stage reports and the aggregate certificate (JSON-serializable)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..mpoly import MPoly
from ..polyio import digest
from ..upoly import UPoly

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# Keys that legitimately differ between otherwise identical runs.
VOLATILE_KEYS = ("timestamp", "wall_ms", "runtime")


def to_jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x if abs(x) < 2**53 else str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (MPoly, UPoly)):
        return "sha256:" + digest(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=str) if isinstance(x, (set, frozenset)) else x
        return [to_jsonable(v) for v in items]
    return str(x)


@dataclass
class Assertion:
    name: str
    expected: object
    got: object
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": to_jsonable(self.expected),
            "got": to_jsonable(self.got),
            "pass": self.passed,
        }


class StageFailure(Exception):
    """Stops a stage early; the reason is recorded on the report."""


@dataclass
class StageReport:
    stage: int
    name: str
    status: str = PASS
    reason: str | None = None
    assertions: list[Assertion] = field(default_factory=list)
    digests: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def check(self, name: str, expected, got, ok: bool | None = None) -> bool:
        if ok is None:
            ok = expected == got
        self.assertions.append(Assertion(name, expected, got, bool(ok)))
        if not ok and self.status != FAIL:
            self.status = FAIL
            self.reason = name
        return bool(ok)

    def require(self, name: str, expected, got, ok: bool | None = None) -> None:
        """Like :meth:`check` but aborts the stage on failure."""
        if not self.check(name, expected, got, ok):
            raise StageFailure(name)

    def fail(self, reason: str) -> None:
        self.status = FAIL
        self.reason = self.reason or reason

    def record(self, name: str, obj) -> None:
        self.digests[name] = digest(obj)

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "name": self.name,
            "status": self.status,
            "reason": self.reason,
            "assertions": [a.to_dict() for a in self.assertions],
            "digests": dict(sorted(self.digests.items())),
            "notes": list(self.notes),
            "wall_ms": round(self.wall_ms, 3),
        }


@dataclass
class Certificate:
    stages: list[StageReport]
    tool_version: str
    golden_checksums: dict
    timestamp: str
    runtime: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.stages and all(s.status == PASS for s in self.stages):
            return PASS
        return FAIL

    def stage(self, n: int) -> StageReport:
        for s in self.stages:
            if s.stage == n:
                return s
        raise KeyError(n)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "tool_version": self.tool_version,
            "golden_checksums": dict(sorted(self.golden_checksums.items())),
            "timestamp": self.timestamp,
            "stages": [s.to_dict() for s in self.stages],
            "runtime": self.runtime,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def strip_volatile(obj):
    """Drop timing and provenance fields so two reports can be compared."""
    if isinstance(obj, dict):
        return {k: strip_volatile(v) for k, v in obj.items() if k not in VOLATILE_KEYS}
    if isinstance(obj, list):
        return [strip_volatile(v) for v in obj]
    return obj
