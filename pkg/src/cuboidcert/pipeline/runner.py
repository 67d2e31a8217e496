"""Run a selection of stages, resolving prerequisites and the on-disk cache."""

from __future__ import annotations

import datetime as _dt
import hashlib
import json
import os
import platform
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .. import __version__
from ..polyio import digest, dumps, mpoly_from_obj, mpoly_to_obj, upoly_from_obj, upoly_to_obj
from . import stages as S
from .golden import GoldenData, load_golden
from .report import FAIL, PASS, SKIPPED, Certificate, StageReport

ALL_STAGES = tuple(range(9))

DEPENDS = {0: (), 1: (), 2: (1,), 3: (2,), 4: (3,), 5: (4,), 6: (4,), 7: (3, 6), 8: (3,)}


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CERTIFY_JOBS", "1")))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    stages: tuple[int, ...] = ALL_STAGES
    golden_dir: str | Path | None = None
    cache_dir: str | Path | None = None
    jobs: int = field(default_factory=default_jobs)
    keep_going: bool = False


class _Cache:
    """Stage 1-3 objects keyed by golden manifest + version; disc keyed by f."""

    def __init__(self, root, golden: GoldenData):
        self.root = Path(root) if root else None
        key = dumps({"golden": golden.checksums, "version": __version__})
        self.key = hashlib.sha256(key.encode()).hexdigest()[:16]
        self.hits: list[str] = []

    def _path(self, name: str) -> Path:
        return self.root / f"{name}-{self.key}.json"

    def get(self, name: str):
        if self.root is None or not self._path(name).exists():
            return None
        self.hits.append(name)
        return mpoly_from_obj(json.loads(self._path(name).read_text(encoding="utf-8")))

    def put(self, name: str, p) -> None:
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        self._path(name).write_text(dumps(mpoly_to_obj(p)), encoding="utf-8")

    def get_disc(self, f):
        if self.root is None:
            return None
        path = self.root / f"disc-{digest(f)[:16]}.json"
        if not path.exists():
            return None
        self.hits.append("disc")
        return upoly_from_obj(json.loads(path.read_text(encoding="utf-8")))

    def put_disc(self, f, disc) -> None:
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        (self.root / f"disc-{digest(f)[:16]}.json").write_text(dumps(upoly_to_obj(disc)), encoding="utf-8")


def _skipped(n: int, reason: str) -> StageReport:
    return StageReport(stage=n, name=S.STAGE_NAMES[n], status=SKIPPED, reason=reason)


class _Pipeline:
    def __init__(self, golden: GoldenData, config: RunConfig):
        self.g = golden
        self.cfg = config
        self.cache = _Cache(config.cache_dir, golden)
        self.out: dict[str, object] = {}
        self.status: dict[int, str] = {}

    # each producer returns a report; outputs land in self.out
    def _run(self, n: int) -> StageReport:
        g, out, jobs = self.g, self.out, self.cfg.jobs
        if n == 0:
            return S.stage0_normalization()
        if n == 1:
            out["E2"], out["E3"], rep = S.stage1_derive_E2_E3(g)
            return rep
        if n == 2:
            out["F"], rep = S.stage2_compute_F(out["E2"], out["E3"], g)
            return rep
        if n == 3:
            out["f"], rep = S.stage3_compute_f(out["F"], g)
            return rep
        if n == 4:
            f = out["f"]
            fact, rep = S.stage4_discriminant(f, g, jobs, disc=self.cache.get_disc(f))
            if fact is not None:
                self.cache.put_disc(f, fact.disc)
            out["disc"] = fact
            return rep
        if n == 5:
            d = out["disc"]
            return S.stage5_rational_roots(d.P6, d.P28, g)
        if n == 6:
            d = out["disc"]
            out["brackets"], rep = S.stage6_isolation(d.P6, d.P28, d.disc, g)
            return rep
        if n == 7:
            return S.stage7_sample_counts(out["f"], g, jobs)
        if n == 8:
            return S.stage8_s_equals_one(out["f"], g)
        raise ValueError(f"no stage {n}")

    def _from_cache(self, n: int) -> bool:
        names = {1: ("E2", "E3"), 2: ("F",), 3: ("f",)}.get(n)
        if not names:
            return False
        objs = [self.cache.get(x) for x in names]
        if any(o is None for o in objs):
            return False
        self.out.update(zip(names, objs))
        return True

    def _store(self, n: int) -> None:
        for name in {1: ("E2", "E3"), 2: ("F",), 3: ("f",)}.get(n, ()):
            if self.out.get(name) is not None:
                self.cache.put(name, self.out[name])

    def _plan(self, requested: set[int]) -> dict[int, str]:
        """Stage -> "run" or "cache"; cached prerequisites cut the recursion."""
        plan: dict[int, str] = {}

        def visit(n):
            if n in plan:
                return
            if n not in requested and self._from_cache(n):
                plan[n] = "cache"
                return
            plan[n] = "run"
            for d in DEPENDS[n]:
                visit(d)

        for n in sorted(requested):
            visit(n)
        return plan

    def run(self) -> list[StageReport]:
        requested = set(self.cfg.stages)
        unknown = requested - set(ALL_STAGES)
        if unknown:
            raise ValueError(f"unknown stages {sorted(unknown)}")
        plan = self._plan(requested)
        reports: list[StageReport] = []
        aborted = None
        for n in sorted(plan):
            wanted = n in requested
            if plan[n] == "cache":
                self.status[n] = PASS
                continue
            bad = [d for d in DEPENDS[n] if self.status.get(d) != PASS]
            if aborted is not None:
                rep = _skipped(n, f"aborted after stage {aborted} failed")
            elif bad:
                rep = _skipped(n, f"prerequisite stage {bad[0]} did not pass")
            else:
                rep = self._run(n)
                if rep.status == PASS:
                    self._store(n)
            self.status[n] = rep.status
            if wanted:
                reports.append(rep)
            elif rep.status == FAIL:
                # an unrequested prerequisite failed; surface it
                rep.notes.append("run as a prerequisite of a requested stage")
                reports.append(rep)
            if rep.status == FAIL and not self.cfg.keep_going:
                aborted = n
        return reports


def run_all(config: RunConfig | None = None, golden: GoldenData | None = None) -> Certificate:
    config = config or RunConfig()
    golden = golden or load_golden(config.golden_dir)
    pipe = _Pipeline(golden, config)
    reports = pipe.run()
    return Certificate(
        stages=reports,
        tool_version=__version__,
        golden_checksums=golden.checksums,
        timestamp=_dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        runtime={
            "jobs": config.jobs,
            "python": sys.version.split()[0],
            "platform": platform.platform(),
            "cpu_count": os.cpu_count(),
            "cache_hits": sorted(set(pipe.cache.hits)),
            "wall_ms": round(sum(r.wall_ms for r in reports), 3),
        },
    )


OBJECT_STAGE = {"E2": 1, "E3": 1, "F": 2, "f": 3, "disc": 4, "P6": 4, "P28": 4}


def compute_object(name: str, config: RunConfig | None = None, golden: GoldenData | None = None):
    """Run the stages that produce ``name`` and return the verified object."""
    if name not in OBJECT_STAGE:
        raise KeyError(name)
    config = config or RunConfig()
    golden = golden or load_golden(config.golden_dir)
    n = OBJECT_STAGE[name]
    cfg = RunConfig(stages=(n,), golden_dir=config.golden_dir, cache_dir=config.cache_dir, jobs=config.jobs)
    pipe = _Pipeline(golden, cfg)
    reports = pipe.run()
    failed = [r for r in reports if r.status != PASS]
    if failed:
        return None, failed[0]
    if n == 4:
        fact = pipe.out["disc"]
        return {"disc": fact.disc, "P6": fact.P6, "P28": fact.P28}[name], reports[-1]
    return pipe.out[name], reports[-1]
