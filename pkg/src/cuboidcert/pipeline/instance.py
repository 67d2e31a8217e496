"""Certify a single (p, q) pair against the stratification of f(s, y)."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..elimination import resultant, up_discriminant
from ..mpoly import MPoly, mp_divide_monomial, mp_normalize
from ..realroots import count_real_roots
from ..upoly import clear_denominators
from .report import FAIL, PASS, StageReport
from .stages import F_VARS, derive_E2_E3, quotient_substitution

VERDICT_PASS = "Q_{p,q} admits no quintic 5+5 splitting"
VERDICT_NA = "certificate does not apply"


class InvalidInstance(ValueError):
    pass


@dataclass(frozen=True)
class CuboidInstance:
    p: int
    q: int

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidInstance(f"{name} must be an integer, got {v!r}")
            if v <= 0:
                raise InvalidInstance(f"{name} must be positive, got {v}")
        if self.p == self.q:
            raise InvalidInstance(f"p and q must differ (both {self.p})")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidInstance(f"p and q must be coprime (gcd {math.gcd(self.p, self.q)})")

    @property
    def s0(self) -> Fraction:
        return Fraction(self.p**2, self.q**2)


@dataclass
class InstanceResult:
    instance: CuboidInstance
    verdict: str
    report: StageReport

    @property
    def passed(self) -> bool:
        return self.report.status == PASS

    def to_dict(self) -> dict:
        return {
            "p": self.instance.p,
            "q": self.instance.q,
            "s0": f"{self.instance.s0.numerator}/{self.instance.s0.denominator}",
            "verdict": self.verdict,
            "pass": self.passed,
            "evidence": self.report.to_dict(),
        }


@lru_cache(maxsize=1)
def certified_f() -> MPoly:
    """f(s, y) recomputed from scratch (no golden input)."""
    E2, E3, _ = derive_E2_E3()
    order = ("d",) + F_VARS
    res = resultant(E2.embed(order), E3.embed(order), "d")
    _, F = mp_normalize(mp_divide_monomial(res, "r", 20), "grlex")
    return quotient_substitution(F)


def instance_check(inst: CuboidInstance, f: MPoly | None = None) -> InstanceResult:
    f = f if f is not None else certified_f()
    rep = StageReport(stage="instance", name=f"p={inst.p}, q={inst.q}")
    t0 = time.perf_counter()
    s0 = inst.s0
    g = f.to_upoly("y", {"s": s0})
    rep.record("f(s0,y) with cleared denominators", clear_denominators(g)[1])
    rep.notes.append(f"s0 = {s0}")
    rep.check("deg_y f(s0, y)", 16, g.degree)
    if g.degree == 16:
        d = up_discriminant(g)
        rep.check("disc(s0) != 0", "nonzero", d, ok=d != 0)
        rep.check("real roots of f(s0, y) on (-oo, +oo)", 0, count_real_roots(g))
    rep.wall_ms = (time.perf_counter() - t0) * 1000
    verdict = VERDICT_PASS if rep.status != FAIL else VERDICT_NA
    return InstanceResult(inst, verdict, rep)
