"""Acceptance criteria 1-12, all checked exactly.

Each test records its outcome; ``conftest.py`` prints one PASS/FAIL line per
criterion at the end of the session.  Stage criteria read the shared
full-run certificate, so every number here was recomputed from scratch.
"""

import functools
import math
import random
from fractions import Fraction

import pytest

from _mutations import MUTATIONS, apply_mutation
from _properties import bareiss_properties, discriminant_properties, resultant_properties, sturm_properties
from cuboidcert.elimination import resultant
from cuboidcert.pipeline import stages as S
from cuboidcert.pipeline.instance import VERDICT_PASS, CuboidInstance, InvalidInstance, instance_check
from cuboidcert.pipeline.report import FAIL, PASS
from cuboidcert.pipeline.runner import RunConfig, run_all
from cuboidcert.pipeline.report import strip_volatile

RESULTS: dict[int, tuple[bool, str]] = {}

C = 8148143905337944345073782753637512644205873574663745002544561797417525199053346824733589504


def criterion(n, text):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                RESULTS[n] = (False, text)
                raise
            RESULTS[n] = (True, text)

        return wrapper

    return deco


def passed(report, *names):
    got = {a.name: a for a in report.assertions}
    for name in names:
        assert name in got, f"missing assertion {name!r}"
        assert got[name].passed, f"{name}: expected {got[name].expected}, got {got[name].got}"
    return got


@criterion(1, "stage 0: weight-20 homogeneity and q = 1 specialization")
def test_criterion_01(certificate):
    rep = certificate.stage(0)
    assert rep.status == PASS
    passed(rep, "weighted homogeneity Q(lam p, lam q, lam^2 t) = lam^20 Q", "Q_r equals the q = 1 specialization")


@criterion(2, "stage 1: E2, E3 match up to a positive scalar; odd coefficients vanish")
def test_criterion_02(certificate, golden):
    rep = certificate.stage(1)
    assert rep.status == PASS
    got = passed(rep, *(f"coefficient of u^{k} vanishes" for k in (10, 9, 7, 5, 3, 1)))
    for name in ("E2", "E3"):
        a = got[f"{name} matches transcript up to a positive scalar"]
        assert a.passed and a.got > 0
    E2, E3, _ = S.stage1_derive_E2_E3(golden)
    assert E2 == golden.E2 and E3 == golden.E3


@criterion(3, "stage 2: F degrees (24, 16), symmetry, transcript match, three identities")
def test_criterion_03(certificate):
    rep = certificate.stage(2)
    assert rep.status == PASS
    got = passed(
        rep,
        "deg_r F",
        "deg_a F",
        "F(-r,-a) = F(r,a)",
        "F matches transcript term-for-term",
        "F(1,a) = (a-1)^6 (a^2-2a+17) (a^2+2a+5)^4",
        "F(0,a) = (a^2+4)^4 (a^2+8)^4",
        "H24 = 256 r^16 (a-3r)^2 (a-5r)^2 (a+3r)^2 (a+5r)^2",
    )
    assert (got["deg_r F"].got, got["deg_a F"].got) == (24, 16)


@criterion(4, "stage 3: f degrees (12, 16); lc_y(f) a monomial of s-degree 8")
def test_criterion_04(certificate):
    rep = certificate.stage(3)
    assert rep.status == PASS
    got = passed(rep, "deg_s f", "deg_y f", "lc_y(f) is a single monomial", "s-degree of lc_y(f)")
    assert (got["deg_s f"].got, got["deg_y f"].got, got["s-degree of lc_y(f)"].got) == (12, 16, 8)


@criterion(5, "stage 4: disc = C s^156 (s-1)^54 (s+1)^22 P6^4 P28^2 exactly")
def test_criterion_05(certificate):
    rep = certificate.stage(4)
    assert rep.status == PASS
    got = passed(rep, "deg disc", "exponent vector", "P28 matches transcript", "constant C matches transcript",
                 "P6 squarefree", "P28 squarefree")
    assert got["exponent vector"].got == [156, 54, 22, 4, 2]
    assert got["constant C matches transcript"].got == C
    assert got["deg disc"].got == 312


@criterion(6, "stage 5: no rational roots of P6, P28; P6(1) = -86, P6(-1) = -6250")
def test_criterion_06(certificate):
    rep = certificate.stage(5)
    assert rep.status == PASS
    got = passed(rep, "rational roots of P6", "rational roots of P28", "P6(1)", "P6(-1)")
    assert got["P6(1)"].got == -86 and got["P6(-1)"].got == -6250
    assert got["rational roots of P6"].got == set() == got["rational roots of P28"].got


@criterion(7, "stage 6: counts (2, 3); five brackets; ordering; seven interior samples")
def test_criterion_07(certificate):
    rep = certificate.stage(6)
    assert rep.status == PASS
    got = passed(rep, "positive real roots of P6", "positive real roots of P28",
                 "alpha1 < beta1", "beta1 < 1", "1 < beta2", "beta2 < beta3", "beta3 < alpha2")
    assert (got["positive real roots of P6"].got, got["positive real roots of P28"].got) == (2, 3)
    for label in ("alpha1", "alpha2", "beta1", "beta2", "beta3"):
        assert got[f"{label} sign change"].passed
        assert got[f"{label} Sturm count in bracket"].got == 1
    interior = [a for a in rep.assertions if a.name.startswith("sample ")]
    nonroot = [a for a in rep.assertions if a.name.startswith("disc(")]
    assert len(interior) == len(nonroot) == 7 and all(a.passed for a in interior + nonroot)


@criterion(8, "stage 7: zero real roots of f(s0, y) at all seven samples")
def test_criterion_08(certificate):
    rep = certificate.stage(7)
    assert rep.status == PASS
    counts = [a for a in rep.assertions if a.name.startswith("real roots of f(")]
    assert len(counts) == 7 and all(a.got == 0 for a in counts)


@criterion(9, "stage 8: f(1,y) = (y-1)^6 (y^2-2y+17) (y^2+2y+5)^4; f(1,0) = 10625")
def test_criterion_09(certificate):
    rep = certificate.stage(8)
    assert rep.status == PASS
    got = passed(rep, "f(1,y) = (y-1)^6 (y^2-2y+17) (y^2+2y+5)^4", "f(1,0) = product of factor constant terms")
    assert got["f(1,0) = product of factor constant terms"].got == 10625 == 17 * 5**4


@criterion(10, "property suites: resultants, Sturm, discriminants, Bareiss, both resultant paths")
def test_criterion_10(golden):
    assert resultant_properties(200) >= 200
    assert sturm_properties(200) >= 200
    assert discriminant_properties(50) >= 1
    assert bareiss_properties(100) >= 100
    order = ("d", "r", "a")
    e2, e3 = golden.E2.embed(order), golden.E3.embed(order)
    assert resultant(e2, e3, "d", method="bareiss") == resultant(e2, e3, "d", method="interpolate")


@criterion(11, "instance check on 100 random coprime pairs; (2,2), (4,2), (0,1) rejected")
def test_criterion_11():
    rng = random.Random(511)
    pairs = set()
    while len(pairs) < 100:
        p, q = rng.randint(1, 50), rng.randint(1, 50)
        if p != q and math.gcd(p, q) == 1:
            pairs.add((p, q))
    for p, q in sorted(pairs):
        res = instance_check(CuboidInstance(p, q))
        assert res.passed and res.verdict == VERDICT_PASS, (p, q)
        (count,) = [a for a in res.report.assertions if a.name.startswith("real roots")]
        assert count.got == 0
        assert res.instance.s0 == Fraction(p * p, q * q)
    for p, q in ((2, 2), (4, 2), (0, 1)):
        with pytest.raises(InvalidInstance):
            CuboidInstance(p, q)


@criterion(12, "negative controls fail exactly the owning stage; reports identical across --jobs")
def test_criterion_12(certificate, golden, cache_dir, tmp_path):
    import shutil

    from cuboidcert.pipeline.golden import DEFAULT_DIR

    for name in MUTATIONS:
        d = tmp_path / name.replace(" ", "_").replace("(", "").replace(")", "").replace(",", "")
        shutil.copytree(DEFAULT_DIR, d)
        owner = apply_mutation(d, name)
        cert = run_all(RunConfig(golden_dir=d, cache_dir=cache_dir, keep_going=True))
        failed = [s.stage for s in cert.stages if s.status == FAIL]
        assert failed == [owner], f"{name}: failed stages {failed}, expected [{owner}]"
        assert cert.verdict == FAIL

    # determinism: a second full run at a different width, without the cache
    other = run_all(RunConfig(jobs=2), golden=golden)
    assert certificate.runtime["jobs"] == 1 and other.runtime["jobs"] == 2
    assert strip_volatile(other.to_dict()) == strip_volatile(certificate.to_dict())
