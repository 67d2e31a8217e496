import json
from fractions import Fraction

import pytest

from _mutations import apply_mutation
from cuboidcert.cli import main
from cuboidcert.mpoly import MPoly
from cuboidcert.pipeline import stages as S
from cuboidcert.pipeline.constructors import build_Qpq
from cuboidcert.pipeline.golden import GoldenDataError, load_golden, write_manifest
from cuboidcert.pipeline.instance import (
    VERDICT_PASS,
    CuboidInstance,
    InvalidInstance,
    certified_f,
    instance_check,
)
from cuboidcert.pipeline.report import FAIL, PASS, SKIPPED, strip_volatile
from cuboidcert.pipeline.runner import RunConfig, run_all
from cuboidcert.polyio import read_upoly

C = 8148143905337944345073782753637512644205873574663745002544561797417525199053346824733589504


def test_golden_loads_and_verifies(golden):
    assert golden.disc_constant == C
    assert golden.P28.lc == 103680000 and golden.P28.coeff(27) == -7521292800
    assert golden.P28(0) == -2097152
    assert golden.exponents == {"s": 156, "s-1": 54, "s+1": 22, "P6": 4, "P28": 2}
    assert [s.s for s in golden.samples] == [Fraction(1, 100), Fraction(1, 5), Fraction(4, 5), 2,
                                             Fraction(63, 2), Fraction(317, 10), 40]


def test_golden_f_is_derived_from_golden_F(golden):
    assert S.quotient_substitution(golden.F) == golden.f


def test_tampered_golden_is_rejected(golden_copy):
    path = golden_copy / "P6.json"
    path.write_text(path.read_text().replace('"15"', '"16"', 1))
    with pytest.raises(GoldenDataError, match="checksum"):
        load_golden(golden_copy)
    (golden_copy / "E2.json").unlink()
    with pytest.raises(GoldenDataError):
        load_golden(golden_copy, verify=False)


def test_stage0_passes_and_detects_a_flipped_sign():
    assert S.stage0_normalization().status == PASS
    Q = build_Qpq()
    p, q, t = MPoly.gens(Q.vars)
    bad = Q + 2 * p**2 * q**10 * t**4  # flips the sign of p^2 q^10 t^4 (weight 20)
    rep = S.stage0_normalization(Qpq=bad)
    assert rep.status == FAIL
    failed = [a for a in rep.assertions if not a.passed]
    assert failed[0].name == "Q_r equals the q = 1 specialization"
    assert "term r^2*u^4" in failed[0].got
    # a weight-18 term breaks homogeneity
    rep = S.stage0_normalization(Qpq=Q + p**2 * q**8 * t**4)
    assert rep.reason.startswith("weighted homogeneity")


def test_stage1_outputs(golden):
    E2, E3, rep = S.stage1_derive_E2_E3(golden)
    assert rep.status == PASS
    # under lex with a > d > r
    assert E2.leading_term("lex") == ((4, 0, 5), 1)
    assert E3.terms[(0, 4, 0)] == -1
    assert E2 == golden.E2 and E3 == golden.E3


def test_ansatz_u8_coefficient():
    V = S.ANSATZ_VARS
    u, r, a, b = (MPoly.gen(v, V) for v in ("u", "r", "a", "b"))
    R = S.quintic_ansatz(V)
    from cuboidcert.pipeline.constructors import Qr_coefficients, build_Qr

    diff = R * -R.substitute("u", -u) - build_Qr().embed(V)
    A = Qr_coefficients(r)[8]
    assert diff.coeff_in("u", 8) == (2 * b - a**2 - A).coeff_in("u", 0)


def test_certificate_all_pass(certificate):
    assert certificate.verdict == PASS
    assert [s.stage for s in certificate.stages] == list(range(9))
    d = json.loads(certificate.to_json())
    assert d["verdict"] == "pass" and d["tool_version"]
    for s in d["stages"]:
        assert {"stage", "status", "assertions", "wall_ms"} <= set(s)
        for a in s["assertions"]:
            assert set(a) == {"name", "expected", "got", "pass"}


def test_resultant_content_recorded(certificate):
    rep = certificate.stage(2)
    (a,) = [a for a in rep.assertions if a.name == "resultant content (recorded)"]
    assert a.got == 1


def test_cached_rerun_of_later_stages(golden, certificate, cache_dir):
    cert = run_all(RunConfig(stages=(4, 5, 6, 7), cache_dir=cache_dir), golden=golden)
    assert cert.verdict == PASS
    assert [s.stage for s in cert.stages] == [4, 5, 6, 7]
    assert "f" in cert.runtime["cache_hits"] and "disc" in cert.runtime["cache_hits"]
    assert "E2" not in cert.runtime["cache_hits"]
    a = strip_volatile(cert.stage(4).to_dict())
    b = strip_volatile(certificate.stage(4).to_dict())
    assert a == b


def test_mutated_F_aborts_after_stage_2(golden_copy, cache_dir):
    apply_mutation(golden_copy, "F coefficient")
    cert = run_all(RunConfig(golden_dir=golden_copy, cache_dir=cache_dir))
    status = {s.stage: s.status for s in cert.stages}
    assert status[0] == status[1] == PASS and status[2] == FAIL
    assert all(status[n] == SKIPPED for n in range(3, 9))
    assert cert.stage(2).reason == "F matches transcript term-for-term"
    assert cert.verdict == FAIL


def test_keep_going_skips_only_dependents(golden_copy, cache_dir):
    apply_mutation(golden_copy, "hand check")
    cert = run_all(RunConfig(golden_dir=golden_copy, cache_dir=cache_dir, keep_going=True))
    status = {s.stage: s.status for s in cert.stages}
    assert [n for n, st in status.items() if st != PASS] == [5]


def test_instance_examples():
    for p, q, s0 in ((2, 1, 4), (3, 5, Fraction(9, 25))):
        res = instance_check(CuboidInstance(p, q))
        assert res.passed and res.verdict == VERDICT_PASS
        assert res.instance.s0 == s0
        assert res.to_dict()["evidence"]["status"] == PASS


@pytest.mark.parametrize("p, q", [(2, 2), (4, 2), (0, 1), (1, -3), (True, 2)])
def test_invalid_instances(p, q):
    with pytest.raises(InvalidInstance):
        CuboidInstance(p, q)


def test_certified_f_matches_golden(golden):
    assert certified_f() == golden.f


def test_cli(tmp_path, cache_dir, certificate, capsys):
    report = tmp_path / "r.json"
    assert main(["run", "--stages", "0,8", "--report", str(report)]) == 0
    d = json.loads(report.read_text())
    assert [s["stage"] for s in d["stages"]] == [0, 8]
    assert main(["instance", "--p", "2", "--q", "1", "--report", str(tmp_path / "i.json")]) == 0
    assert json.loads((tmp_path / "i.json").read_text())["verdict"] == VERDICT_PASS
    assert main(["instance", "--p", "4", "--q", "2"]) == 2
    assert main(["run", "--stages", "x"]) == 2
    assert main(["run", "--golden", str(tmp_path / "missing")]) == 2
    assert main(["dump", "--object", "P28", "--out", str(tmp_path / "p28.json"), "--cache", str(cache_dir)]) == 0
    assert read_upoly(tmp_path / "p28.json") == load_golden().P28
    capsys.readouterr()


def test_cli_failure_exit_code(golden_copy, cache_dir):
    apply_mutation(golden_copy, "f(1,y) factor")
    assert main(["run", "--stages", "8", "--golden", str(golden_copy), "--cache", str(cache_dir)]) == 1


def test_jobs_env_default(monkeypatch):
    from cuboidcert.pipeline.runner import default_jobs

    monkeypatch.setenv("CERTIFY_JOBS", "3")
    assert default_jobs() == 3 and RunConfig().jobs == 3
    monkeypatch.setenv("CERTIFY_JOBS", "junk")
    assert default_jobs() == 1


def test_manifest_roundtrip(golden_copy):
    sums = write_manifest(golden_copy)
    assert set(sums) == {"E2.json", "E3.json", "F.json", "f.json", "P6.json", "P28.json",
                         "identities.json", "certificate.json"}
