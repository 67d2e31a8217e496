"""Golden data: transcribed reference objects plus a checksum manifest."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..exact_arith import parse_int, parse_rat
from ..mpoly import MPoly
from ..polyio import dumps, mpoly_from_obj, upoly_from_obj
from ..upoly import UPoly

DEFAULT_DIR = Path(__file__).resolve().parent.parent / "golden"
MANIFEST = "MANIFEST.json"


class GoldenDataError(RuntimeError):
    """Golden files are missing, malformed, or fail their checksums."""


def file_sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(directory: str | Path) -> dict:
    directory = Path(directory)
    sums = {
        p.name: file_sha256(p)
        for p in sorted(directory.glob("*.json"))
        if p.name != MANIFEST
    }
    (directory / MANIFEST).write_text(dumps({"sha256": sums}), encoding="utf-8")
    return sums


def verify_manifest(directory: Path) -> dict:
    mpath = directory / MANIFEST
    if not mpath.exists():
        raise GoldenDataError(f"no {MANIFEST} in {directory}")
    expected = json.loads(mpath.read_text(encoding="utf-8"))["sha256"]
    for name, digest in expected.items():
        path = directory / name
        if not path.exists():
            raise GoldenDataError(f"missing golden file {name}")
        got = file_sha256(path)
        if got != digest:
            raise GoldenDataError(f"checksum mismatch for {name}: {got} != {digest}")
    return expected


@dataclass(frozen=True)
class Factored:
    constant: int
    factors: tuple[tuple[MPoly, int], ...]

    def expand(self) -> MPoly:
        vars = self.factors[0][0].vars
        out = MPoly.const(self.constant, vars)
        for poly, exp in self.factors:
            out = out * poly**exp
        return out


@dataclass(frozen=True)
class BracketSpec:
    label: str
    poly: str
    lo: Fraction
    hi: Fraction
    signs: tuple[int, int]


@dataclass(frozen=True)
class Sample:
    label: str
    s: Fraction
    between: tuple[str, str]
    count: int


@dataclass(frozen=True)
class GoldenData:
    E2: MPoly
    E3: MPoly
    F: MPoly
    f: MPoly
    P6: UPoly
    P28: UPoly
    disc_constant: int
    disc_factors: tuple[tuple[str, UPoly, int], ...]
    F_degrees: dict
    f_degrees: dict
    f_lc_y_s_degree: int
    F_r1_expanded: MPoly
    F_r1: Factored
    F_r0_expanded: MPoly
    F_r0: Factored
    H24: Factored
    f_s1: Factored
    hand_checks: tuple[tuple[str, Fraction, Fraction], ...]
    positive_root_counts: dict
    brackets: tuple[BracketSpec, ...]
    root_order: tuple[str, ...]
    samples: tuple[Sample, ...]
    checksums: dict = field(default_factory=dict)
    directory: Path | None = None

    @property
    def exponents(self) -> dict:
        return {name: exp for name, _, exp in self.disc_factors}

    def poly(self, name: str) -> UPoly:
        return {"P6": self.P6, "P28": self.P28}[name]

    def bracket(self, label: str) -> BracketSpec:
        for b in self.brackets:
            if b.label == label:
                return b
        raise KeyError(label)


def _factored(obj: dict) -> Factored:
    return Factored(
        parse_int(obj["constant"]),
        tuple((mpoly_from_obj(f["poly"]), int(f["exp"])) for f in obj["factors"]),
    )


def load_golden(directory: str | Path | None = None, verify: bool = True) -> GoldenData:
    directory = Path(directory) if directory else DEFAULT_DIR
    sums = verify_manifest(directory) if verify else {}

    def read(name):
        try:
            return json.loads((directory / name).read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise GoldenDataError(f"missing golden file {name}") from exc
        except json.JSONDecodeError as exc:
            raise GoldenDataError(f"malformed golden file {name}: {exc}") from exc

    try:
        P6 = upoly_from_obj(read("P6.json"))
        P28 = upoly_from_obj(read("P28.json"))
        ident = read("identities.json")
        cert = read("certificate.json")
        named = {"P6.json": P6, "P28.json": P28}
        disc_factors = tuple(
            (
                fac["name"],
                named[fac["poly"]] if isinstance(fac["poly"], str) else upoly_from_obj(fac["poly"]),
                int(fac["exp"]),
            )
            for fac in cert["disc"]["factors"]
        )
        return GoldenData(
            E2=mpoly_from_obj(read("E2.json")),
            E3=mpoly_from_obj(read("E3.json")),
            F=mpoly_from_obj(read("F.json")),
            f=mpoly_from_obj(read("f.json")),
            P6=P6,
            P28=P28,
            disc_constant=parse_int(cert["disc"]["constant"]),
            disc_factors=disc_factors,
            F_degrees=dict(cert["F_degrees"]),
            f_degrees=dict(cert["f_degrees"]),
            f_lc_y_s_degree=int(cert["f_lc_y_s_degree"]),
            F_r1_expanded=mpoly_from_obj(ident["F_r1"]["expanded"]),
            F_r1=_factored(ident["F_r1"]),
            F_r0_expanded=mpoly_from_obj(ident["F_r0"]["expanded"]),
            F_r0=_factored(ident["F_r0"]),
            H24=_factored(ident["H24"]),
            f_s1=_factored(ident["f_s1"]),
            hand_checks=tuple(
                (h["poly"], parse_rat(h["at"]), parse_rat(h["value"])) for h in cert["hand_checks"]
            ),
            positive_root_counts=dict(cert["positive_root_counts"]),
            brackets=tuple(
                BracketSpec(b["label"], b["poly"], parse_rat(b["lo"]), parse_rat(b["hi"]), tuple(b["signs"]))
                for b in cert["brackets"]
            ),
            root_order=tuple(cert["root_order"]),
            samples=tuple(
                Sample(s["label"], parse_rat(s["s"]), tuple(s["between"]), int(s["count"]))
                for s in cert["samples"]
            ),
            checksums=sums,
            directory=directory,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GoldenDataError(f"malformed golden data: {exc}") from exc
