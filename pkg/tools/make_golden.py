"""Write the golden data files and their checksum manifest.

Run once after editing ``transcripts.py``::

    python tools/make_golden.py [OUT_DIR]

Every file except ``f.json`` is a direct transcription.  ``f.json`` is
obtained from the transcribed F by the substitution a = r*y, r^2 = s.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import transcripts as T  # noqa: E402

from cuboidcert.mpoly import MPoly, mp_halve_exponents  # noqa: E402
from cuboidcert.pipeline.golden import DEFAULT_DIR, write_manifest  # noqa: E402
from cuboidcert.polyio import dumps, mpoly_to_obj, parse_poly, upoly_to_obj, parse_upoly  # noqa: E402


def split_factored(text: str, vars) -> tuple[int, list]:
    """'256*r**16*(a + 3*r)**2' -> (256, [(r, 16), (a + 3*r, 2)])."""
    const, factors = 1, []
    for m in re.finditer(r"(\([^()]*\)|[A-Za-z_]\w*|\d+)(?:\*\*(\d+))?", text):
        body, exp = m.group(1), int(m.group(2) or 1)
        if body.isdigit():
            const *= int(body) ** exp
        else:
            factors.append({"poly": mpoly_to_obj(parse_poly(body, vars)), "exp": exp})
    return const, factors


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    aa = lambda s: s.replace("aa", "a")  # noqa: E731

    E2 = parse_poly(T.E2, ("a", "d", "r"))
    E3 = parse_poly(T.E3, ("a", "d", "r"))
    F = parse_poly(T.F, ("r", "a"))
    ry = F.embed(("r", "a", "y")).substitute(
        "a", MPoly.gen("r", ("r", "a", "y")) * MPoly.gen("y", ("r", "a", "y"))
    )
    f = mp_halve_exponents(ry.embed(("r", "y")), "r", "s")

    files = {
        "E2.json": mpoly_to_obj(E2),
        "E3.json": mpoly_to_obj(E3),
        "F.json": mpoly_to_obj(F),
        "f.json": mpoly_to_obj(f),
        "P6.json": upoly_to_obj(parse_upoly(T.P6, "s")),
        "P28.json": upoly_to_obj(parse_upoly(T.P28, "s")),
    }

    c1, fac1 = split_factored(aa(T.F_AT_1_FACTORED), ("a",))
    c0, fac0 = split_factored(aa(T.F_AT_0_FACTORED), ("a",))
    ch, fach = split_factored(T.H24_FACTORED, ("r", "a"))
    cs1, facs1 = split_factored(T.F_AT_S1_FACTORED, ("y",))
    files["identities.json"] = {
        "F_r1": {
            "expanded": mpoly_to_obj(parse_poly(aa(T.F_AT_1), ("a",))),
            "constant": str(c1),
            "factors": fac1,
        },
        "F_r0": {
            "expanded": mpoly_to_obj(parse_poly(aa(T.F_AT_0), ("a",))),
            "constant": str(c0),
            "factors": fac0,
        },
        "H24": {"total_degree": 24, "constant": str(ch), "factors": fach},
        "f_s1": {"constant": str(cs1), "factors": facs1},
    }

    files["certificate.json"] = {
        "F_degrees": {"r": 24, "a": 16},
        "f_degrees": {"s": 12, "y": 16},
        "f_lc_y_s_degree": 8,
        "disc": {
            "constant": T.DISC_CONSTANT,
            "factors": [
                {"name": "s", "poly": upoly_to_obj(parse_upoly("s", "s")), "exp": 156},
                {"name": "s-1", "poly": upoly_to_obj(parse_upoly("s - 1", "s")), "exp": 54},
                {"name": "s+1", "poly": upoly_to_obj(parse_upoly("s + 1", "s")), "exp": 22},
                {"name": "P6", "poly": "P6.json", "exp": 4},
                {"name": "P28", "poly": "P28.json", "exp": 2},
            ],
        },
        "hand_checks": [
            {"poly": "P6", "at": "1", "value": "-86"},
            {"poly": "P6", "at": "-1", "value": "-6250"},
        ],
        "positive_root_counts": {"P6": 2, "P28": 3},
        "brackets": [
            {"label": "alpha1", "poly": "P6", "lo": "31/1000", "hi": "4/125", "signs": [1, -1]},
            {"label": "alpha2", "poly": "P6", "lo": "159/5", "hi": "319/10", "signs": [-1, 1]},
            {"label": "beta1", "poly": "P28", "lo": "47/100", "hi": "471/1000", "signs": [-1, 1]},
            {"label": "beta2", "poly": "P28", "lo": "786/25", "hi": "629/20", "signs": [1, -1]},
            {"label": "beta3", "poly": "P28", "lo": "1583/50", "hi": "3167/100", "signs": [-1, 1]},
        ],
        "root_order": ["alpha1", "beta1", "1", "beta2", "beta3", "alpha2"],
        "samples": [
            {"label": "(0, alpha1)", "s": "1/100", "between": ["0", "alpha1"], "count": 0},
            {"label": "(alpha1, beta1)", "s": "1/5", "between": ["alpha1", "beta1"], "count": 0},
            {"label": "(beta1, 1)", "s": "4/5", "between": ["beta1", "1"], "count": 0},
            {"label": "(1, beta2)", "s": "2", "between": ["1", "beta2"], "count": 0},
            {"label": "(beta2, beta3)", "s": "63/2", "between": ["beta2", "beta3"], "count": 0},
            {"label": "(beta3, alpha2)", "s": "317/10", "between": ["beta3", "alpha2"], "count": 0},
            {"label": "(alpha2, +oo)", "s": "40", "between": ["alpha2", "+oo"], "count": 0},
        ],
    }

    for name, obj in files.items():
        (out / name).write_text(dumps(obj), encoding="utf-8")
    write_manifest(out)
    print(f"wrote {len(files)} golden files to {out}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_DIR)
