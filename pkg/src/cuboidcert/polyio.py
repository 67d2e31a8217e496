"""Canonical polynomial file format and a small expression parser.

File format (JSON)::

    {"vars": ["r", "a"], "terms": [[[24, 0], "12960000"], ...]}

Terms are sorted descending in graded-lex order over ``vars``; coefficients
are decimal strings.  Univariate polynomials use a one-element ``vars``.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path
from typing import Iterable

from .exact_arith import format_int, parse_int
from .mpoly import MPoly
from .upoly import UPoly


def mpoly_to_obj(p: MPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [[list(e), format_int(c)] for e, c in p.sorted_terms("grlex")],
    }


def upoly_to_obj(p: UPoly) -> dict:
    if not p.is_integral:
        raise TypeError("file format holds integer coefficients only")
    return mpoly_to_obj(MPoly.from_upoly(p))


def poly_to_obj(p) -> dict:
    return upoly_to_obj(p) if isinstance(p, UPoly) else mpoly_to_obj(p)


def mpoly_from_obj(obj: dict) -> MPoly:
    vars = obj["vars"]
    terms = []
    for exps, coeff in obj["terms"]:
        if not isinstance(coeff, str):
            raise ValueError("coefficients must be decimal strings")
        terms.append((tuple(exps), parse_int(coeff)))
    p = MPoly(terms, vars)
    if len(p.terms) != len(terms):
        raise ValueError("duplicate or zero terms in polynomial file")
    return p


def upoly_from_obj(obj: dict) -> UPoly:
    p = mpoly_from_obj(obj)
    if len(p.vars) != 1:
        raise ValueError(f"expected a univariate polynomial, got vars {p.vars}")
    n = max((e[0] for e in p.terms), default=-1) + 1
    return UPoly([p.terms.get((k,), 0) for k in range(n)], p.vars[0])


def dumps(obj) -> str:
    """Deterministic JSON text used for files and digests."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def digest(obj) -> str:
    if isinstance(obj, (MPoly, UPoly)):
        obj = poly_to_obj(obj)
    return hashlib.sha256(dumps(obj).encode()).hexdigest()


def write_poly(path: str | Path, p) -> None:
    Path(path).write_text(dumps(poly_to_obj(p)), encoding="utf-8")


def read_mpoly(path: str | Path) -> MPoly:
    return mpoly_from_obj(json.loads(Path(path).read_text(encoding="utf-8")))


def read_upoly(path: str | Path) -> UPoly:
    return upoly_from_obj(json.loads(Path(path).read_text(encoding="utf-8")))


# -- expression parser -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*()^]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {text[pos:pos + 20]!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


def parse_poly(text: str, vars: Iterable[str]) -> MPoly:
    """Parse ``+ - * ** ^ ( )`` expressions with integer literals into an MPoly."""
    vars = tuple(vars)
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take(expected=None):
        nonlocal i
        t = peek()
        if t is None or (expected is not None and t != expected):
            raise ParseError(f"expected {expected or 'token'}, got {t!r}")
        i += 1
        return t

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek() == "*":
            take()
            acc = acc * power()
        return acc

    def power():
        base = atom()
        if peek() in ("**", "^"):
            take()
            exp = take()
            if not exp.isdigit():
                raise ParseError(f"exponent must be a nonnegative integer, got {exp!r}")
            return base ** int(exp)
        return base

    def atom():
        t = take()
        if t == "(":
            v = expr()
            take(")")
            return v
        if t == "-":
            return -power()
        if t.isdigit():
            return MPoly.const(int(t), vars)
        if t in vars:
            return MPoly.gen(t, vars)
        raise ParseError(f"unknown symbol {t!r} (vars {vars})")

    out = expr()
    if i != len(toks):
        raise ParseError(f"trailing input {toks[i:]}")
    return out


def parse_upoly(text: str, var: str) -> UPoly:
    p = parse_poly(text, (var,))
    n = max((e[0] for e in p.terms), default=-1) + 1
    return UPoly([p.terms.get((k,), 0) for k in range(n)], var)
