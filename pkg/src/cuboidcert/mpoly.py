"""Sparse multivariate polynomials over Z with named variables.

Terms live in a dict from exponent tuples (one entry per variable, in the
order of ``vars``) to nonzero ints.  Operations between polynomials need
identical variable lists; use :meth:`MPoly.embed` to align explicitly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .exact_arith import as_rat
from .upoly import DEG_ZERO, NotDivisible, UPoly, ZeroPolynomial


class VariableMismatch(ValueError):
    pass


class UnknownVariable(KeyError):
    pass


class OddExponent(ValueError):
    def __init__(self, term, var):
        self.term = term
        self.var = var
        super().__init__(f"odd exponent of {var} in term {term}")


def grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


def lex_key(exps: tuple) -> tuple:
    return exps


ORDERS = {"grlex": grlex_key, "lex": lex_key}


class MPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | Iterable = (), vars: Iterable[str] = ()):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        clean: dict[tuple, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        n = len(vars)
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for vars {vars}")
            if not isinstance(c, int):
                c = as_rat(c)
                if c.denominator != 1:
                    raise TypeError(f"non-integer coefficient {c}")
                c = c.numerator
            c = clean.get(exps, 0) + c
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    def __reduce__(self):
        return (_rebuild, (self.terms, self.vars))

    @classmethod
    def _raw(cls, terms: dict, vars: tuple) -> "MPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "vars", vars)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def const(cls, c: int, vars: Iterable[str]) -> "MPoly":
        vars = tuple(vars)
        return cls._raw({(0,) * len(vars): c} if c else {}, vars)

    @classmethod
    def gen(cls, name: str, vars: Iterable[str]) -> "MPoly":
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        exps = tuple(1 if v == name else 0 for v in vars)
        return cls._raw({exps: 1}, vars)

    @classmethod
    def gens(cls, vars: Iterable[str]) -> tuple["MPoly", ...]:
        vars = tuple(vars)
        return tuple(cls.gen(v, vars) for v in vars)

    @classmethod
    def from_upoly(cls, p: UPoly, var: str | None = None) -> "MPoly":
        var = var or p.var
        if not p.is_integral:
            raise TypeError("MPoly coefficients must be integers")
        return cls._raw({(k,): c for k, c in enumerate(p.coeffs) if c}, (var,))

    # -- queries -------------------------------------------------------

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise UnknownVariable(var) from None

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def degree(self, var: str):
        return mp_degree(self, var)

    def total_degree(self):
        if not self.terms:
            return DEG_ZERO
        return max(sum(e) for e in self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self, order: str = "grlex") -> list[tuple[tuple, int]]:
        key = ORDERS[order]
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str = "grlex") -> tuple[tuple, int]:
        if not self.terms:
            raise ZeroPolynomial("leading term of zero")
        key = ORDERS[order]
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.vars, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return f"MPoly({self}, vars={list(self.vars)})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, (exps, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if e == 1 else f"{v}**{e}" for v, e in zip(self.vars, exps) if e
            )
            mag = abs(c)
            body = (mono if mag == 1 else f"{mag}*{mono}") if mono else str(mag)
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise VariableMismatch(f"{self.vars} vs {other.vars}")

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return MPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return MPoly._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MPoly._raw({}, self.vars)
            return MPoly._raw({e: c * other for e, c in self.terms.items()}, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return mp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- structure -----------------------------------------------------

    def embed(self, vars: Iterable[str]) -> "MPoly":
        """Re-express over ``vars``, which must contain every variable in use."""
        vars = tuple(vars)
        pos = []
        for i, v in enumerate(self.vars):
            if v in vars:
                pos.append(vars.index(v))
            elif any(e[i] for e in self.terms):
                raise VariableMismatch(f"{v} is used but missing from {vars}")
            else:
                pos.append(None)
        n = len(vars)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for e, p in zip(exps, pos):
                if p is not None:
                    new[p] = e
            out[tuple(new)] = c
        return MPoly._raw(out, vars)

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        return MPoly._raw(dict(self.terms), tuple(mapping.get(v, v) for v in self.vars))

    def substitute(self, var_or_map, repl: "MPoly | None" = None) -> "MPoly":
        if repl is not None:
            return mp_substitute(self, {var_or_map: repl})
        return mp_substitute(self, var_or_map)

    def coeff_in(self, var: str, k: int) -> "MPoly":
        return mp_coeff_in(self, var, k)

    def coeffs_in(self, var: str) -> list["MPoly"]:
        return mp_coeffs_in(self, var)

    def diff(self, var: str) -> "MPoly":
        i = self.index(var)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                new = exps[:i] + (e - 1,) + exps[i + 1:]
                out[new] = c * e
        return MPoly._raw(out, self.vars)

    def evaluate(self, values: Mapping[str, object]):
        """Exact value with every variable assigned."""
        missing = set(self.vars) - set(values)
        if missing:
            raise UnknownVariable(", ".join(sorted(missing)))
        pts = [as_rat(values[v]) for v in self.vars]
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = Fraction(c)
            for x, e in zip(pts, exps):
                if e:
                    t *= x**e
            total += t
        return total.numerator if total.denominator == 1 else total

    def specialize(self, values: Mapping[str, int]) -> "MPoly":
        """Assign integer values to some variables; they leave the variable list."""
        idx = [self.index(v) for v in values]
        keep = [i for i in range(len(self.vars)) if i not in idx]
        vals = [(i, int(values[self.vars[i]])) for i in idx]
        out: dict[tuple, int] = {}
        for exps, c in self.terms.items():
            for i, x in vals:
                c *= x ** exps[i]
                if not c:
                    break
            if not c:
                continue
            key = tuple(exps[i] for i in keep)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
        return MPoly._raw(out, tuple(self.vars[i] for i in keep))

    def to_upoly(self, var: str, at: Mapping[str, object] | None = None) -> UPoly:
        """Univariate polynomial in ``var`` after assigning the other variables."""
        at = dict(at or {})
        i = self.index(var)
        others = [j for j in range(len(self.vars)) if j != i]
        for j in others:
            if self.vars[j] not in at:
                raise UnknownVariable(f"no value for {self.vars[j]}")
        pts = {j: as_rat(at[self.vars[j]]) for j in others}
        coeffs: dict[int, Fraction] = {}
        for exps, c in self.terms.items():
            t = Fraction(c)
            for j in others:
                if exps[j]:
                    t *= pts[j] ** exps[j]
            coeffs[exps[i]] = coeffs.get(exps[i], 0) + t
        n = max(coeffs, default=-1) + 1
        return UPoly([coeffs.get(k, 0) for k in range(n)], var)


def _rebuild(terms, vars):
    return MPoly._raw(terms, vars)


# ---------------------------------------------------------------------------


def mp_mul(p: MPoly, q: MPoly) -> MPoly:
    p._check(q)
    if len(p.terms) > len(q.terms):
        p, q = q, p
    out: dict[tuple, int] = {}
    qi = list(q.terms.items())
    for e1, c1 in p.terms.items():
        for e2, c2 in qi:
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return MPoly._raw({e: c for e, c in out.items() if c}, p.vars)


def mp_substitute(p: MPoly, repl: Mapping[str, MPoly]) -> MPoly:
    """Simultaneous substitution ``var -> repl[var]`` with full expansion."""
    idx = {}
    for v, r in repl.items():
        idx[p.index(v)] = r
        if not isinstance(r, MPoly):
            raise TypeError(f"replacement for {v} must be an MPoly")
        p._check(r)
    powers: dict[tuple[int, int], MPoly] = {}

    def power(i: int, e: int) -> MPoly:
        key = (i, e)
        if key not in powers:
            powers[key] = idx[i] if e == 1 else power(i, e - 1) * idx[i]
        return powers[key]

    out: dict[tuple, int] = {}
    for exps, c in p.terms.items():
        base = tuple(0 if i in idx else e for i, e in enumerate(exps))
        acc = {base: c}
        for i, r in idx.items():
            e = exps[i]
            if e:
                acc = mp_mul(MPoly._raw(acc, p.vars), power(i, e)).terms
        for e, v in acc.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                del out[e]
    return MPoly._raw(out, p.vars)


def mp_coeff_in(p: MPoly, var: str, k: int) -> MPoly:
    i = p.index(var)
    rest = p.vars[:i] + p.vars[i + 1:]
    out = {e[:i] + e[i + 1:]: c for e, c in p.terms.items() if e[i] == k}
    return MPoly._raw(out, rest)


def mp_coeffs_in(p: MPoly, var: str) -> list[MPoly]:
    """Coefficients of var**0 .. var**deg, each over the remaining variables."""
    i = p.index(var)
    rest = p.vars[:i] + p.vars[i + 1:]
    buckets: dict[int, dict] = {}
    for e, c in p.terms.items():
        buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
    n = max(buckets, default=-1) + 1
    return [MPoly._raw(buckets.get(k, {}), rest) for k in range(n)]


def mp_from_coeffs(coeffs: list[MPoly], var: str, pos: int = 0) -> MPoly:
    """Inverse of :func:`mp_coeffs_in`: insert ``var`` at position ``pos``."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    rest = coeffs[0].vars
    vars = rest[:pos] + (var,) + rest[pos:]
    out = {}
    for k, c in enumerate(coeffs):
        if c.vars != rest:
            raise VariableMismatch(f"{c.vars} vs {rest}")
        for e, v in c.terms.items():
            out[e[:pos] + (k,) + e[pos:]] = v
    return MPoly._raw(out, vars)


def mp_degree(p: MPoly, var: str):
    i = p.index(var)
    if not p.terms:
        return DEG_ZERO
    return max(e[i] for e in p.terms)


def mp_content(p: MPoly) -> int:
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def mp_primitive(p: MPoly) -> tuple[int, MPoly]:
    """Positive content and primitive part (which keeps the sign of every term).

    Callers wanting a positive leading coefficient use :func:`mp_normalize`.
    """
    if p.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    g = mp_content(p)
    if g == 1:
        return 1, p
    return g, MPoly._raw({e: c // g for e, c in p.terms.items()}, p.vars)


def mp_normalize(p: MPoly, order: str = "grlex") -> tuple[int, MPoly]:
    """Signed content ``c`` and primitive ``q`` with ``p == c*q`` and lc(q) > 0."""
    g, q = mp_primitive(p)
    if q.leading_term(order)[1] < 0:
        return -g, -q
    return g, q


def mp_halve_exponents(p: MPoly, var: str, newvar: str) -> MPoly:
    """Rewrite ``var**(2k)`` as ``newvar**k`` in every term."""
    i = p.index(var)
    out = {}
    for e, c in p.terms.items():
        if e[i] % 2:
            raise OddExponent(dict(zip(p.vars, e)), var)
        out[e[:i] + (e[i] // 2,) + e[i + 1:]] = c
    vars = p.vars[:i] + (newvar,) + p.vars[i + 1:]
    if len(set(vars)) != len(vars):
        raise VariableMismatch(f"{newvar} already present in {p.vars}")
    return MPoly._raw(out, vars)


def mp_divide_monomial(p: MPoly, var: str, k: int) -> MPoly:
    """Exact term-wise division by ``var**k``; every term must carry it."""
    i = p.index(var)
    out = {}
    for e, c in p.terms.items():
        if e[i] < k:
            raise NotDivisible(e[i], f"term {dict(zip(p.vars, e))} has {var}-exponent < {k}")
        out[e[:i] + (e[i] - k,) + e[i + 1:]] = c
    return MPoly._raw(out, p.vars)


def mp_exact_div(p: MPoly, q: MPoly) -> MPoly:
    """Quotient of an exact division in Z[vars]; raises NotDivisible otherwise."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    lq_e, lq_c = q.leading_term("lex")
    q_rest = [(e, c) for e, c in q.terms.items() if e != lq_e]
    rem = dict(p.terms)
    quot: dict[tuple, int] = {}
    while rem:
        le = max(rem)
        lc = rem[le]
        if any(a < b for a, b in zip(le, lq_e)) or lc % lq_c:
            raise NotDivisible(None, "multivariate division left a remainder")
        te = tuple(a - b for a, b in zip(le, lq_e))
        tc = lc // lq_c
        quot[te] = tc
        del rem[le]
        for e, c in q_rest:
            key = tuple(a + b for a, b in zip(te, e))
            v = rem.get(key, 0) - tc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return MPoly._raw(quot, p.vars)


def mp_clear_fraction(p: MPoly, var: str, num: MPoly, den: MPoly) -> MPoly:
    """``den**m * p(var = num/den)`` with m = deg_var p, fully expanded.

    ``num`` and ``den`` are over ``p.vars``.  This is the substitution of a
    rational expression followed by clearing its denominator.
    """
    p._check(num)
    p._check(den)
    m = mp_degree(p, var)
    if m == DEG_ZERO:
        return p
    coeffs = mp_coeffs_in(p, var)
    i = p.index(var)
    out = MPoly._raw({}, p.vars)
    for k, ck in enumerate(coeffs):
        if ck.is_zero():
            continue
        lifted = mp_from_coeffs([ck], var, i)
        out = out + lifted * num**k * den ** (m - k)
    return out
