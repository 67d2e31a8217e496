"""Dense univariate polynomials over Z and Q.

A single :class:`UPoly` holds either integer or rational coefficients
(ascending by exponent, trailing zeros trimmed).  Coefficients that are
integral are always stored as ``int``, so ``is_integral`` is a cheap scan
and integer-only routines (content, gcd, Sturm chains) never see a
``Fraction`` with denominator 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import as_rat

# Degree of the zero polynomial.  Deliberately not -1.
DEG_ZERO = -math.inf


class ZeroPolynomial(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, remainder_degree, message: str = ""):
        self.remainder_degree = remainder_degree
        super().__init__(message or f"nonzero remainder of degree {remainder_degree}")


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    return _norm(as_rat(c))


def _trim(cs: list) -> tuple:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class UPoly:
    """Immutable dense univariate polynomial."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        object.__setattr__(self, "coeffs", _trim([_norm(c) for c in coeffs]))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    def __reduce__(self):
        return (UPoly, (self.coeffs, self.var))

    @classmethod
    def _raw(cls, coeffs: tuple, var: str) -> "UPoly":
        # coeffs already normalized and trimmed
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "var", var)
        return obj

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> "UPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots: Sequence, var: str = "x") -> "UPoly":
        out = cls([1], var)
        for r in roots:
            out = out * cls([-as_rat(r), 1], var)
        return out

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def tc(self):
        """Lowest nonzero coefficient."""
        for c in self.coeffs:
            if c:
                return c
        return 0

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([_norm(other)])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                mono = self.var if k == 1 else f"{self.var}**{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        return UPoly([other], self.var)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            c = _norm(other)
            return UPoly([c * x for x in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = UPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, k: int) -> "UPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return UPoly._raw((0,) * k + self.coeffs, self.var)

    def __call__(self, x):
        return up_eval(self, x)

    def derivative(self) -> "UPoly":
        return up_derivative(self)

    def with_var(self, var: str) -> "UPoly":
        return UPoly._raw(self.coeffs, var)


# ---------------------------------------------------------------------------


def up_eval(p: UPoly, x):
    """Exact Horner evaluation.

    Rational points are evaluated homogeneously over the integers,
    ``sum a_i n^i d^(deg-i)``, and divided once at the end.
    """
    cs = p.coeffs
    if not cs:
        return 0
    if isinstance(x, int) and p.is_integral:
        acc = 0
        for c in reversed(cs):
            acc = acc * x + c
        return acc
    x = as_rat(x)
    if p.is_integral:
        n, d = x.numerator, x.denominator
        acc = 0
        dpow = 1
        for c in reversed(cs):
            acc = acc * n + c * dpow
            dpow *= d
        # acc = sum c_i n^i d^(deg-i); dpow overshot by one factor of d
        return _norm(Fraction(acc, dpow // d))
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return _norm(acc)


def up_sign_at(p: UPoly, x) -> int:
    """Sign of p(x); avoids building the full Fraction for integer p."""
    cs = p.coeffs
    if not cs:
        return 0
    if p.is_integral:
        x = as_rat(x)
        n, d = x.numerator, x.denominator
        acc = 0
        dpow = 1
        for c in reversed(cs):
            acc = acc * n + c * dpow
            dpow *= d
        return (acc > 0) - (acc < 0)
    v = up_eval(p, x)
    return (v > 0) - (v < 0)


def up_derivative(p: UPoly) -> UPoly:
    return UPoly([k * c for k, c in enumerate(p.coeffs)][1:], p.var)


def up_divmod(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly]:
    """Quotient and remainder with ``f = q*g + r``, ``deg r < deg g``.

    Stays in the integers while every step divides exactly, so monic and
    unit-leading divisors never create fractions.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lg = g.coeffs[-1]
    gc = g.coeffs
    if len(rem) - 1 < dg:
        return UPoly((), f.var), f
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if not c:
            continue
        if isinstance(c, int) and isinstance(lg, int) and c % lg == 0:
            t = c // lg
        else:
            t = _norm(as_rat(c) / lg)
        quot[k - dg] = t
        off = k - dg
        for j in range(dg + 1):
            if gc[j]:
                rem[off + j] = rem[off + j] - t * gc[j]
        rem[k] = 0
    return UPoly(quot, f.var), UPoly(rem[:dg], f.var)


def up_exact_div(f: UPoly, g: UPoly) -> UPoly:
    q, r = up_divmod(f, g)
    if not r.is_zero():
        raise NotDivisible(r.degree)
    return q


def up_prem(f: UPoly, g: UPoly) -> UPoly:
    """Pseudo-remainder ``lc(g)^(deg f - deg g + 1) * f mod g`` over Z."""
    if g.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    df, dg = len(f.coeffs) - 1, len(g.coeffs) - 1
    if df < dg:
        return f
    rem = list(f.coeffs)
    lg = g.coeffs[-1]
    gc = g.coeffs
    for k in range(df, dg - 1, -1):
        c = rem[k]
        rem = [lg * x for x in rem[:k]]
        if c:
            off = k - dg
            for j in range(dg):
                if gc[j]:
                    rem[off + j] -= c * gc[j]
    return UPoly(rem, f.var)


def up_content(p: UPoly) -> int:
    if not p.is_integral:
        raise TypeError("content is defined here for integer polynomials")
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def up_content_primitive(p: UPoly) -> tuple[int, UPoly]:
    """``(content, primitive)`` with content > 0; the sign stays on the primitive part."""
    if p.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    g = up_content(p)
    if g == 1:
        return 1, p
    return g, UPoly._raw(tuple(c // g for c in p.coeffs), p.var)


def primitive(p: UPoly) -> UPoly:
    return up_content_primitive(p)[1]


def clear_denominators(p: UPoly) -> tuple[int, UPoly]:
    """Return ``(m, m*p)`` with m the positive lcm of the denominators."""
    m = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            m = math.lcm(m, c.denominator)
    if m == 1:
        return 1, p
    return m, UPoly([c * m for c in p.coeffs], p.var)


def _positive_primitive(p: UPoly) -> UPoly:
    q = primitive(clear_denominators(p)[1])
    return -q if q.lc < 0 else q


def up_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd(0, 0)")
    if f.is_zero():
        return _positive_primitive(g)
    if g.is_zero():
        return _positive_primitive(f)
    a = _positive_primitive(f)
    b = _positive_primitive(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = up_prem(a, b)
        a, b = b, (primitive(r) if not r.is_zero() else r)
    return -a if a.lc < 0 else a


def up_squarefree_part(p: UPoly) -> UPoly:
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    q = _positive_primitive(p)
    if q.degree < 1:
        return UPoly([1], p.var)
    g = up_gcd(q, up_derivative(q))
    return _positive_primitive(up_exact_div(q, g))


def is_squarefree(p: UPoly) -> bool:
    if p.is_zero():
        return False
    if p.degree < 1:
        return True
    return up_gcd(p, up_derivative(p)).degree == 0


def positive_divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def up_rational_roots(p: UPoly) -> set[Fraction]:
    """Every rational root, by the rational root theorem and exact evaluation."""
    if p.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    _, q = clear_denominators(p)
    roots: set[Fraction] = set()
    k = 0
    while q.coeffs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        q = UPoly._raw(q.coeffs[k:], q.var)
    q = primitive(q)
    if q.degree < 1:
        return roots
    cs = q.coeffs
    for d in positive_divisors(cs[-1]):
        for n in positive_divisors(cs[0]):
            if math.gcd(n, d) != 1:
                continue
            for num in (n, -n):
                acc = 0
                dpow = 1
                for c in reversed(cs):
                    acc = acc * num + c * dpow
                    dpow *= d
                if acc == 0:
                    roots.add(Fraction(num, d))
    return roots


def up_compose(p: UPoly, q: UPoly) -> UPoly:
    """``p(q(x))``."""
    out = UPoly((), q.var)
    for c in reversed(p.coeffs):
        out = out * q + c
    return out
