"""Sturm chains, exact real-root counting and rational root isolation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .exact_arith import as_rat
from .upoly import (
    UPoly,
    ZeroPolynomial,
    clear_denominators,
    is_squarefree,
    primitive,
    up_derivative,
    up_prem,
    up_sign_at,
)


class EndpointIsRoot(ValueError):
    pass


class NotSquarefree(ValueError):
    pass


class ZeroIsRoot(ValueError):
    pass


@total_ordering
class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign > other.sign
        return self.sign > 0

    def __repr__(self):
        return "+oo" if self.sign > 0 else "-oo"

    def __reduce__(self):
        return (_Infinity, (self.sign,))


MINUS_INFINITY = _Infinity(-1)
PLUS_INFINITY = _Infinity(1)


def _point(x):
    return x if isinstance(x, _Infinity) else as_rat(x)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[UPoly, ...]

    def __len__(self):
        return len(self.polys)

    def signs_at(self, x) -> list[int]:
        x = _point(x)
        if isinstance(x, _Infinity):
            return [_sign(p.lc) * (x.sign ** p.degree) for p in self.polys]
        return [up_sign_at(p, x) for p in self.polys]


@dataclass(frozen=True)
class Bracket:
    lo: Fraction
    hi: Fraction
    root_count: int = 1

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty bracket ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi


def sturm_chain(p: UPoly) -> SturmChain:
    """p, p', then negated pseudo-remainders; only positive scalings are applied."""
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    _, pz = clear_denominators(p)
    chain = [primitive(pz)]
    if chain[0].degree == 0:
        return SturmChain(tuple(chain))
    chain.append(primitive(up_derivative(chain[0])))
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = up_prem(a, b)
        if r.is_zero():
            break
        # prem = lc(b)^(delta+1) * rem; undo a negative multiplier
        delta = a.degree - b.degree
        if b.lc < 0 and (delta + 1) % 2:
            r = -r
        chain.append(primitive(-r))
    return SturmChain(tuple(chain))


def sign_variations(chain: SturmChain, x) -> int:
    signs = [s for s in chain.signs_at(x) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _check_interval(lo, hi):
    if not lo < hi:
        raise ValueError(f"interval endpoints out of order: {lo!r} >= {hi!r}")


def count_with_chain(chain: SturmChain, lo, hi) -> int:
    """Distinct real roots in the open interval (lo, hi), endpoints non-roots."""
    lo, hi = _point(lo), _point(hi)
    _check_interval(lo, hi)
    p0 = chain.polys[0]
    for x in (lo, hi):
        if not isinstance(x, _Infinity) and up_sign_at(p0, x) == 0:
            raise EndpointIsRoot(f"{x} is a root")
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_real_roots(p: UPoly, lo=MINUS_INFINITY, hi=PLUS_INFINITY) -> int:
    return count_with_chain(sturm_chain(p), lo, hi)


def cauchy_bound(p: UPoly) -> Fraction:
    """``1 + max |a_i| / |a_n|``: every real root lies in (-B, B)."""
    if p.is_zero():
        raise ZeroPolynomial("Cauchy bound of the zero polynomial")
    if p.degree < 1:
        raise ValueError("Cauchy bound needs degree >= 1")
    lc = abs(as_rat(p.lc))
    return 1 + max(abs(as_rat(c)) for c in p.coeffs[:-1]) / lc


def _split_point(p: UPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    k = 3
    while up_sign_at(p, mid) == 0:
        # finitely many roots, so some nearby split avoids them
        mid = lo + (hi - lo) * Fraction(k - 1, 2 * k - 1)
        k += 1
    return mid


def isolate_roots(p: UPoly, lo, hi, chain: SturmChain | None = None) -> list[Bracket]:
    """Bisect (lo, hi) into brackets holding exactly one root each."""
    chain = chain or sturm_chain(p)
    lo, hi = as_rat(lo), as_rat(hi)
    out = []
    stack = [(lo, hi, count_with_chain(chain, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(Bracket(a, b, 1))
            continue
        m = _split_point(p, a, b)
        stack.append((m, b, count_with_chain(chain, m, b)))
        stack.append((a, m, count_with_chain(chain, a, m)))
    return sorted(out, key=lambda br: br.lo)


def isolate_positive_roots(p: UPoly) -> list[Bracket]:
    if p.is_zero():
        raise ZeroPolynomial("isolation of the zero polynomial")
    if not is_squarefree(clear_denominators(p)[1]):
        raise NotSquarefree("polynomial has a repeated factor")
    if p.coeff(0) == 0:
        raise ZeroIsRoot("0 is a root")
    if p.degree < 1:
        return []
    return isolate_roots(p, Fraction(0), cauchy_bound(p))


def refine_bracket(p: UPoly, br: Bracket, max_width) -> Bracket:
    """Halve a one-root bracket until its width is at most ``max_width``."""
    chain = sturm_chain(p)
    max_width = as_rat(max_width)
    lo, hi = br.lo, br.hi
    while hi - lo > max_width:
        m = _split_point(p, lo, hi)
        if count_with_chain(chain, lo, m) == 1:
            hi = m
        else:
            lo = m
    return Bracket(lo, hi, 1)


def endpoint_signs(p: UPoly, lo, hi) -> tuple[int, int]:
    return up_sign_at(p, as_rat(lo)), up_sign_at(p, as_rat(hi))
