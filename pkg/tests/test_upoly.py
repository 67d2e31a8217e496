from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cuboidcert.upoly import (
    DEG_ZERO,
    NotDivisible,
    UPoly,
    ZeroPolynomial,
    is_squarefree,
    up_content,
    up_content_primitive,
    up_derivative,
    up_divmod,
    up_eval,
    up_exact_div,
    up_gcd,
    up_prem,
    up_rational_roots,
    up_sign_at,
    up_squarefree_part,
)

X = sympy.Symbol("x")
P6 = UPoly([1, 15, -1585, 3052, -1585, 15, 1], "s")


def P(*cs):
    """Coefficients given highest degree first, as printed."""
    return UPoly(list(reversed(cs)))


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], X)


def from_sympy(sp):
    return UPoly([int(c) for c in reversed(sp.all_coeffs())])


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(UPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def test_representation():
    assert UPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert UPoly([]).degree == DEG_ZERO
    assert UPoly([0]).is_zero()
    assert UPoly([Fraction(4, 2)]).coeffs == (2,) and isinstance(UPoly([Fraction(4, 2)]).coeffs[0], int)
    with pytest.raises(AttributeError):
        UPoly([1]).coeffs = (2,)
    assert str(P(1, 0, -2)) == "x**2 - 2"


@pytest.mark.parametrize("x, v", [(1, -86), (-1, -6250), (0, 1)])
def test_eval_P6(x, v):
    assert up_eval(P6, x) == v
    assert P6(x) == v


def test_eval_rational_matches_fraction_horner():
    for x in (Fraction(31, 1000), Fraction(-159, 5), Fraction(7, 3)):
        expected = sum(Fraction(c) * x**k for k, c in enumerate(P6.coeffs))
        assert up_eval(P6, x) == expected
        assert up_sign_at(P6, x) == (expected > 0) - (expected < 0)


def test_derivative():
    assert up_derivative(P(1, 0, -2)) == P(2, 0)
    assert up_derivative(UPoly([5])).is_zero()
    assert up_derivative(UPoly([0, 0, 0, 0, 0, 15, 1])) == UPoly([0, 0, 0, 0, 75, 6])


def test_exact_div():
    assert up_exact_div(P(1, 0, -1), P(1, -1)) == P(1, 1)
    with pytest.raises(NotDivisible) as e:
        up_exact_div(P(1, 0, 1), P(1, 0))
    assert e.value.remainder_degree == 0
    with pytest.raises(ZeroDivisionError):
        up_divmod(P(1, 0), UPoly([]))


def test_divmod_over_q():
    q, r = up_divmod(P(1, 0, 1), P(2, 1))
    assert q * P(2, 1) + r == P(1, 0, 1)
    assert r.degree < 1


def test_content_primitive():
    assert up_content_primitive(P(6, 4)) == (2, P(3, 2))
    assert up_content_primitive(P(-4, 0, -8)) == (4, P(-1, 0, -2))
    with pytest.raises(ZeroPolynomial):
        up_content_primitive(UPoly([]))


def test_gcd_examples():
    assert up_gcd(P(1, 0, -1), P(1, -2, 1)) == P(1, -1)
    assert up_gcd(P6, up_derivative(P6)) == UPoly([1], "s")
    assert up_gcd(UPoly([]), P(1, 0, 0, 0)) == P(1, 0, 0, 0)
    assert up_gcd(P(-2, 2), P(3, -3)) == P(1, -1)
    with pytest.raises(ZeroPolynomial):
        up_gcd(UPoly([]), UPoly([]))


def test_squarefree_examples():
    assert up_squarefree_part(P(1, -1) ** 2 * P(1, 2)) == P(1, -1) * P(1, 2)
    assert up_squarefree_part(P(1, 0, 1)) == P(1, 0, 1)
    assert is_squarefree(P6)
    assert not is_squarefree(P(1, -1) ** 2)


def test_rational_roots_examples():
    assert up_rational_roots(P6) == set()
    assert up_rational_roots(P(2, -1, -1)) == {Fraction(1), Fraction(-1, 2)}
    assert up_rational_roots(P(1, 0, 0)) == {Fraction(0)}
    assert up_rational_roots(P(3, 0, -3, 0)) == {Fraction(0), Fraction(1), Fraction(-1)}
    assert up_rational_roots(UPoly([Fraction(1, 2), 1])) == {Fraction(-1, 2)}


def test_prem_identity():
    f, g = P(3, 1, 0, 5, -2), P(2, 0, 7)
    r = up_prem(f, g)
    delta = f.degree - g.degree
    q, rr = up_divmod(f * g.lc ** (delta + 1), g)
    assert rr == r


@given(small_polys, nonzero_polys)
def test_exact_div_roundtrip(f, g):
    assert up_exact_div(f * g, g) == f


@given(nonzero_polys, nonzero_polys)
def test_gauss_lemma(f, g):
    assert up_content(f * g) == up_content(f) * up_content(g)


@settings(max_examples=60)
@given(nonzero_polys.filter(lambda p: p.degree >= 1), st.integers(1, 3))
def test_squarefree_of_power(p, k):
    assert up_squarefree_part(p**k) == up_squarefree_part(p)


@settings(max_examples=100)
@given(nonzero_polys, nonzero_polys)
def test_gcd_matches_sympy(f, g):
    ours = up_gcd(f, g)
    theirs = sympy.gcd(to_sympy(f), to_sympy(g))
    theirs = from_sympy(theirs.primitive()[1]) if theirs.degree() >= 0 else UPoly([1])
    if theirs.lc < 0:
        theirs = -theirs
    assert ours == theirs


linear = st.tuples(st.integers(1, 9), st.integers(-9, 9))


@settings(max_examples=100)
@given(st.lists(linear, min_size=1, max_size=5), st.integers(1, 5))
def test_rational_roots_brute_force(factors, scale):
    p = UPoly([scale])
    for a, b in factors:
        p = p * UPoly([b, a])
    # brute force over the full candidate set +-n/d
    lead, trail = abs(p.lc), abs(p.tc)
    cand = {Fraction(s * n, d) for n in range(1, trail + 1) if trail % n == 0
            for d in range(1, lead + 1) if lead % d == 0 for s in (1, -1)}
    if p.coeff(0) == 0:
        cand.add(Fraction(0))
    expected = {x for x in cand if up_eval(p, x) == 0}
    assert up_rational_roots(p) == expected
    assert expected == {Fraction(-b, a) for a, b in factors}
