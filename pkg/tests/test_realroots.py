from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from _properties import sturm_properties
from cuboidcert.pipeline.golden import load_golden
from cuboidcert.realroots import (
    MINUS_INFINITY,
    PLUS_INFINITY,
    Bracket,
    EndpointIsRoot,
    NotSquarefree,
    ZeroIsRoot,
    cauchy_bound,
    count_real_roots,
    count_with_chain,
    isolate_positive_roots,
    refine_bracket,
    sign_variations,
    sturm_chain,
)
from cuboidcert.upoly import UPoly, ZeroPolynomial, up_sign_at

G = load_golden()
P6, P28 = G.P6, G.P28
X2M2 = UPoly([-2, 0, 1])


def test_extended_points_order():
    assert MINUS_INFINITY < Fraction(-10**9) < PLUS_INFINITY
    assert MINUS_INFINITY < PLUS_INFINITY and not PLUS_INFINITY < MINUS_INFINITY
    assert sorted([PLUS_INFINITY, 3, MINUS_INFINITY]) == [MINUS_INFINITY, 3, PLUS_INFINITY]


def test_chain_examples():
    c = sturm_chain(X2M2)
    assert [p.coeffs for p in c.polys] == [(-2, 0, 1), (0, 1), (1,)]
    c6 = sturm_chain(P6)
    assert len(c6) == 7 and c6.polys[-1].degree == 0
    cd = sturm_chain(UPoly([1, -2, 1]))
    assert cd.polys[-1] == UPoly([-1, 1])
    with pytest.raises(ZeroPolynomial):
        sturm_chain(UPoly([]))


def test_sign_variations_examples():
    c = sturm_chain(X2M2)
    assert sign_variations(c, MINUS_INFINITY) == 2
    assert sign_variations(c, PLUS_INFINITY) == 0
    c1 = sturm_chain(UPoly([1, 0, 1]))
    assert sign_variations(c1, MINUS_INFINITY) - sign_variations(c1, PLUS_INFINITY) == 0


def test_counts_examples():
    assert count_real_roots(P6, 0, PLUS_INFINITY) == 2
    assert count_real_roots(P28, 0, PLUS_INFINITY) == 3
    assert count_real_roots(X2M2) == 2
    assert count_real_roots(UPoly([-1, 1]) ** 3 * UPoly([2, 1])) == 2
    with pytest.raises(EndpointIsRoot):
        count_real_roots(UPoly([-1, 1]), 1, 2)
    with pytest.raises(ValueError):
        count_real_roots(X2M2, 2, 1)


def test_count_rational_coefficients():
    p = UPoly([Fraction(-1, 3), 0, Fraction(1, 2)])
    assert count_real_roots(p) == 2
    assert count_real_roots(p, 0, PLUS_INFINITY) == 1


def test_cauchy_bound():
    assert cauchy_bound(X2M2) == 3
    assert cauchy_bound(UPoly([-10, 1])) == 11
    assert cauchy_bound(P28) > Fraction(319, 10)
    with pytest.raises(ZeroPolynomial):
        cauchy_bound(UPoly([]))


def test_isolation_examples():
    (b,) = isolate_positive_roots(X2M2)
    assert b.lo < Fraction(141421, 100000) < b.hi and b.root_count == 1
    for poly, name in ((P6, "P6"), (P28, "P28")):
        specs = [s for s in G.brackets if s.poly == name]
        found = isolate_positive_roots(poly)
        assert len(found) == len(specs)
        for br in found:
            fine = refine_bracket(poly, br, Fraction(1, 10**5))
            assert sum(1 for s in specs if s.lo <= fine.lo and fine.hi <= s.hi) == 1


def test_isolation_errors():
    with pytest.raises(NotSquarefree):
        isolate_positive_roots(UPoly([1, -2, 1]))
    with pytest.raises(ZeroIsRoot):
        isolate_positive_roots(UPoly([0, -2, 1]))


def test_bracket_invariants():
    with pytest.raises(ValueError):
        Bracket(Fraction(1), Fraction(1))
    b = Bracket(Fraction(0), Fraction(1))
    assert Fraction(1, 2) in b and 1 not in b


def test_sturm_vs_known_roots():
    assert sturm_properties(200) == 200


roots_st = st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True)


@settings(max_examples=60)
@given(roots_st, st.integers(1, 50), st.integers(-41, 41))
def test_scaling_and_additivity(roots, scale, cut2):
    p = UPoly.from_roots(roots)
    total = count_real_roots(p)
    assert count_real_roots(p * scale) == total
    cut = Fraction(cut2, 2) + Fraction(1, 3)  # never an integer
    chain = sturm_chain(p)
    left = count_with_chain(chain, MINUS_INFINITY, cut)
    right = count_with_chain(chain, cut, PLUS_INFINITY)
    assert left + right == total


@settings(max_examples=40)
@given(roots_st.map(lambda rs: [r for r in rs if r]).filter(bool))
def test_isolation_partition(roots):
    p = UPoly.from_roots(roots)
    brs = isolate_positive_roots(p)
    assert sum(b.root_count for b in brs) == count_real_roots(p, 0, PLUS_INFINITY)
    for a, b in zip(brs, brs[1:]):
        assert a.hi <= b.lo
    for b in brs:
        assert up_sign_at(p, b.lo) and up_sign_at(p, b.hi)
        assert count_real_roots(p, b.lo, b.hi) == 1
