"""Resultants and discriminants through Sylvester determinants.

Two routes are available for polynomials whose coefficients live in
Z[x1, ..., xk]:

* ``method="bareiss"`` runs fraction-free elimination directly on the
  matrix of MPoly entries (exact multivariate division at each step);
* ``method="interpolate"`` specializes the remaining variables on integer
  grids, takes integer Bareiss determinants and rebuilds the polynomial by
  Newton interpolation, one variable at a time.

Both produce the same canonical MPoly.  Specialization is applied to the
*formal* Sylvester matrix, so a leading coefficient that vanishes at some
abscissa is harmless: the determinant of the specialized matrix is the
specialization of the determinant.
"""

from __future__ import annotations

import operator
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from .exact_arith import as_rat
from .mpoly import MPoly, mp_coeffs_in, mp_degree, mp_exact_div
from .upoly import DEG_ZERO, NotDivisible, UPoly, clear_denominators


class DegreeZero(ValueError):
    pass


class DuplicateAbscissa(ValueError):
    pass


class DegreeExceeded(ValueError):
    pass


def sylvester_matrix(f: Sequence, g: Sequence) -> list[list]:
    """Sylvester matrix of two coefficient lists given in ascending order.

    The formal degrees are ``len(f) - 1`` and ``len(g) - 1``; a zero leading
    entry is kept as is.  Rows: deg g shifted copies of f, then deg f of g.
    """
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        raise DegreeZero("empty coefficient list")
    dim = m + n
    zero = f[0] - f[0]
    fd, gd = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (dim - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (dim - n - 1 - i))
    return rows


def bareiss_det(m: Sequence[Sequence], exact_div: Callable = operator.floordiv):
    """Determinant by fraction-free Gaussian elimination.

    Every division ``exact_div(x, prev_pivot)`` is exact; for integers the
    default floor division is therefore correct.
    """
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                v = ri[j] * piv - aik * rk[j]
                ri[j] = v if prev is None else exact_div(v, prev)
            ri[k] = 0
        prev = piv
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_det(m: Sequence[Sequence]):
    """Laplace expansion along the first row (test oracle; exponential time)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def interpolate(points: Sequence[tuple], degree_bound: int, var: str = "x") -> UPoly:
    """Newton interpolation over Q through ``points`` with degree <= bound."""
    xs = [as_rat(x) for x, _ in points]
    ys = [as_rat(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("abscissae must be distinct")
    if len(xs) < degree_bound + 1:
        raise DegreeExceeded(f"need {degree_bound + 1} points, got {len(xs)}")
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for k in range(n - 2, -1, -1):
        # poly <- poly * (x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + poly
        for i in range(len(poly)):
            shifted[i] -= xs[k] * poly[i]
        shifted[0] += coef[k]
        poly = shifted
    out = UPoly(poly, var)
    if out.degree != DEG_ZERO and out.degree > degree_bound:
        raise DegreeExceeded(f"interpolant has degree {out.degree} > {degree_bound}")
    return out


def _row_degree_bound(matrix, var: str) -> int:
    total = 0
    for row in matrix:
        best = 0
        for entry in row:
            d = mp_degree(entry, var)
            if d != DEG_ZERO and d > best:
                best = d
        total += best
    return total


def _det_at(args):
    matrix, var, x, rest = args
    spec = [[e.specialize({var: x}) for e in row] for row in matrix]
    return _det_interpolate(spec, rest, 1)


def _det_interpolate(matrix, rest: tuple, jobs: int) -> MPoly:
    """Determinant of an MPoly matrix over ``rest`` by evaluation/interpolation."""
    if not rest:
        ints = [[e.constant_value() for e in row] for row in matrix]
        return MPoly.const(bareiss_det(ints), ())
    var, tail = rest[0], rest[1:]
    bound = _row_degree_bound(matrix, var)
    xs = list(range(bound + 1))
    work = [(matrix, var, x, tail) for x in xs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_det_at, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        values = [_det_at(w) for w in work]
    monos = sorted({e for v in values for e in v.terms})
    out: dict[tuple, int] = {}
    for mono in monos:
        pts = [(x, v.terms.get(mono, 0)) for x, v in zip(xs, values)]
        up = interpolate(pts, bound, var)
        if not up.is_integral:
            raise ArithmeticError("interpolated resultant has a non-integer coefficient")
        for k, c in enumerate(up.coeffs):
            if c:
                out[(k,) + mono] = c
    return MPoly(out, rest)


def _bareiss_mpoly(matrix, rest: tuple) -> MPoly:
    det = bareiss_det(matrix, exact_div=mp_exact_div)
    if isinstance(det, int):
        det = MPoly.const(det, rest)
    return det


def resultant(f: MPoly, g: MPoly, var: str, method: str = "bareiss", jobs: int = 1) -> MPoly:
    """``Res_var(f, g)`` as an MPoly over the remaining variables."""
    f._check(g)
    fc, gc = mp_coeffs_in(f, var), mp_coeffs_in(g, var)
    if len(fc) < 2 or len(gc) < 2:
        raise DegreeZero(f"both inputs must have positive degree in {var}")
    rest = fc[0].vars
    matrix = sylvester_matrix(fc, gc)
    if method == "bareiss":
        return _bareiss_mpoly(matrix, rest)
    if method == "interpolate":
        return _det_interpolate(matrix, rest, jobs)
    raise ValueError(f"unknown method {method!r}")


def discriminant(f: MPoly, var: str, method: str = "bareiss", jobs: int = 1) -> MPoly:
    """``(-1)^(n(n-1)/2) Res_var(f, df/dvar) / lc_var(f)``."""
    coeffs = mp_coeffs_in(f, var)
    n = len(coeffs) - 1
    if n < 2:
        raise DegreeZero(f"discriminant needs degree >= 2 in {var}")
    res = resultant(f, f.diff(var), var, method=method, jobs=jobs)
    try:
        disc = mp_exact_div(res, coeffs[-1])
    except NotDivisible as exc:
        raise NotDivisible(None, "leading coefficient does not divide the resultant") from exc
    return -disc if (n * (n - 1) // 2) % 2 else disc


def up_resultant(f: UPoly, g: UPoly):
    """Resultant of two univariate polynomials over Q (exact scalar)."""
    if f.degree == DEG_ZERO or g.degree == DEG_ZERO or f.degree < 1 or g.degree < 1:
        raise DegreeZero("both inputs must have positive degree")
    a, fz = clear_denominators(f)
    b, gz = clear_denominators(g)
    det = bareiss_det(sylvester_matrix(list(fz.coeffs), list(gz.coeffs)))
    scale = Fraction(a) ** g.degree * Fraction(b) ** f.degree
    out = det / scale
    return out.numerator if out.denominator == 1 else out


def up_discriminant(f: UPoly):
    n = f.degree
    if n == DEG_ZERO or n < 2:
        raise DegreeZero("discriminant needs degree >= 2")
    out = as_rat(up_resultant(f, f.derivative())) / f.lc
    if (n * (n - 1) // 2) % 2:
        out = -out
    return out.numerator if out.denominator == 1 else out
