"""The degree-10 polynomials and the quintic ansatz."""

from __future__ import annotations

from ..mpoly import MPoly


def build_Qpq(vars=("p", "q", "t")) -> MPoly:
    """The even monic degree-10 polynomial in t with coefficients in Z[p, q]."""
    p, q, t = (MPoly.gen(v, vars) for v in vars[:3])
    return (
        t**10
        + (2 * q**2 + p**2) * (3 * q**2 - 2 * p**2) * t**8
        + (q**8 + 10 * p**2 * q**6 + 4 * p**4 * q**4 - 14 * p**6 * q**2 + p**8) * t**6
        - p**2 * q**2 * (q**8 - 14 * p**2 * q**6 + 4 * p**4 * q**4 + 10 * p**6 * q**2 + p**8) * t**4
        - p**6 * q**6 * (q**2 + 2 * p**2) * (-2 * q**2 + 3 * p**2) * t**2
        - p**10 * q**10
    )


def Qr_coefficients(r: MPoly) -> dict[int, MPoly]:
    """Coefficients of u^8, u^6, u^4, u^2, u^0 of the q = 1 normalization."""
    return {
        8: (2 + r**2) * (3 - 2 * r**2),
        6: 1 + 10 * r**2 + 4 * r**4 - 14 * r**6 + r**8,
        4: -(r**2) * (1 - 14 * r**2 + 4 * r**4 + 10 * r**6 + r**8),
        2: -(r**6) * (1 + 2 * r**2) * (-2 + 3 * r**2),
        0: -(r**10),
    }


def build_Qr(vars=("r", "u")) -> MPoly:
    r, u = MPoly.gen(vars[0], vars), MPoly.gen(vars[1], vars)
    out = u**10
    for k, c in Qr_coefficients(r).items():
        out = out + c * u**k
    return out


def quintic_ansatz(vars) -> MPoly:
    """R(u) = u^5 + a u^4 + b u^3 + c u^2 + d u + e over ``vars``."""
    u, a, b, c, d, e = (MPoly.gen(v, vars) for v in ("u", "a", "b", "c", "d", "e"))
    return u**5 + a * u**4 + b * u**3 + c * u**2 + d * u + e
