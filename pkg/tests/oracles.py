"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f_high: list[int], g_high: list[int]) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix (leading coefficients first)."""
    m, n = len(f_high) - 1, len(g_high) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + f_high + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + g_high + [0] * (size - n - 1 - i))
    return bareiss_det(rows)


def quad_high(n, a, b, c) -> list[int]:
    h = [0] * (n + 1)
    h[0], h[1] = 1, a
    h[n - 1] += b
    h[n] += c
    return h


def deriv_high(h: list[int]) -> list[int]:
    n = len(h) - 1
    return [c * (n - i) for i, c in enumerate(h[:-1])]


def discriminant_by_sylvester(n, a, b, c) -> int:
    h = quad_high(n, a, b, c)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * sylvester_resultant(h, deriv_high(h))


def binomial_sum_rational(n: int) -> Fraction:
    from math import comb

    return sum(Fraction(comb(n - 3, 2 * i) * (n - 2), n - 2 - 2 * i) for i in range((n - 3) // 2 + 1))


def all_monic(p: int, d: int):
    """Every monic polynomial of degree d over F_p, low-to-high coefficient tuples."""
    for tail in itertools.product(range(p), repeat=d):
        yield tuple(tail) + (1,)


def mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def brute_irreducible(coeffs, p) -> bool:
    """Irreducibility over F_p by trying every monic divisor of degree <= d/2."""
    coeffs = tuple(c % p for c in coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    d = len(coeffs) - 1
    if d < 1:
        return False
    inv = pow(coeffs[-1], -1, p)
    f = tuple(c * inv % p for c in coeffs)
    for k in range(1, d // 2 + 1):
        for g in all_monic(p, k):
            if _divides(g, f, p):
                return False
    return True


def _divides(g, f, p) -> bool:
    r = list(f)
    dg = len(g) - 1
    while len(r) - 1 >= dg:
        lead = r[-1]
        shift = len(r) - 1 - dg
        for i, c in enumerate(g):
            r[i + shift] = (r[i + shift] - lead * c) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return not r


def roots_mod(coeffs, p) -> list[int]:
    return [x for x in range(p) if sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0]
