"""Best-effort irreducibility certificates for monic integer polynomials.

Nothing here factors over Z. A certificate is one of:

* f is irreducible modulo some prime p < 100;
* Eisenstein's criterion holds at some prime;
* the factor-degree patterns of f modulo several primes leave no room for a
  proper factor (any factor over Z has degree a sub-sum of every pattern).

A rational root, or a zero discriminant, refutes irreducibility.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import factor
from .fppoly import factor_degrees, is_irreducible, reduce
from .zpoly import IntPoly, derivative, resultant

_SMALL_PRIMES = [p for p in range(2, 100) if all(p % q for q in range(2, int(p**0.5) + 1))]


class Irreducibility(str, enum.Enum):
    CERTIFIED = "certified"
    ASSUMED = "assumed"
    REFUTED = "refuted"


@dataclass(frozen=True)
class IrreducibilityReport:
    status: Irreducibility
    reason: str


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _eisenstein_prime(f: IntPoly) -> int | None:
    c0 = f.coeffs[0]
    if c0 == 0:
        return None
    rest = f.coeffs[:-1]
    g = 0
    for c in rest:
        g = math.gcd(g, c)
    if g in (0, 1):
        return None
    for p, _ in factor(g).factors:
        if c0 % (p * p):
            return p
    return None


def _rational_root(f: IntPoly) -> int | None:
    # monic, so rational roots are integer divisors of the constant term
    c0 = f.coeffs[0]
    if c0 == 0:
        return 0
    if abs(c0) > 10**12:
        return None
    fac = factor(c0)
    divisors = [1]
    for p, e in fac.factors:
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    for d in divisors:
        for r in (d, -d):
            if f(r) == 0:
                return r
    return None


def certify(f: IntPoly, seed: int = 0) -> IrreducibilityReport:
    if not f.is_monic() or f.degree < 1:
        return IrreducibilityReport(Irreducibility.ASSUMED, "not a monic polynomial of positive degree")
    n = f.degree
    if n == 1:
        return IrreducibilityReport(Irreducibility.CERTIFIED, "linear")
    root = _rational_root(f)
    if root is not None:
        return IrreducibilityReport(Irreducibility.REFUTED, f"rational root {root}")
    if n <= 3:
        return IrreducibilityReport(Irreducibility.CERTIFIED, "degree <= 3 without rational roots")
    if n <= 60 and resultant(f, derivative(f)) == 0:
        return IrreducibilityReport(Irreducibility.REFUTED, "repeated root (zero discriminant)")
    p = _eisenstein_prime(f)
    if p is not None:
        return IrreducibilityReport(Irreducibility.CERTIFIED, f"Eisenstein at {p}")
    possible = set(range(1, n))
    for p in _SMALL_PRIMES:
        fbar = reduce(f, p)
        if is_irreducible(fbar):
            return IrreducibilityReport(Irreducibility.CERTIFIED, f"irreducible mod {p}")
        possible &= _subset_sums(factor_degrees(fbar, seed))
        if not possible:
            return IrreducibilityReport(Irreducibility.CERTIFIED, f"factor degree patterns mod primes <= {p}")
    return IrreducibilityReport(Irreducibility.ASSUMED, "no certificate found")
