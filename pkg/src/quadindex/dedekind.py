"""The Dedekind criterion for a monic integer polynomial at a prime p.

Factor f mod p as prod(g_i^e_i), lift each g_i to Z[x], and form
M = (f - prod(G_i^e_i)) / p. Then p divides the index [O_K : Z[theta]] iff
some g_i with e_i >= 2 divides M mod p.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InternalInconsistency, InvalidArgument
from .fppoly import ModFactorization, ModPoly, check_factorization, factorize, reduce
from .zpoly import IntPoly


class Verdict(str, enum.Enum):
    DIVIDES = "divides"
    DOES_NOT_DIVIDE = "does_not_divide"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class RepeatedFactor:
    """A factor of f mod p with exponent >= 2 and what it leaves of M mod p."""

    factor: ModPoly
    exponent: int
    remainder: ModPoly  # M mod p reduced modulo ``factor``

    @property
    def divides_m(self) -> bool:
        return self.remainder.is_zero()


@dataclass(frozen=True)
class DedekindCertificate:
    p: int
    verdict: Verdict
    factorization: ModFactorization | None
    m_poly: IntPoly | None
    m_bar: ModPoly | None
    repeated: tuple[RepeatedFactor, ...] = ()
    shortcut: str | None = None

    @property
    def witnesses(self) -> list[RepeatedFactor]:
        """Repeated factors dividing M mod p (non-empty iff the verdict is DIVIDES)."""
        return [r for r in self.repeated if r.divides_m]


@dataclass(frozen=True)
class SplittingType:
    """(residue degree, ramification index) for each prime above p."""

    parts: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def total(self) -> int:
        return sum(f * e for f, e in self.parts)


def m_polynomial(f: IntPoly, p: int, fact: ModFactorization, symmetric_lift: bool = False) -> IntPoly:
    """(f - prod(G_i^e_i)) / p for monic lifts G_i of the factors of f mod p."""
    if fact.p != p:
        raise InvalidArgument("factorisation modulus does not match p")
    prod = IntPoly((1,))
    for g, e in fact.factors:
        prod = prod * g.lift(symmetric_lift) ** e
    diff = f - prod
    if any(c % p for c in diff.coeffs):
        raise InternalInconsistency(f"f - prod(lifts) is not divisible by {p}")
    return IntPoly(c // p for c in diff.coeffs)


def factor_mod(f: IntPoly, p: int, seed: int = 0) -> ModFactorization:
    fbar = reduce(f, p)
    fact = factorize(fbar, seed)
    check_factorization(fbar, fact)
    return fact


def index_divides(f: IntPoly, p: int, seed: int = 0, disc: int | None = None,
                  symmetric_lift: bool = False) -> DedekindCertificate:
    """Decide whether p divides [O_K : Z[theta]] for theta a root of monic f.

    Irreducibility of f over Q is the caller's responsibility; the
    computation itself does not need it. When ``disc`` is supplied and p^2
    does not divide it, the answer is read off without factoring.
    """
    if not f.is_monic():
        raise InvalidArgument("Dedekind criterion needs a monic polynomial")
    if f.degree < 1:
        raise InvalidArgument("Dedekind criterion needs positive degree")
    if disc is not None and disc != 0 and disc % (p * p):
        return DedekindCertificate(p, Verdict.DOES_NOT_DIVIDE, None, None, None,
                                   shortcut="p^2 does not divide the discriminant")
    fact = factor_mod(f, p, seed)
    m = m_polynomial(f, p, fact, symmetric_lift)
    mbar = reduce(m, p)
    repeated = tuple(RepeatedFactor(g, e, mbar % g) for g, e in fact.repeated)
    verdict = Verdict.DIVIDES if any(r.divides_m for r in repeated) else Verdict.DOES_NOT_DIVIDE
    return DedekindCertificate(p, verdict, fact, m, mbar, repeated)


def splitting_type(f: IntPoly, p: int, seed: int = 0) -> SplittingType | None:
    """How p splits in Z[theta]'s fraction field, or None when p divides the index."""
    cert = index_divides(f, p, seed)
    if cert.verdict is not Verdict.DOES_NOT_DIVIDE:
        return None
    parts = tuple(sorted((g.degree, e) for g, e in cert.factorization.factors))
    st = SplittingType(parts)
    if st.total() != f.degree:
        raise InternalInconsistency("splitting type does not account for the degree")
    return st
