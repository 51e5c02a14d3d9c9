"""Closed-form index-divisor tests for f(x) = x^n + a x^(n-1) + b x + c.

Inside the scope n > 4, abc != 0, n^2 = a*k with gcd(a, k) = 1, the question
"does p divide [O_K : Z[theta]]?" is answered by looking at which of a, b, c
the prime p divides. The eight divisibility patterns are numbered

    1: p | a, b, c         5: p | b only
    2: p | a, b; p ∤ c     6: p ∤ abc
    3: p | b, c; p ∤ a     7: p | a, c; p ∤ b
    4: p | c only          8: p | a only

and each case reduces to a handful of residues (plus, in a few subcases, a
divisibility test against M mod p built by :mod:`quadindex.dedekind`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .arith import FactorBudget, PrimeFactorization, exact_div, factor, is_prime, sqrt_mod, valuation
from .dedekind import Verdict, factor_mod, index_divides, m_polynomial
from .errors import InternalInconsistency, InvalidArgument
from .fppoly import ModPoly, gcd, mod_inverse, reduce
from .zpoly import DISCRIMINANT_FORMULA_MAX_N, IntPoly, Quadrinomial, TheoremScope, check_scope, discriminant, expand

_PATTERNS = {
    (True, True, True): 1,
    (True, True, False): 2,
    (False, True, True): 3,
    (False, False, True): 4,
    (False, True, False): 5,
    (False, False, False): 6,
    (True, False, True): 7,
    (True, False, False): 8,
}

SUBCASES = ("2.i", "2.ii", "4.i", "4.ii", "5.i", "5.ii", "6.1.1", "6.1.2", "6.1.3", "6.2.1", "6.2.2")


@dataclass(frozen=True, order=True)
class CaseLabel:
    case: int
    subcase: str | None = None

    @property
    def pattern(self) -> str:
        """Which of a, b, c the prime divides, e.g. "ab" for p | a, p | b, p ∤ c."""
        for (da, db, dc), num in _PATTERNS.items():
            if num == self.case:
                return "".join(s for s, d in zip("abc", (da, db, dc)) if d)
        raise ValueError(self.case)

    def __str__(self) -> str:
        return self.subcase or str(self.case)


@dataclass(frozen=True)
class CaseVerdict:
    p: int
    label: CaseLabel | None
    verdict: Verdict
    source: str
    witness: dict = field(default_factory=dict, compare=True, hash=False)


class Monogenicity(str, enum.Enum):
    MONOGENIC = "true"
    NOT_MONOGENIC = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MonogenicityReport:
    q: Quadrinomial
    scope: TheoremScope
    D: int
    factorization: PrimeFactorization
    per_prime: tuple[CaseVerdict, ...]
    verdict: Monogenicity
    index: int | None = None


def _high(g: ModPoly | IntPoly) -> list[int]:
    return g.to_high()


def case_of(q: Quadrinomial, p: int) -> CaseLabel:
    """The divisibility pattern of (a, b, c) at p, refined to its subcase."""
    pa, pb, pc = q.a % p == 0, q.b % p == 0, q.c % p == 0
    case = _PATTERNS[(pa, pb, pc)]
    sub = None
    if case == 2:
        sub = "2.i" if q.b % (p * p) == 0 else "2.ii"
    elif case == 4:
        sub = "4.i" if (q.n - 1) % p == 0 else "4.ii"
    elif case == 5:
        sub = "5.i" if q.n % p == 0 else "5.ii"
    elif case == 6:
        if p == 2:
            sub = "6.2.1" if q.n % 2 == 0 else "6.2.2"
        elif (q.n - 1) % p == 0:
            sub = "6.1.1"
        elif q.n % p == 0:
            sub = "6.1.2"
        else:
            sub = "6.1.3"
    return CaseLabel(case, sub)


def all_coeffs_divisible_case(coeffs, p: int) -> Verdict:
    """Monic f with p dividing every non-leading coefficient (f = x^n mod p).

    ``coeffs`` is lowest degree first. p divides the index iff p^2 | f(0).
    """
    coeffs = list(coeffs)
    if len(coeffs) < 3 or coeffs[-1] != 1:
        raise InvalidArgument("needs a monic polynomial of degree >= 2")
    if any(c % p for c in coeffs[:-1]):
        raise InvalidArgument(f"{p} does not divide every lower coefficient")
    return Verdict.DIVIDES if coeffs[0] % (p * p) == 0 else Verdict.DOES_NOT_DIVIDE


def _m_bar(q: Quadrinomial, p: int, seed: int):
    f = expand(q)
    fact = factor_mod(f, p, seed)
    m = m_polynomial(f, p, fact)
    return reduce(f, p), reduce(m, p)


def _root_divides(mbar: ModPoly, root: int) -> bool:
    return mbar(root) == 0


def _repeated_common_with_m(fbar: ModPoly, quad: ModPoly, mbar: ModPoly) -> ModPoly:
    """gcd of M mod p with the part of ``quad`` made of repeated roots of f mod p."""
    rep = gcd(fbar, fbar.derivative())
    return gcd(gcd(quad, rep), mbar)


def _verdict(divides: bool) -> Verdict:
    return Verdict.DIVIDES if divides else Verdict.DOES_NOT_DIVIDE


def _check_quadratic_scalars(p: int, quad: ModPoly, inseparable: bool, is_double_root) -> bool | None:
    """Cross-check separability against the closed-form scalar at the quadratic's roots.

    Only possible when the roots lie in F_p; returns None otherwise.
    """
    c0, c1 = quad.coeffs[0] if quad.coeffs else 0, quad.coeffs[1] if len(quad.coeffs) > 1 else 0
    disc = (c1 * c1 - 4 * c0) % p
    s = sqrt_mod(disc, p)
    if s is None:
        return None
    half = mod_inverse(2, p)
    roots = {(-c1 + s) * half % p, (-c1 - s) * half % p}
    hit = any(is_double_root(z) for z in roots)
    if hit != inseparable:
        raise InternalInconsistency(
            f"closed-form separability scalar disagrees with gcd(f, f') at p={p}")
    return hit


def classify_prime(q: Quadrinomial, p: int, seed: int = 0) -> CaseVerdict:
    """Decide p | [O_K : Z[theta]] from the closed-form case conditions."""
    if p < 2 or not is_prime(p):
        raise InvalidArgument(f"{p} is not prime")
    scope = check_scope(q)
    if not scope.applicable:
        return CaseVerdict(p, None, Verdict.INAPPLICABLE, "scope",
                           {"reason": scope.failure_reason.value})
    n, a, b, c = q.n, q.a, q.b, q.c
    label = case_of(q, p)
    w: dict = {}
    pp = p * p

    if label.case == 1:
        verdict = all_coeffs_divisible_case(expand(q).coeffs, p)
        w["c_mod_p2"] = c % pp

    elif label.case == 2:
        r = valuation(n, p)
        if r == 0:
            raise InternalInconsistency(f"p={p} divides a but not n inside scope")
        b1 = exact_div(b, p, "b/p")
        c1 = exact_div((c + pow(-c, p**r, pp)) % pp, p, "c1") % p
        scalar = (pow(-c1, n, p) + c * pow(b1, n, p)) % p
        if b1 % p == 0:
            ok = c1 != 0
        else:
            ok = scalar != 0
        verdict = _verdict(not ok)
        w.update(r=r, b1_mod_p=b1 % p, c1_mod_p=c1, scalar=scalar)

    elif label.case == 3:
        # f = x^(n-1) (x + a) mod p and x + a is a simple factor: only x matters
        verdict = _verdict(c % pp == 0)
        w.update(c_mod_p2=c % pp, ab_minus_c_mod_p2=(a * b - c) % pp)

    elif label.case == 4:
        if label.subcase == "4.i":
            verdict = Verdict.DOES_NOT_DIVIDE
        else:
            scalar = (a * pow(-a * (n - 2), n - 2, p) + b * pow(n - 1, n - 1, p)) % p
            w["scalar"] = scalar
            if scalar:
                verdict = Verdict.DOES_NOT_DIVIDE
            else:
                n1 = -mod_inverse(n - 1, p) * a * (n - 2) % p
                _, mbar = _m_bar(q, p, seed)
                hit = _root_divides(mbar, n1)
                verdict = _verdict(hit)
                w.update(root=n1, m_bar=_high(mbar), root_divides_m=hit)

    elif label.case == 5:
        if label.subcase == "5.i":
            verdict = Verdict.DOES_NOT_DIVIDE
        else:
            scalar = (c * pow(n, n, p) + a * pow(-a * (n - 1), n - 1, p)) % p
            w["scalar"] = scalar
            if scalar:
                verdict = Verdict.DOES_NOT_DIVIDE
            else:
                n2 = -mod_inverse(n, p) * a * (n - 1) % p
                _, mbar = _m_bar(q, p, seed)
                hit = _root_divides(mbar, n2)
                verdict = _verdict(hit)
                w.update(root=n2, m_bar=_high(mbar), root_divides_m=hit)

    elif label.case == 6:
        verdict = _case_six(q, p, label, seed, w)

    else:  # cases 7 and 8: p | a, p ∤ b
        verdict = Verdict.DOES_NOT_DIVIDE
        w["separable"] = True

    excl = exclusion_condition(q, p)
    if excl is not None:
        w["exclusion"] = excl
        if verdict is not Verdict.DOES_NOT_DIVIDE:
            raise InternalInconsistency(f"excluded prime {p} classified as an index divisor")
    source = "lemma" if label.case >= 7 else "theorem"
    return CaseVerdict(p, label, verdict, source, w)


def _case_six(q: Quadrinomial, p: int, label: CaseLabel, seed: int, w: dict) -> Verdict:
    n, a, b, c = q.n, q.a, q.b, q.c
    sub = label.subcase

    if sub == "6.2.1":
        _, mbar = _m_bar(q, p, seed)
        hit = mbar(1) == 0
        w.update(m_bar=_high(mbar), x_plus_1_divides_m=hit)
        return _verdict(hit)

    if sub == "6.2.2":
        if b % 2 == 0 or (a + c) % 2:
            raise InternalInconsistency("parity precondition failed for p = 2, n odd")
        u, v = (b + 1) // 2, (a + c) // 2
        exactly_one_even = (u % 2 == 0) != (v % 2 == 0)
        w.update(b_plus_1_half_mod_2=u % 2, a_plus_c_half_mod_2=v % 2)
        return _verdict(not exactly_one_even)

    if sub == "6.1.1":
        w["ab_minus_c_mod_p"] = (a * b - c) % p
        if (a * b - c) % p:
            return Verdict.DOES_NOT_DIVIDE
        # f = (x + a)(x^m0 + b)^(p^r0) mod p; only the second factor repeats
        r0 = valuation(n - 1, p)
        e = p**r0
        pp = p * p
        v1 = exact_div((b + pow(-b, e, pp)) % pp, p, "v1") % p
        v0 = exact_div((c + a * pow(-b, e, pp)) % pp, p, "v0") % p
        scalar = (pow(-v0, n - 1, p) + b * pow(v1, n - 1, p)) % p
        if v1 == 0:
            ok = v0 != 0
        else:
            ok = scalar != 0
        w.update(r0=r0, v0=v0, v1=v1, scalar=scalar)
        return _verdict(not ok)

    fbar, mbar = _m_bar(q, p, seed)
    inseparable = gcd(fbar, fbar.derivative()).degree > 0
    w["separable"] = not inseparable
    if sub == "6.1.2":
        quad = ModPoly.from_high(p, [1, 2 * a, a * c * mod_inverse(b, p)])

        def is_double(z):
            # f' = -a x^(n-2) + b when p | n
            return (a * pow(z, n - 2, p) - b) % p == 0
    else:
        wi = mod_inverse(b - n * b, p)
        quad = ModPoly.from_high(p, [1, wi * (a * b - (n - 1) * a * b - c * n), -wi * (n - 1) * a * c])

        def is_double(z):
            # with l = 2z this is 2^(n-1) f'(z)
            l1 = 2 * z % p
            return (pow(l1, n - 2, p) * (n * l1 + 2 * a * (n - 1)) + pow(2, n - 1, p) * b) % p == 0

    w["quadratic"] = _high(quad)
    scalar_hit = _check_quadratic_scalars(p, quad, inseparable, is_double)
    if scalar_hit is not None:
        w["scalar_root_in_field"] = True
    if not inseparable:
        return Verdict.DOES_NOT_DIVIDE
    common = _repeated_common_with_m(fbar, quad, mbar)
    w.update(m_bar=_high(mbar), common_degree=common.degree)
    return _verdict(common.degree > 0)


# -- exclusions, binomial sum, discriminant-of-field test ---------------------


class Exclusion(str, enum.Enum):
    A_NOT_B = "p_divides_a_not_b"
    B_AND_N = "p_divides_b_and_n"
    C_AND_N_MINUS_2 = "p_divides_c_and_n_minus_2"


def exclusion_condition(q: Quadrinomial, p: int) -> Exclusion | None:
    """Cheap sufficient conditions for p ∤ D (hence p ∤ index); no discriminant needed.

    For p = 2 only the p | a, p ∤ b pattern applies.
    """
    n, a, b, c = q.n, q.a, q.b, q.c
    pa, pb, pc = a % p == 0, b % p == 0, c % p == 0
    if pa and not pb:
        return Exclusion.A_NOT_B
    if p == 2:
        return None
    if not pa and not pc and pb and n % p == 0:
        return Exclusion.B_AND_N
    if not pa and not pb and pc and (n - 2) % p == 0:
        return Exclusion.C_AND_N_MINUS_2
    return None


def excluded_prime(q: Quadrinomial, p: int) -> bool:
    return exclusion_condition(q, p) is not None


def binomial_sum(n: int) -> int:
    """Sum over i of C(n-3, 2i) (n-2)/(n-2-2i), each term an exact integer."""
    if n < 5:
        raise InvalidArgument("binomial_sum needs n >= 5")
    total = 0
    for i in range((n - 3) // 2 + 1):
        total += exact_div(math.comb(n - 3, 2 * i) * (n - 2), n - 2 - 2 * i, f"binomial term i={i}")
    return total


def dK_divides(q: Quadrinomial, p: int) -> bool:
    """Whether p divides the field discriminant when p ∤ ab, p | c, p | n-1.

    Here p never divides the index, so this is p | D: for even n the sum must
    be -1 mod p, for odd n it must vanish mod p.
    """
    if p < 3 or not is_prime(p):
        raise InvalidArgument(f"{p} is not an odd prime")
    if not check_scope(q).applicable:
        raise InvalidArgument("quadrinomial outside theorem scope")
    if q.a % p == 0 or q.b % p == 0 or q.c % p or (q.n - 1) % p:
        raise InvalidArgument("needs p ∤ a, p ∤ b, p | c and p | n - 1")
    s = binomial_sum(q.n) % p
    return s == (p - 1 if q.n % 2 == 0 else 0)


# -- monogenicity -------------------------------------------------------------


def is_monogenic(q: Quadrinomial, budget: FactorBudget | None = None, seed: int = 0,
                 cross_check: bool = True, max_n: int = DISCRIMINANT_FORMULA_MAX_N) -> MonogenicityReport:
    """Classify every prime factor of D and aggregate.

    With ``cross_check`` each closed-form verdict is compared against the
    general Dedekind computation; a disagreement raises
    :class:`InternalInconsistency`.
    """
    scope = check_scope(q)
    if not scope.applicable:
        raise InvalidArgument(f"quadrinomial outside theorem scope: {scope.failure_reason.value}")
    D = discriminant(q, max_n=max_n)
    if D == 0:
        return MonogenicityReport(q, scope, 0, PrimeFactorization(), (), Monogenicity.UNKNOWN)
    fac = factor(D, budget)
    f = expand(q)
    verdicts = []
    for p, e in fac.factors:
        cv = classify_prime(q, p, seed)
        if e < 2 and cv.verdict is Verdict.DIVIDES:
            raise InternalInconsistency(f"p={p} divides D once but was classified as an index divisor")
        if cross_check:
            oracle = index_divides(f, p, seed).verdict
            if oracle is not cv.verdict:
                raise InternalInconsistency(
                    f"closed form says {cv.verdict.value} but Dedekind says {oracle.value} for {q} at p={p}")
        verdicts.append(cv)

    dividing = [cv.p for cv in verdicts if cv.verdict is Verdict.DIVIDES]
    index = None
    if dividing:
        verdict = Monogenicity.NOT_MONOGENIC
        if fac.complete and all(fac.exponent(p) <= 3 for p in dividing):
            index = math.prod(dividing)
    elif fac.complete or _squarefree_cofactor(fac.cofactor):
        verdict = Monogenicity.MONOGENIC
        index = 1
    else:
        verdict = Monogenicity.UNKNOWN
    return MonogenicityReport(q, scope, D, fac, tuple(verdicts), verdict, index)


def _squarefree_cofactor(m: int) -> bool:
    # An unsplit cofactor can still be harmless if it is provably squarefree,
    # which we only know when it is 1.
    return m == 1
