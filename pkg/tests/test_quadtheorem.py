import math
import random

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import binomial_sum_rational
from quadindex import quadtheorem
from quadindex.arith import FactorBudget, factor, is_prime
from quadindex.dedekind import Verdict, index_divides
from quadindex.errors import InternalInconsistency, InvalidArgument
from quadindex.fppoly import gcd, reduce, resultant
from quadindex.quadtheorem import (
    CaseLabel,
    Exclusion,
    Monogenicity,
    all_coeffs_divisible_case,
    binomial_sum,
    case_of,
    classify_prime,
    dK_divides,
    exclusion_condition,
    excluded_prime,
    is_monogenic,
)
from quadindex.zpoly import IntPoly, Quadrinomial, discriminant, expand

D, N = Verdict.DIVIDES, Verdict.DOES_NOT_DIVIDE
EX1, EX2, EX3 = Quadrinomial(6, 4, 1, 3), Quadrinomial(5, 1, 3, 6), Quadrinomial(6, 9, 3, 18)
EX4 = Quadrinomial(30030, 44100, 143, 7507)


def _unitary_divisors(m):
    out = [1]
    for p, e in factor(m).factors:
        out += [d * p**e for d in out]
    return out


def _p_divides_disc(q, p):
    f = reduce(expand(q), p)
    return resultant(f, f.derivative()) == 0


# -- labels ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "q,p,label,pattern",
    [
        (EX3, 3, CaseLabel(1), "abc"),
        (EX1, 3, CaseLabel(4, "4.ii"), "c"),
        (EX2, 5, CaseLabel(6, "6.1.2"), ""),
        (EX2, 3, CaseLabel(3), "bc"),
        (Quadrinomial(6, 4, 2, 1), 2, CaseLabel(2, "2.ii"), "ab"),
        (Quadrinomial(6, 4, 4, 1), 2, CaseLabel(2, "2.i"), "ab"),
        (Quadrinomial(5, 1, 3, 2), 3, CaseLabel(5, "5.ii"), "b"),
        (EX1, 2, CaseLabel(8), "a"),
        (Quadrinomial(6, 4, 1, 2), 2, CaseLabel(7), "ac"),
        (Quadrinomial(7, 1, 1, 1), 2, CaseLabel(6, "6.2.2"), ""),
        (Quadrinomial(7, 1, 1, 1), 3, CaseLabel(6, "6.1.1"), ""),
    ],
)
def test_case_of(q, p, label, pattern):
    got = case_of(q, p)
    assert got == label and got.pattern == pattern


def test_every_pattern_has_one_case():
    seen = set()
    for a, b, c in [(x, y, z) for x in (3, 1) for y in (3, 1) for z in (3, 1)]:
        seen.add(case_of(Quadrinomial(9, a, b, c), 3).case)
    assert seen == set(range(1, 9))


# -- worked examples ------------------------------------------------------------


def test_example_one_prime_three():
    cv = classify_prime(EX1, 3)
    assert cv.verdict is D and cv.label == CaseLabel(4, "4.ii") and cv.source == "theorem"
    assert cv.witness["scalar"] == 0
    assert cv.witness["root"] == 1  # x - 1 = x + 2 over F_3
    assert cv.witness["m_bar"] == [1, 0, 2, 2, 1]
    assert (4 * (-16) ** 4 + 5**5) % 3 == 0


def test_example_one_large_prime():
    assert classify_prime(EX1, 7561).verdict is N


def test_example_two_prime_three():
    cv = classify_prime(EX2, 3)
    assert cv.verdict is N and cv.label.case == 3
    assert cv.witness["c_mod_p2"] == 6 and cv.witness["ab_minus_c_mod_p2"] == 6


def test_example_three_prime_three():
    cv = classify_prime(EX3, 3)
    assert cv.verdict is D and cv.label.case == 1


def test_inapplicable_is_a_verdict_not_an_exception():
    cv = classify_prime(Quadrinomial(6, 5, 1, 3), 3)
    assert cv.verdict is Verdict.INAPPLICABLE and cv.label is None
    assert cv.witness["reason"] == "a_not_dividing_n_squared"


def test_classify_rejects_composite():
    with pytest.raises(InvalidArgument):
        classify_prime(EX1, 9)


# -- structural properties --------------------------------------------------------


def test_all_coeffs_divisible_matches_dedekind():
    rng = random.Random(1)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        n = rng.randint(2, 8)
        coeffs = [p * rng.randint(-6, 6) for _ in range(n)] + [1]
        if coeffs[0] == 0:
            continue
        want = index_divides(IntPoly(coeffs), p).verdict
        assert all_coeffs_divisible_case(coeffs, p) is want


def test_all_coeffs_divisible_preconditions():
    with pytest.raises(InvalidArgument):
        all_coeffs_divisible_case([3, 1, 1], 3)


def _scope_space(max_n=9, bound=10):
    for n in range(5, max_n + 1):
        for a in sorted(_unitary_divisors(n * n)):
            if a > 25:
                continue
            for b in range(-bound, bound + 1):
                for c in range(-bound, bound + 1):
                    if b and c:
                        yield Quadrinomial(n, a, b, c)


def test_case_four_and_five_scalar_tracks_separability():
    checked = 0
    for q in _scope_space(8, 8):
        for p in (3, 5, 7):
            lab = case_of(q, p)
            if lab.subcase not in ("4.ii", "5.ii"):
                continue
            f = reduce(expand(q), p)
            separable = gcd(f, f.derivative()).degree == 0
            cv = classify_prime(q, p)
            assert (cv.witness["scalar"] != 0) == separable, (q, p)
            checked += 1
    assert checked > 100


def test_index_divisor_implies_square_in_disc():
    for q in list(_scope_space(7, 6))[::3]:
        d = discriminant(q)
        if d == 0:
            continue
        for p in (2, 3, 5, 7):
            if classify_prime(q, p).verdict is D:
                assert d % (p * p) == 0


_n_and_a = st.integers(5, 16).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(_unitary_divisors(n * n))))


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(_n_and_a, st.integers(-300, 300), st.integers(-300, 300),
       st.sampled_from([p for p in range(2, 60) if is_prime(p)]))
def test_oracle_equivalence_wide_range(na, b, c, p):
    n, a = na
    assume(b and c)
    q = Quadrinomial(n, a, b, c)
    assert classify_prime(q, p).verdict is index_divides(expand(q), p).verdict


# -- exclusions --------------------------------------------------------------------


@pytest.mark.parametrize(
    "p,cond",
    [(2, Exclusion.A_NOT_B), (3, Exclusion.A_NOT_B), (5, Exclusion.A_NOT_B), (7, Exclusion.A_NOT_B),
     (11, Exclusion.B_AND_N), (13, Exclusion.B_AND_N), (7507, Exclusion.C_AND_N_MINUS_2), (17, None)],
)
def test_large_degree_exclusions(p, cond):
    assert exclusion_condition(EX4, p) == cond
    assert excluded_prime(EX4, p) == (cond is not None)


def test_exclusion_arithmetic_facts():
    assert 30028 == 4 * 7507 and is_prime(7507)
    assert 143 == 11 * 13 and 30030 % 143 == 0


def test_excluded_primes_do_not_divide_disc():
    hits = 0
    for q in list(_scope_space(9, 10))[::5]:
        for p in (2, 3, 5, 7, 11):
            if excluded_prime(q, p):
                hits += 1
                assert not _p_divides_disc(q, p), (q, p)
                assert classify_prime(q, p).verdict is N
    assert hits > 100


def test_p_two_uses_only_the_a_not_b_rule():
    q = Quadrinomial(8, 1, 2, 1)  # 2 | b, 2 | n, but p = 2
    assert exclusion_condition(q, 2) is None


# -- binomial sum and field discriminant ---------------------------------------------


def test_binomial_sum_values():
    assert binomial_sum(5) == 4
    assert binomial_sum(6) == 7
    for n in range(5, 60):
        assert binomial_sum(n) == binomial_sum_rational(n)
        assert binomial_sum(n) == 2 ** (n - 3) - (1 if n % 2 == 0 else 0)
    with pytest.raises(InvalidArgument):
        binomial_sum(4)


def test_dK_divides_small_cases():
    assert dK_divides(Quadrinomial(6, 4, 1, 5), 5) is False
    assert dK_divides(Quadrinomial(8, 1, 1, 7), 7) is (binomial_sum(8) % 7 == 6)


def test_dK_divides_hypotheses():
    with pytest.raises(InvalidArgument):
        dK_divides(Quadrinomial(6, 4, 1, 5), 2)
    with pytest.raises(InvalidArgument):
        dK_divides(Quadrinomial(6, 4, 5, 5), 5)  # p | b
    with pytest.raises(InvalidArgument):
        dK_divides(Quadrinomial(6, 4, 1, 3), 5)  # p ∤ c
    with pytest.raises(InvalidArgument):
        dK_divides(Quadrinomial(6, 5, 1, 5), 5)  # out of scope


def test_dK_divides_matches_disc_mod_p():
    checked = 0
    for n in range(5, 13):
        for p in (q for q, _ in factor(n - 1).factors if q > 2):
            for a in _unitary_divisors(n * n):
                if a % p == 0 or a > 50:
                    continue
                for b in (1, 2, -3, 4):
                    for c in (p, -p, 2 * p, p * p):
                        if b % p == 0:
                            continue
                        q = Quadrinomial(n, a, b, c)
                        assert dK_divides(q, p) == _p_divides_disc(q, p), (q, p)
                        checked += 1
    assert checked >= 50


# -- monogenity ------------------------------------------------------------------------


def test_monogenity_examples():
    r1 = is_monogenic(EX1)
    assert r1.verdict is Monogenicity.NOT_MONOGENIC and r1.index == 3
    assert r1.factorization.factors == ((3, 2), (7561, 1), (15269, 1))
    r2 = is_monogenic(EX2)
    assert r2.verdict is Monogenicity.MONOGENIC and r2.index == 1
    assert all(cv.verdict is N for cv in r2.per_prime)
    r3 = is_monogenic(EX3)
    assert r3.verdict is Monogenicity.NOT_MONOGENIC
    assert [cv.p for cv in r3.per_prime] == sorted(cv.p for cv in r3.per_prime)


def test_monogenity_out_of_scope():
    with pytest.raises(InvalidArgument):
        is_monogenic(Quadrinomial(6, 5, 1, 3))


def test_unknown_when_cofactor_unsplit():
    tiny = FactorBudget(trial_bound=2, rho_iterations=0)
    found = 0
    for q in _scope_space(6, 6):
        d = discriminant(q)
        if d == 0:
            continue
        rep = is_monogenic(q, tiny)
        if not rep.factorization.complete and not any(cv.verdict is D for cv in rep.per_prime):
            assert rep.verdict is Monogenicity.UNKNOWN and rep.index is None
            found += 1
    assert found > 0


def test_zero_discriminant_is_unknown():
    # x^5 + x^4 - x - 1 = (x - 1)(x + 1)^2 (x^2 + 1)
    rep = is_monogenic(Quadrinomial(5, 1, -1, -1))
    assert rep.D == 0 and rep.verdict is Monogenicity.UNKNOWN


def test_cross_check_catches_a_wrong_verdict(monkeypatch):
    real = quadtheorem.classify_prime

    def flipped(q, p, seed=0):
        cv = real(q, p, seed)
        if p == 3:
            return type(cv)(cv.p, cv.label, N if cv.verdict is D else D, cv.source, cv.witness)
        return cv

    monkeypatch.setattr(quadtheorem, "classify_prime", flipped)
    with pytest.raises(InternalInconsistency):
        is_monogenic(EX1)


def test_index_from_full_factorisation():
    # whenever the index is reported it squares into D
    for q in list(_scope_space(6, 6))[::7]:
        if discriminant(q) == 0:
            continue
        rep = is_monogenic(q)
        if rep.index is not None:
            assert rep.D % rep.index**2 == 0
            assert rep.index == math.prod(cv.p for cv in rep.per_prime if cv.verdict is D)
