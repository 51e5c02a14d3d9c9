"""Integer kernels: modular powers, primality, factorisation, square roots mod p."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InternalInconsistency, InvalidArgument

# Deterministic Miller-Rabin witnesses: the first 13 primes are a proven base
# set for every n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
MR_RANDOM_ROUNDS = 64  # 4**-64 == 2**-128

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Return ``base**exp mod modulus`` in ``[0, modulus)``."""
    if modulus < 2:
        raise InvalidArgument(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise InvalidArgument("exponent must be non-negative")
    return pow(base, exp, modulus)


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """Divide, insisting the division is exact.

    Used wherever a divisibility is a theorem; failure is a bug.
    """
    q, r = divmod(num, den)
    if r:
        raise InternalInconsistency(f"{what}: {den} does not divide {num}")
    return q


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n."""
    if n == 0:
        raise InvalidArgument("valuation of 0 is undefined")
    if p < 2:
        raise InvalidArgument(f"bad prime {p}")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rng: random.Random | None = None) -> bool:
    """Miller-Rabin primality test.

    Deterministic below ``MR_DETERMINISTIC_LIMIT``. Above it, 64 random bases
    are drawn from ``rng`` (default: a generator seeded from ``n`` itself, so
    repeated calls agree); the error probability is below 2**-128.
    """
    if n < 0:
        raise InvalidArgument("is_prime expects n >= 0")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < MR_DETERMINISTIC_LIMIT:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES)
    if rng is None:
        rng = random.Random(f"mr:{n}")
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(MR_RANDOM_ROUNDS))


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of ``a`` modulo an odd prime ``p`` (Tonelli-Shanks).

    Returns the smaller of the two roots, or None for a non-residue.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InvalidArgument(f"sqrt_mod needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class FactorBudget:
    """Effort cap for :func:`factor`: trial-division bound and total rho steps."""

    trial_bound: int = 10_000
    rho_iterations: int = 2_000_000

    def __post_init__(self):
        if self.trial_bound < 2 or self.rho_iterations < 0:
            raise InvalidArgument("factor budget must be positive")


@dataclass(frozen=True)
class PrimeFactorization:
    """``|n| == prod(p**e) * cofactor``; ``cofactor == 1`` means complete."""

    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out


def _brent(n: int, c: int, budget: list[int]) -> int | None:
    """One Pollard-Brent run with increment ``c``; spends from ``budget[0]``."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(m, r - k)
            if budget[0] < steps:
                return None
            budget[0] -= steps
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _perfect_power(n: int) -> tuple[int, int] | None:
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r < 2:
            break
        if r**k == n:
            return r, k
    return None


def _iroot(n: int, k: int) -> int:
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def factor(n: int, budget: FactorBudget | None = None) -> PrimeFactorization:
    """Factor ``|n|`` by trial division then Pollard-Brent, within ``budget``.

    Composite parts that survive the budget are multiplied into ``cofactor``.
    """
    if n == 0:
        raise InvalidArgument("cannot factor 0")
    budget = budget or FactorBudget()
    n = abs(n)
    found: dict[int, int] = {}

    def add(p: int, e: int = 1):
        found[p] = found.get(p, 0) + e

    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
            add(p)
    # wheel over 6k +- 1
    d = 7
    step = 4
    while d <= budget.trial_bound and d * d <= n:
        while n % d == 0:
            n //= d
            add(d)
        d += step
        step = 6 - step
    if n > 1 and d * d > n:
        add(n)
        n = 1

    spent = [budget.rho_iterations]
    stack = [(n, 1)] if n > 1 else []
    leftover = 1
    while stack:
        m, mult = stack.pop()
        if is_prime(m):
            add(m, mult)
            continue
        pp = _perfect_power(m)
        if pp is not None:
            stack.append((pp[0], mult * pp[1]))
            continue
        divisor = None
        for c in range(1, 64):
            divisor = _brent(m, c, spent)
            if divisor is not None or spent[0] <= 0:
                break
        if divisor is None:
            leftover *= m**mult
            continue
        stack.append((divisor, mult))
        stack.append((m // divisor, mult))

    return PrimeFactorization(tuple(sorted(found.items())), leftover)
