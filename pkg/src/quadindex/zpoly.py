"""Dense integer polynomials, quadrinomials and their discriminants.

An :class:`IntPoly` stores coefficients lowest degree first, so
``IntPoly((3, 1, 0, 0, 0, 4, 1))`` is x^6 + 4x^5 + x + 3. The text format used
on the command line lists them the other way round ("1,4,0,0,0,1,3").
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import exact_div, factor
from .errors import InternalInconsistency, InvalidArgument

DISCRIMINANT_FORMULA_MAX_N = 2000
_RESULTANT_CROSSCHECK_MAX_N = 24


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_high(cls, coeffs) -> IntPoly:
        return cls(reversed(list(coeffs)))

    def to_high(self) -> list[int]:
        return list(reversed(self.coeffs)) or [0]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __str__(self) -> str:
        return format_pretty(self.coeffs)


def format_pretty(coeffs) -> str:
    """Human-readable rendering of a low-to-high coefficient sequence."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def parse_poly(text: str) -> IntPoly:
    """Parse the comma-separated, leading-coefficient-first text format."""
    parts = [t for t in "".join(text.split()).split(",")]
    if not parts or any(t == "" for t in parts):
        raise InvalidArgument(f"malformed polynomial {text!r}")
    try:
        high = [int(t) for t in parts]
    except ValueError as exc:
        raise InvalidArgument(f"malformed polynomial {text!r}") from exc
    return IntPoly.from_high(high)


def format_poly(f: IntPoly) -> str:
    return ",".join(str(c) for c in f.to_high())


def derivative(f: IntPoly) -> IntPoly:
    return IntPoly(i * c for i, c in enumerate(f.coeffs) if i)


# -- resultants ---------------------------------------------------------------


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b (low-to-high lists)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        scale = lb**e
        r = [scale * c for c in r]
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant by the subresultant remainder sequence."""
    if f.is_zero() or g.is_zero():
        raise InvalidArgument("resultant of the zero polynomial")
    a, b = list(f.coeffs), list(g.coeffs)
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            s = -1
    if len(b) == 1:
        return s * b[0] ** (len(a) - 1)
    ca, cb = math.gcd(*a), math.gcd(*b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    g_, h = 1, 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        div = g_ * h**delta
        a, b = b, [exact_div(x, div, "subresultant step") for x in r]
        g_ = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = exact_div(g_**delta, h ** (delta - 1), "subresultant h")
        if len(b) == 1:
            break
    da = len(a) - 1
    if da == 0:
        hh = 1
    else:
        hh = exact_div(b[0] ** da, h ** (da - 1), "subresultant final")
    return s * t * hh


def poly_discriminant(f: IntPoly) -> int:
    """Discriminant of a monic polynomial: (-1)^(n(n-1)/2) Res(f, f')."""
    if not f.is_monic():
        raise InvalidArgument("discriminant expects a monic polynomial")
    n = f.degree
    if n < 1:
        raise InvalidArgument("discriminant needs degree >= 1")
    if n == 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f))


# -- quadrinomials ------------------------------------------------------------


@dataclass(frozen=True)
class Quadrinomial:
    """x^n + a x^(n-1) + b x + c."""

    n: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidArgument("quadrinomial needs n >= 3 so the four monomials are distinct")

    @property
    def valid(self) -> bool:
        return self.n > 4 and self.a != 0 and self.b != 0 and self.c != 0

    def __str__(self) -> str:
        return str(expand(self))


class ScopeFailure(str, enum.Enum):
    DEGREE_TOO_SMALL = "degree_too_small"
    ZERO_COEFFICIENT = "zero_coefficient"
    A_NONPOSITIVE = "a_nonpositive"
    A_NOT_DIVIDING_N_SQUARED = "a_not_dividing_n_squared"
    GCD_A_K_NOT_ONE = "gcd_a_k_not_one"


@dataclass(frozen=True)
class TheoremScope:
    applicable: bool
    k: int | None = None
    failure_reason: ScopeFailure | None = None


def expand(q: Quadrinomial) -> IntPoly:
    coeffs = [0] * (q.n + 1)
    coeffs[q.n] = 1
    coeffs[q.n - 1] += q.a
    coeffs[1] += q.b
    coeffs[0] += q.c
    return IntPoly(coeffs)


def check_scope(q: Quadrinomial) -> TheoremScope:
    """Whether n > 4, abc != 0 and n^2 = a*k with k >= 1, gcd(a, k) = 1."""
    if q.n <= 4:
        return TheoremScope(False, failure_reason=ScopeFailure.DEGREE_TOO_SMALL)
    if 0 in (q.a, q.b, q.c):
        return TheoremScope(False, failure_reason=ScopeFailure.ZERO_COEFFICIENT)
    if q.a < 1:
        return TheoremScope(False, failure_reason=ScopeFailure.A_NONPOSITIVE)
    k, rem = divmod(q.n * q.n, q.a)
    if rem:
        return TheoremScope(False, failure_reason=ScopeFailure.A_NOT_DIVIDING_N_SQUARED)
    if math.gcd(q.a, k) != 1:
        return TheoremScope(False, failure_reason=ScopeFailure.GCD_A_K_NOT_ONE)
    # any prime dividing a must divide it to at least the second power
    if q.a > 1 and q.a < 10**12:
        for p, e in factor(q.a).factors:
            if e < 2:
                raise InternalInconsistency(f"prime {p} divides a={q.a} exactly once inside scope")
    return TheoremScope(True, k=k)


def binomial_weight(n: int, i: int) -> int:
    """C(n-3, 2i) * (n-2) / (n-2-2i), asserted to be an integer."""
    return exact_div(math.comb(n - 3, 2 * i) * (n - 2), n - 2 - 2 * i, f"binomial weight n={n}, i={i}")


def discriminant_formula(q: Quadrinomial, max_n: int = DISCRIMINANT_FORMULA_MAX_N) -> int:
    """Closed-form discriminant of x^n + a x^(n-1) + b x + c.

    Built from the quadratic N(t) = (1-n) b t^2 + ((2-n) ab - nc) t - (n-1) ac
    that f'(root) reduces to; H and G below are its middle coefficient and
    discriminant. Divisions by a, a^2 and powers of two are carried out in
    exact rational arithmetic and the result must come out integral.
    """
    if not q.valid:
        raise InvalidArgument("closed form needs n > 4 and abc != 0")
    if q.n > max_n:
        raise InvalidArgument(f"n={q.n} exceeds the closed-form cap {max_n}")
    n, a, b, c = q.n, q.a, q.b, q.c
    E = (n - 2) * a * b + c * n
    G = E * E - 4 * a * b * c * (n - 1) ** 2
    H = (2 - n) * a * b - c * n
    L = n * n * c - a * b

    head = (
        Fraction((n - 1) ** (n - 1) * a**n * c ** (n - 2))
        + Fraction(n * n * (n - 1) ** (n - 1) * b ** (n - 1) * c, a)
        + Fraction((n - 1) ** (n - 3) * b ** (n - 2) * L * L, a * a)
        - Fraction(n * (n - 1) ** (n - 3) * b ** (n - 2) * L * E, a * a)
    )
    tail = 0
    two_n3 = 2 ** (n - 3)
    for i in range((n - 3) // 2 + 1):
        gi = G**i
        tail += 2 * n * (n - 1) ** 2 * a * b * c * H ** (n - 3 - 2 * i) * gi * math.comb(n - 3, 2 * i)
        tail += L * H ** (n - 2 - 2 * i) * gi * binomial_weight(n, i)
    even = Fraction(0)
    if n % 2 == 0:
        even = Fraction(2 * L * G ** ((n - 2) // 2), 2 ** (n - 2))
    total = head - Fraction(tail, two_n3) - even
    if total.denominator != 1:
        raise InternalInconsistency(f"closed-form discriminant not integral for {q}")
    sign = -1 if ((n + 2) * (n - 1) // 2) % 2 else 1
    return sign * total.numerator


class DiscriminantMethod(str, enum.Enum):
    AUTO = "auto"
    FORMULA = "formula"
    RESULTANT = "resultant"
    BOTH = "both"


def discriminant(q: Quadrinomial, method: DiscriminantMethod | str = DiscriminantMethod.AUTO,
                 max_n: int = DISCRIMINANT_FORMULA_MAX_N) -> int:
    """Discriminant of the expanded quadrinomial.

    ``auto`` uses the closed form inside theorem scope and the resultant
    otherwise; for small degrees it runs both and insists they agree.
    """
    method = DiscriminantMethod(method)
    if q.n > max_n:
        raise InvalidArgument(f"n={q.n} exceeds the discriminant cap {max_n}")
    f = expand(q)
    if method is DiscriminantMethod.RESULTANT:
        return poly_discriminant(f)
    if method is DiscriminantMethod.FORMULA:
        return discriminant_formula(q, max_n)
    use_formula = q.valid and (method is DiscriminantMethod.BOTH or check_scope(q).applicable)
    both = method is DiscriminantMethod.BOTH or q.n <= _RESULTANT_CROSSCHECK_MAX_N
    if not use_formula:
        return poly_discriminant(f)
    d = discriminant_formula(q, max_n)
    if both:
        r = poly_discriminant(f)
        if r != d:
            raise InternalInconsistency(f"closed form {d} != resultant {r} for {q}")
    return d
