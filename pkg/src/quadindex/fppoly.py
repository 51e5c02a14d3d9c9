"""Polynomials over F_p: arithmetic, gcd, square-free, distinct-degree and
equal-degree factorisation, and resultants.

The module-level helpers work on plain lists of residues, lowest degree first,
with the zero polynomial as ``[]``. :class:`ModPoly` is the immutable public
wrapper around them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import is_prime
from .errors import InternalInconsistency, InvalidArgument
from .zpoly import IntPoly, format_pretty


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _scale(a, s, p):
    s %= p
    return _trim([c * s % p for c in a]) if s else []


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        coef = r[k + db] * inv % p
        q[k] = coef
        if coef:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - coef * b[j]) % p
    return _trim(q), _trim(r[:db])


def _rem(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return []
    return _scale(a, pow(a[-1], -1, p), p)


def _gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p)


def _deriv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _powmod(base, e, mod, p):
    result = [1]
    base = _rem(base, mod, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, p), mod, p)
    return _rem(result, mod, p)


def _eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _pth_root(a, p):
    # every exponent is a multiple of p; coefficients are fixed by Frobenius
    return _trim([a[i] for i in range(0, len(a), p)])


def _squarefree(f, p):
    """Square-free decomposition of monic f: list of (g, e), g square-free."""
    out = []
    fp = _deriv(f, p)
    if fp:
        c = _gcd(f, fp, p)
        w = _divmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _gcd(w, c, p)
            z = _divmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, i))
            i += 1
            w = y
            c = _divmod(c, y, p)[0]
        if len(c) > 1:
            for g, e in _squarefree(_pth_root(c, p), p):
                out.append((g, e * p))
    else:
        for g, e in _squarefree(_pth_root(f, p), p):
            out.append((g, e * p))
    return out


def _distinct_degree(f, p):
    """Split square-free monic f into (product of all degree-d factors, d)."""
    out = []
    h = [0, 1]
    x = [0, 1]
    i = 1
    rest = f
    while len(rest) - 1 >= 2 * i:
        h = _powmod(h, p, rest, p)
        g = _gcd(rest, _sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, i))
            rest = _divmod(rest, g, p)[0]
            h = _rem(h, rest, p)
        i += 1
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _equal_degree(g, d, p, rng: random.Random):
    """Split a product of distinct degree-d irreducibles (Cantor-Zassenhaus)."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, term = list(a), list(a)
            for _ in range(d - 1):
                term = _rem(_mul(term, term, p), g, p)
                t = _add(t, term, p)
            b = t
        else:
            b = _sub(_powmod(a, (p**d - 1) // 2, g, p), [1], p)
        u = _gcd(g, b, p)
        if 1 < len(u) < len(g):
            v = _divmod(g, u, p)[0]
            return _equal_degree(u, d, p, rng) + _equal_degree(v, d, p, rng)


def _check_prime(p: int):
    if p < 2 or not is_prime(p):
        raise InvalidArgument(f"{p} is not prime")


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` in F_p."""
    if a % p == 0:
        raise InvalidArgument(f"{a} is not invertible modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class ModPoly:
    """A polynomial over F_p, coefficients lowest degree first."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) % p for c in coeffs])))

    @classmethod
    def _raw(cls, p, coeffs) -> ModPoly:
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def from_high(cls, p: int, coeffs) -> ModPoly:
        return cls(p, reversed(list(coeffs)))

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

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def _same(self, other: ModPoly):
        if self.p != other.p:
            raise InvalidArgument(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: ModPoly) -> ModPoly:
        self._same(other)
        return ModPoly._raw(self.p, _add(list(self.coeffs), other.coeffs, self.p))

    def __sub__(self, other: ModPoly) -> ModPoly:
        self._same(other)
        return ModPoly._raw(self.p, _sub(self.coeffs, other.coeffs, self.p))

    def __mul__(self, other: ModPoly) -> ModPoly:
        self._same(other)
        return ModPoly._raw(self.p, _mul(self.coeffs, other.coeffs, self.p))

    def __pow__(self, e: int) -> ModPoly:
        out, base = [1], list(self.coeffs)
        while e:
            if e & 1:
                out = _mul(out, base, self.p)
            e >>= 1
            if e:
                base = _mul(base, base, self.p)
        return ModPoly._raw(self.p, out)

    def __divmod__(self, other: ModPoly):
        self._same(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.p)
        return ModPoly._raw(self.p, q), ModPoly._raw(self.p, r)

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        return _eval(self.coeffs, x % self.p, self.p)

    def monic(self) -> ModPoly:
        return ModPoly._raw(self.p, _monic(list(self.coeffs), self.p))

    def derivative(self) -> ModPoly:
        return ModPoly._raw(self.p, _deriv(self.coeffs, self.p))

    def divides(self, other: ModPoly) -> bool:
        return (other % self).is_zero()

    def lift(self, symmetric: bool = False) -> IntPoly:
        """Integer lift; canonical residues in [0, p) unless ``symmetric``."""
        if not symmetric:
            return IntPoly(self.coeffs)
        half = self.p // 2
        return IntPoly(c - self.p if c > half else c for c in self.coeffs)

    def sort_key(self):
        return (self.degree, tuple(self.to_high()))

    def __str__(self) -> str:
        return format_pretty(self.coeffs)


def reduce(f: IntPoly, p: int) -> ModPoly:
    """Coefficient-wise reduction of an integer polynomial modulo a prime."""
    _check_prime(p)
    return ModPoly(p, f.coeffs)


def gcd(f: ModPoly, g: ModPoly) -> ModPoly:
    """Monic gcd; ``gcd(f, 0) == monic(f)``."""
    f._same(g)
    return ModPoly._raw(f.p, _gcd(f.coeffs, g.coeffs, f.p))


def eval(f: ModPoly, x: int) -> int:  # noqa: A001 - mirrors the operation name
    return f(x)


def is_separable(f: ModPoly) -> bool:
    if f.is_zero():
        raise InvalidArgument("separability of the zero polynomial")
    return gcd(f, f.derivative()).degree == 0


@dataclass(frozen=True)
class ModFactorization:
    """``unit * prod(g**e)``, with monic irreducible ``g`` in canonical order."""

    p: int
    unit: int
    factors: tuple[tuple[ModPoly, int], ...]

    def expand(self) -> ModPoly:
        out = ModPoly(self.p, (self.unit,))
        for g, e in self.factors:
            out = out * g**e
        return out

    @property
    def repeated(self) -> list[tuple[ModPoly, int]]:
        return [(g, e) for g, e in self.factors if e >= 2]

    def __str__(self) -> str:
        parts = []
        for g, e in self.factors:
            s = f"({g})" if len(g.coeffs) > 2 or (g.degree == 1 and g.coeffs[0]) else str(g)
            parts.append(s if e == 1 else f"{s}^{e}")
        if self.unit != 1 or not parts:
            parts.insert(0, str(self.unit))
        return " * ".join(parts)


def factorize(f: ModPoly, rng: random.Random | int) -> ModFactorization:
    """Complete factorisation over F_p.

    Square-free decomposition (with p-th root extraction), distinct-degree
    splitting, then seeded equal-degree splitting. The factor multiset does not
    depend on the seed; the output order is canonical.
    """
    if f.is_zero():
        raise InvalidArgument("cannot factor the zero polynomial")
    if isinstance(rng, int):
        rng = random.Random(rng)
    p = f.p
    unit = f.lc
    found: dict[tuple[int, ...], int] = {}
    for g, e in _squarefree(_monic(list(f.coeffs), p), p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree(h, d, p, rng):
                key = tuple(irr)
                found[key] = found.get(key, 0) + e
    factors = sorted(((ModPoly._raw(p, k), e) for k, e in found.items()), key=lambda t: t[0].sort_key())
    out = ModFactorization(p, unit, tuple(factors))
    return out


def is_irreducible(f: ModPoly) -> bool:
    """True iff ``f`` has positive degree and no non-trivial factor over F_p."""
    if f.degree < 1:
        return False
    g = _monic(list(f.coeffs), f.p)
    if f.degree == 1:
        return True
    if len(_gcd(g, _deriv(g, f.p), f.p)) > 1:
        return False
    parts = _distinct_degree(g, f.p)
    return len(parts) == 1 and parts[0][1] == f.degree


def factor_degrees(f: ModPoly, rng: random.Random | int = 0) -> list[int]:
    """Degrees of the irreducible factors, with multiplicity."""
    out = []
    for g, e in factorize(f, rng).factors:
        out.extend([g.degree] * e)
    return sorted(out)


def resultant(f: ModPoly, g: ModPoly) -> int:
    """Res(f, g) in F_p by the Euclidean remainder sequence."""
    f._same(g)
    p = f.p
    if f.is_zero() or g.is_zero():
        return 0
    a, b = list(f.coeffs), list(g.coeffs)
    acc = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return acc * pow(b[0], da, p) % p
        if da == 0:
            return acc * pow(a[0], db, p) % p
        r = _rem(a, b, p)
        if not r:
            return 0
        # Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        dr = len(r) - 1
        if (da * db) % 2:
            acc = -acc
        acc = acc * pow(b[-1], da - dr, p) % p
        a, b = b, r


def check_factorization(f: ModPoly, fac: ModFactorization):
    """Raise if ``fac`` does not multiply back to ``f``."""
    if fac.expand() != f:
        raise InternalInconsistency(f"factorisation of {f} over F_{f.p} does not reproduce it")
