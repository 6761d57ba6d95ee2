"""Exact arithmetic in the field R = Q(p^(1/M)) and its cyclotomic extensions.

R is realized as Q[x]/(x^M - p) with x the chosen M-th root pi of p; the
polynomial is Eisenstein at p, hence irreducible, so R is a field for every
M >= 1.  Elements are coefficient vectors of length M over Fraction, always
kept fully reduced, so equality is structural.

The p-adic valuation is normalized by val_p(p) = 1.  On R it is computed by
the distinct-residue rule: val(sum c_j pi^j) = min_j (val_p(c_j) + j/M),
the minimum being attained exactly once because the j/M offsets are distinct
mod 1.

CycloElement models R[x]/Phi_{p^n}(x), the home of p-power roots of unity and
of character values.  No valuation is defined on it; quantities that need a
valuation are first descended to R (see galois_orbit_product).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Rational = Union[int, Fraction]


class NonRationalDescent(Exception):
    """A cyclotomic value expected to lie in the base field did not."""


# ---------------------------------------------------------------------------
# p-adic valuations
# ---------------------------------------------------------------------------

class _Infinity:
    """Formal +infinity, the valuation of zero."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INF

    def __gt__(self, other):
        return other is not INF

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return INF

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("cannot negate +infinity")

    def __repr__(self):
        return "+inf"


INF = _Infinity()

#: A p-adic valuation: an exact rational, or INF for the valuation of zero.
PAdicValue = Union[Fraction, _Infinity]


def rational_val(q: Rational, p: int) -> PAdicValue:
    """Exponent of p in the factorization of the rational q (INF for 0)."""
    q = Fraction(q)
    if q == 0:
        return INF
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return Fraction(v)


# ---------------------------------------------------------------------------
# The field R = Q(p^(1/M))
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def piring(p: int, M: int) -> "PiRing":
    return PiRing(p, M)


class PiRing:
    """The field Q(pi) with pi^M = p.  Use piring(p, M) to get a cached ring."""

    def __init__(self, p: int, M: int):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        if M < 1:
            raise ValueError("M must be >= 1")
        self.p = p
        self.M = M
        self.zero = PiRingElement(self, (Fraction(0),) * M)
        self.one = self.from_rational(1)

    def element(self, coeffs: Sequence[Rational]) -> "PiRingElement":
        if len(coeffs) != self.M:
            raise ValueError(f"need {self.M} coefficients, got {len(coeffs)}")
        return PiRingElement(self, tuple(Fraction(c) for c in coeffs))

    def from_rational(self, q: Rational) -> "PiRingElement":
        coeffs = [Fraction(q)] + [Fraction(0)] * (self.M - 1)
        return PiRingElement(self, tuple(coeffs))

    def pi(self, power: int = 1) -> "PiRingElement":
        """pi^power for any integer power (negative powers divide by p)."""
        q, r = divmod(power, self.M)
        coeffs = [Fraction(0)] * self.M
        coeffs[r] = Fraction(self.p) ** q
        return PiRingElement(self, tuple(coeffs))

    def coerce(self, x) -> "PiRingElement":
        if isinstance(x, PiRingElement):
            if x.ring is not self:
                raise ValueError("element of a different ring")
            return x
        if isinstance(x, (int, Fraction)):
            return self.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def __repr__(self):
        return f"PiRing(p={self.p}, M={self.M})"


class PiRingElement:
    """Immutable element sum_j coeffs[j] * pi^j of a PiRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PiRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _same(self, other) -> "PiRingElement":
        return self.ring.coerce(other)

    def __add__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        return PiRingElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        return PiRingElement(self.ring, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self._same(other).__sub__(self)

    def __neg__(self):
        return PiRingElement(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        M, p = self.ring.M, self.ring.p
        out = [Fraction(0)] * M
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                k = i + j
                if k < M:
                    out[k] += a * b
                else:
                    out[k - M] += a * b * p  # pi^M = p
        return PiRingElement(self.ring, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "PiRingElement":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero in PiRing")
        M, p = self.ring.M, self.ring.p
        if M == 1:
            return self.ring.from_rational(1 / self.coeffs[0])
        # xgcd(self as polynomial, x^M - p); the gcd is a nonzero constant.
        modulus = [-Fraction(p)] + [Fraction(0)] * (M - 1) + [Fraction(1)]
        r0, r1 = modulus, _poly_trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is not invertible")  # unreachable: x^M-p irreducible
        inv = [c / r1[0] for c in s1]
        inv = (inv + [Fraction(0)] * M)[:M]
        return PiRingElement(self.ring, tuple(inv))

    def __truediv__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._same(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.from_rational(other)
        if not isinstance(other, PiRingElement):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                unit = "pi" if j == 1 else f"pi^{j}"
                terms.append(unit if c == 1 else f"{c}*{unit}")
        return " + ".join(terms) if terms else "0"

    # -- serialization: array of M base-10 "num/den" strings --------------

    def to_strings(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


def element_from_strings(ring: PiRing, items: Sequence[str]) -> PiRingElement:
    return ring.element([Fraction(s) for s in items])


def val_p(x: PiRingElement) -> PAdicValue:
    """min over nonzero coefficients of val_p(c_j) + j/M; INF iff x is 0."""
    best: PAdicValue = INF
    M, p = x.ring.M, x.ring.p
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        v = rational_val(c, p) + Fraction(j, M)
        if v < best:
            best = v
    return best


def sqrt_check(w: PiRingElement, s: PiRingElement) -> bool:
    """True iff s*s = w (both square-root signs are legal)."""
    return s * s == w


# -- dense univariate polynomial helpers over Fraction (module-private) ----

def _poly_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
           for i in range(n)]
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        _poly_trim(a)
    return _poly_trim(q), a


# ---------------------------------------------------------------------------
# Cyclotomic extension C = R[x]/Phi_{p^n}(x)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cycloring(p: int, M: int, n: int) -> "CycloRing":
    return CycloRing(piring(p, M), n)


class CycloRing:
    """R[zeta] with zeta a primitive p^n-th root of unity, n >= 0.

    Elements are polynomials in zeta of degree < phi(p^n), reduced mod the
    cyclotomic polynomial Phi_{p^n}(x) = sum_{k<p} x^{k p^(n-1)}.  For n = 0
    the ring is R itself (zeta = 1).
    """

    def __init__(self, base: PiRing, n: int):
        if n < 0:
            raise ValueError("level must be >= 0")
        self.base = base
        self.n = n
        p = base.p
        self.order = p ** n
        self.degree = 1 if n == 0 else p ** (n - 1) * (p - 1)
        self.zero = CycloElement(self, (base.zero,) * self.degree)
        self.one = self.from_base(base.one)

    def from_base(self, x: PiRingElement) -> "CycloElement":
        coeffs = [self.base.coerce(x)] + [self.base.zero] * (self.degree - 1)
        return CycloElement(self, tuple(coeffs))

    def coerce(self, x) -> "CycloElement":
        if isinstance(x, CycloElement):
            if x.ring is not self:
                raise ValueError("element of a different cyclotomic ring")
            return x
        if isinstance(x, (int, Fraction, PiRingElement)):
            return self.from_base(self.base.coerce(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def zeta(self, power: int = 1) -> "CycloElement":
        """zeta^power, reduced."""
        e = power % self.order
        raw = [self.base.zero] * self.order
        raw[e] = self.base.one
        return CycloElement(self, self._reduce(raw))

    def element(self, coeffs: Sequence) -> "CycloElement":
        coeffs = [self.base.coerce(c) for c in coeffs]
        if len(coeffs) > self.degree:
            coeffs = self._reduce(coeffs)
        else:
            coeffs = tuple(coeffs + [self.base.zero] * (self.degree - len(coeffs)))
        return CycloElement(self, coeffs)

    def _reduce(self, raw: list) -> tuple:
        """Canonical reduction of a coefficient list mod Phi_{p^n}."""
        p, order, deg = self.base.p, self.order, self.degree
        # fold exponents mod p^n (zeta^{p^n} = 1)
        folded = [self.base.zero] * order
        for e, c in enumerate(raw):
            if c:
                folded[e % order] = folded[e % order] + c
        if self.n == 0:
            return (folded[0],)
        block = order // p  # p^(n-1)
        # x^{(p-1)p^(n-1) + r} = -sum_{k<p-1} x^{k p^(n-1) + r}
        out = folded[:deg]
        for r in range(block):
            top = folded[deg + r]
            if not top:
                continue
            for k in range(p - 1):
                out[k * block + r] = out[k * block + r] - top
        return tuple(out)

    def __repr__(self):
        return f"CycloRing(p={self.base.p}, M={self.base.M}, level={self.n})"


class CycloElement:
    """Immutable element of a CycloRing, coefficients in the base PiRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycloRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _same(self, other) -> "CycloElement":
        return self.ring.coerce(other)

    def __add__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        return CycloElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        return CycloElement(self.ring, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self._same(other).__sub__(self)

    def __neg__(self):
        return CycloElement(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        try:
            o = self._same(other)
        except TypeError:
            return NotImplemented
        deg = self.ring.degree
        zero = self.ring.base.zero
        raw = [zero] * (2 * deg - 1 if deg > 1 else 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                raw[i + j] = raw[i + j] + a * b
        return CycloElement(self.ring, self.ring._reduce(raw))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported in CycloRing")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PiRingElement)):
            try:
                other = self.ring.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_base(self) -> bool:
        return not any(self.coeffs[1:])

    def as_base(self) -> PiRingElement:
        """Descend to R; raises NonRationalDescent if zeta-coordinates remain."""
        if not self.is_base():
            raise NonRationalDescent(f"{self!r} has nonzero zeta-coordinates")
        return self.coeffs[0]

    def galois_map(self, j: int) -> "CycloElement":
        """Apply the automorphism zeta -> zeta^j (j coprime to p)."""
        if j % self.ring.base.p == 0:
            raise ValueError("galois exponent must be coprime to p")
        zero = self.ring.base.zero
        raw = [zero] * self.ring.order
        for e, c in enumerate(self.coeffs):
            if c:
                idx = (e * j) % self.ring.order
                raw[idx] = raw[idx] + c
        return CycloElement(self.ring, self.ring._reduce(raw))

    def to_strings(self) -> list:
        return [c.to_strings() for c in self.coeffs]

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(f"({c!r})")
            else:
                unit = "z" if e == 1 else f"z^{e}"
                terms.append(f"({c!r})*{unit}")
        return " + ".join(terms) if terms else "0"


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    if a.ring is not b.ring:
        raise ValueError("cyclotomic level/field mismatch")
    return a * b


def cyclo_add(a: CycloElement, b: CycloElement) -> CycloElement:
    if a.ring is not b.ring:
        raise ValueError("cyclotomic level/field mismatch")
    return a + b


def cyclo_reduce(ring: CycloRing, coeffs: Sequence) -> CycloElement:
    """Build an element from an arbitrary-length coefficient list, reducing."""
    return ring.element(list(coeffs))


def galois_orbit_product(values: Sequence[CycloElement]) -> PiRingElement:
    """Product over a full Galois orbit of values, descended to R.

    The inputs must be conjugate under zeta -> zeta^j; their product is then
    Galois-stable, so every zeta-coordinate of degree >= 1 must vanish.
    Raises NonRationalDescent otherwise (a bug or a non-orbit input).
    """
    if not values:
        raise ValueError("empty orbit")
    ring = values[0].ring
    acc = ring.one
    for v in values:
        if v.ring is not ring:
            raise ValueError("orbit values live in different rings")
        acc = acc * v
    return acc.as_base()
