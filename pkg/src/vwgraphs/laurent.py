"""Multivariate Laurent objects (1+T_1)^(-k_1)...(1+T_d)^(-k_d) * poly.

The group element sigma_1^{a_1}...sigma_d^{a_d} of a Z^d voltage maps to the
monomial (1+T_1)^{a_1}...(1+T_d)^{a_d}; negative exponents make these Laurent
objects rather than plain polynomials.  Each value is stored as a nonnegative
shift vector k plus a polynomial in T_1..T_d, in the canonical form where the
polynomial is not divisible by (1+T_i) whenever k_i > 0.  Since (1+T_i) is
monic it is a non-zero-divisor over every coefficient ring we use, so the
canonical form is unique and equality is structural.

Coefficients live in any ring object with ``zero``/``one``/``coerce``
(PiRing for ordinary series, CycloRing for character-twisted ones).
"""

from __future__ import annotations

from typing import Mapping, Sequence, Tuple


class MultivariableUnsupported(Exception):
    """The operation is only defined for single-variable series."""


Exponents = Tuple[int, ...]


class LaurentRing:
    """Laurent objects in nvars variables over a coefficient ring."""

    def __init__(self, coeff_ring, nvars: int):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.coeff_ring = coeff_ring
        self.nvars = nvars
        zargs = (0,) * nvars
        self.zero = LaurentPoly(self, zargs, {})
        self.one = LaurentPoly(self, zargs, {zargs: coeff_ring.one})

    def from_coeff(self, c) -> "LaurentPoly":
        c = self.coeff_ring.coerce(c)
        zargs = (0,) * self.nvars
        return LaurentPoly(self, zargs, {zargs: c} if c else {})

    def var(self, i: int = 0) -> "LaurentPoly":
        """The variable T_i."""
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return LaurentPoly(self, (0,) * self.nvars, {e: self.coeff_ring.one})

    def monomial(self, exps: Exponents, coeff=None) -> "LaurentPoly":
        c = self.coeff_ring.one if coeff is None else self.coeff_ring.coerce(coeff)
        return LaurentPoly(self, (0,) * self.nvars, {tuple(exps): c} if c else {})

    def unit_power(self, a: Sequence[int]) -> "LaurentPoly":
        """(1+T_1)^{a_1} ... (1+T_d)^{a_d} for any integer vector a."""
        if len(a) != self.nvars:
            raise ValueError("exponent vector has the wrong length")
        shift = tuple(-ai if ai < 0 else 0 for ai in a)
        poly = self.one
        for i, ai in enumerate(a):
            if ai > 0:
                base = self.one + self.var(i)
                for _ in range(ai):
                    poly = poly * base
        return LaurentPoly(self, shift, poly.terms)

    def coerce(self, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            if x.ring is not self:
                raise ValueError("Laurent value from a different ring")
            return x
        return self.from_coeff(x)

    def __repr__(self):
        return f"LaurentRing({self.coeff_ring!r}, nvars={self.nvars})"


class LaurentPoly:
    """Canonical-form Laurent object; immutable after construction."""

    __slots__ = ("ring", "shift", "terms")

    def __init__(self, ring: LaurentRing, shift: Exponents, terms: Mapping):
        d = ring.nvars
        coerce = ring.coeff_ring.coerce
        terms = {tuple(e): coerce(c) for e, c in terms.items() if c}
        shift = list(shift)
        # fold negative shifts into the polynomial
        for i in range(d):
            if shift[i] < 0:
                terms = _mul_unit_power(terms, i, -shift[i])
                shift[i] = 0
        # strip (1+T_i) factors while a positive shift can absorb them
        for i in range(d):
            while shift[i] > 0 and terms:
                quot = _div_unit(terms, i)
                if quot is None:
                    break
                terms = quot
                shift[i] -= 1
        if not terms:
            shift = [0] * d
        self.ring = ring
        self.shift = tuple(shift)
        self.terms = dict(terms)

    # -- basic structure -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = self.ring.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self.ring is other.ring and self.shift == other.shift
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.ring), self.shift, tuple(sorted(self.terms.items(),
                                                             key=lambda kv: kv[0]))))

    def is_polynomial(self) -> bool:
        return not any(self.shift)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = ["T"] if self.ring.nvars == 1 else [f"T{i+1}" for i in range(self.ring.nvars)]
        parts = []
        for e in sorted(self.terms):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k)
            c = f"({self.terms[e]!r})"
            parts.append(f"{c}*{mono}" if mono else c)
        body = " + ".join(parts)
        for i, k in enumerate(self.shift):
            if k:
                body = f"(1+{names[i]})^-{k} * [{body}]"
        return body

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = self.ring.coerce(other)
        shift = tuple(max(a, b) for a, b in zip(self.shift, other.shift))
        terms = _raise_to_shift(self, shift)
        for e, c in _raise_to_shift(other, shift).items():
            acc = terms.get(e)
            terms[e] = c if acc is None else acc + c
        return LaurentPoly(self.ring, shift, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, self.shift, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        other = self.ring.coerce(other)
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                acc = terms.get(e)
                terms[e] = prod if acc is None else acc + prod
        return LaurentPoly(self.ring, shift, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of general Laurent values")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- views -------------------------------------------------------------------

    def constant_term(self):
        """Value at T = 0 (the shift is a unit there)."""
        return self.terms.get((0,) * self.ring.nvars, self.ring.coeff_ring.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def dense_1d(self) -> list:
        """Coefficient list [a_0, ..., a_deg] of the polynomial part (d=1 only)."""
        if self.ring.nvars != 1:
            raise MultivariableUnsupported("dense view requires one variable")
        zero = self.ring.coeff_ring.zero
        if not self.terms:
            return [zero]
        deg = max(e[0] for e in self.terms)
        out = [zero] * (deg + 1)
        for e, c in self.terms.items():
            out[e[0]] = c
        return out

    def substitute(self, values: Sequence, unit_inverses: Sequence):
        """Evaluate at T_i = values[i]; unit_inverses[i] must be (1+values[i])^-1.

        Passing the unit inverses explicitly keeps evaluation division-free,
        which matters when the values are roots of unity in a quotient ring.
        """
        ring = self.ring.coeff_ring
        if len(values) != self.ring.nvars or len(unit_inverses) != self.ring.nvars:
            raise ValueError("need one value and one unit inverse per variable")
        values = [ring.coerce(v) for v in values]
        unit_inverses = [ring.coerce(u) for u in unit_inverses]
        acc = ring.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            acc = acc + term
        for i, k in enumerate(self.shift):
            for _ in range(k):
                acc = acc * unit_inverses[i]
        return acc

    def map_coeffs(self, fn, new_ring: "LaurentRing") -> "LaurentPoly":
        return LaurentPoly(new_ring, self.shift, {e: fn(c) for e, c in self.terms.items()})


# -- unit-factor helpers (division-free: (1+T_i) is monic) -----------------

def _mul_unit_power(terms: dict, i: int, k: int) -> dict:
    for _ in range(k):
        out: dict = {}
        for e, c in terms.items():
            up = list(e)
            up[i] += 1
            up = tuple(up)
            acc = out.get(e)
            out[e] = c if acc is None else acc + c
            acc = out.get(up)
            out[up] = c if acc is None else acc + c
        terms = {e: c for e, c in out.items() if c}
    return terms


def _div_unit(terms: dict, i: int):
    """Quotient of the polynomial by (1+T_i), or None if not divisible."""
    if not terms:
        return {}
    # group by the exponents of the other variables
    groups: dict = {}
    for e, c in terms.items():
        key = e[:i] + e[i + 1:]
        groups.setdefault(key, {})[e[i]] = c
    out: dict = {}
    for key, coeffs in groups.items():
        top = max(coeffs)
        quot = {}
        carry = None
        for j in range(top, 0, -1):
            cj = coeffs.get(j)
            if carry is not None:
                cj = carry if cj is None else cj + carry
            if cj is None:
                carry = None
                continue
            quot[j - 1] = cj
            carry = -cj
        c0 = coeffs.get(0)
        rem = carry if c0 is None else (c0 if carry is None else c0 + carry)
        if rem is not None and rem:
            return None
        for j, c in quot.items():
            if c:
                e = key[:i] + (j,) + key[i:]
                out[e] = c
    return out


def _raise_to_shift(poly: LaurentPoly, shift: Exponents) -> dict:
    terms = dict(poly.terms)
    for i in range(poly.ring.nvars):
        k = shift[i] - poly.shift[i]
        if k:
            terms = _mul_unit_power(terms, i, k)
    return terms


# ---------------------------------------------------------------------------
# dense univariate polynomial arithmetic over a coefficient field
# ---------------------------------------------------------------------------

def unipoly_trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def unipoly_mul(a: list, b: list, ring) -> list:
    if not a or not b:
        return []
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return unipoly_trim(out)


def unipoly_divmod(a: list, b: list, ring):
    """Quotient and remainder in F[S]; the coefficient ring must be a field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    unipoly_trim(a)
    lead_inv = b[-1].inverse() if hasattr(b[-1], "inverse") else ring.one / b[-1]
    q = [ring.zero] * max(0, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        f = a[-1] * lead_inv
        s = len(a) - len(b)
        q[s] = f
        for i, c in enumerate(b):
            if c:
                a[s + i] = a[s + i] - f * c
        unipoly_trim(a)
    return unipoly_trim(q), a


def unipoly_gcd(a: list, b: list, ring) -> list:
    """Monic gcd in F[S] by the Euclidean algorithm."""
    a, b = unipoly_trim(list(a)), unipoly_trim(list(b))
    while b:
        _, r = unipoly_divmod(a, b, ring)
        a, b = b, r
    if a:
        inv = a[-1].inverse() if hasattr(a[-1], "inverse") else ring.one / a[-1]
        a = [c * inv for c in a]
    return a


def poly_divides(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True iff a | b in R[T] after clearing the unit shifts (d = 1 only)."""
    if a.ring.nvars != 1 or b.ring.nvars != 1:
        raise MultivariableUnsupported("divisibility test requires one variable")
    ring = a.ring.coeff_ring
    na = unipoly_trim(a.dense_1d())
    nb = unipoly_trim(b.dense_1d())
    if not na:
        return not nb
    _, r = unipoly_divmod(nb, na, ring)
    return not r
