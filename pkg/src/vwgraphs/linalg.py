"""Exact dense linear algebra over the rings of this package.

Matrices carry ordered row and column labels; the label order is part of the
matrix identity and fixes the sign conventions of determinants and minors.
Entries live in a ring object exposing ``zero``, ``one`` and ``coerce``
(PiRing, CycloRing, or LaurentRing), so the same code serves field-valued,
cyclotomic-valued and Laurent-polynomial-valued matrices.

Two determinant routines are provided: Gaussian elimination with exact
division (fields only) and the division-free Samuelson-Berkowitz algorithm,
which is safe over quotient rings that may contain zero divisors.  The
adjugate is derived from the Berkowitz characteristic polynomial, so it is
also division-free and works for singular matrices.
"""

from __future__ import annotations

from typing import Callable, Sequence


class NonSquare(Exception):
    """Operation requires a square matrix."""


class UnknownLabel(KeyError):
    """A row/column label is not present in the matrix."""


class LabeledMatrix:
    """Dense matrix with ordered, hashable row/column labels."""

    __slots__ = ("ring", "row_labels", "col_labels", "entries")

    def __init__(self, ring, row_labels: Sequence, col_labels: Sequence, entries):
        self.ring = ring
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        rows = [tuple(ring.coerce(x) for x in row) for row in entries]
        if len(rows) != len(self.row_labels) or any(len(r) != len(self.col_labels) for r in rows):
            raise ValueError("entry grid does not match the label counts")
        self.entries = tuple(rows)

    # -- constructors ------------------------------------------------------

    @classmethod
    def build(cls, ring, row_labels, col_labels, fn: Callable) -> "LabeledMatrix":
        return cls(ring, row_labels, col_labels,
                   [[fn(r, c) for c in col_labels] for r in row_labels])

    @classmethod
    def zeros(cls, ring, row_labels, col_labels) -> "LabeledMatrix":
        return cls.build(ring, row_labels, col_labels, lambda r, c: ring.zero)

    @classmethod
    def identity(cls, ring, labels) -> "LabeledMatrix":
        return cls.build(ring, labels, labels,
                         lambda r, c: ring.one if r == c else ring.zero)

    @classmethod
    def diagonal(cls, ring, labels, diag_fn: Callable) -> "LabeledMatrix":
        return cls.build(ring, labels, labels,
                         lambda r, c: diag_fn(r) if r == c else ring.zero)

    # -- shape and access ----------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.row_labels)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row_index(self, label) -> int:
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def col_index(self, label) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def get(self, row_label, col_label):
        return self.entries[self.row_index(row_label)][self.col_index(col_label)]

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return (self.row_labels == other.row_labels
                and self.col_labels == other.col_labels
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.row_labels, self.col_labels, self.entries))

    def __repr__(self):
        return (f"LabeledMatrix({self.nrows}x{self.ncols}, "
                f"rows={list(self.row_labels)!r})")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._check_aligned(other)
        return LabeledMatrix(self.ring, self.row_labels, self.col_labels,
                             [[a + b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_aligned(other)
        return LabeledMatrix(self.ring, self.row_labels, self.col_labels,
                             [[a - b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return LabeledMatrix(self.ring, self.row_labels, self.col_labels,
                             [[-a for a in row] for row in self.entries])

    def _check_aligned(self, other):
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise ValueError("matrix labels do not align")

    def scale(self, c) -> "LabeledMatrix":
        c = self.ring.coerce(c)
        return LabeledMatrix(self.ring, self.row_labels, self.col_labels,
                             [[c * a for a in row] for row in self.entries])

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if self.col_labels != other.row_labels:
            raise ValueError("inner labels do not align for multiplication")
        zero = self.ring.zero
        out = []
        for ra in self.entries:
            row = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(ra):
                    if a:
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return LabeledMatrix(self.ring, self.row_labels, other.col_labels, out)

    def transpose(self) -> "LabeledMatrix":
        return LabeledMatrix(self.ring, self.col_labels, self.row_labels,
                             [[self.entries[i][j] for i in range(self.nrows)]
                              for j in range(self.ncols)])

    def mul_vector(self, vec: Sequence) -> list:
        vec = [self.ring.coerce(v) for v in vec]
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match")
        zero = self.ring.zero
        out = []
        for row in self.entries:
            acc = zero
            for a, v in zip(row, vec):
                if a:
                    acc = acc + a * v
            out.append(acc)
        return out

    def map_entries(self, fn: Callable, ring=None) -> "LabeledMatrix":
        return LabeledMatrix(ring if ring is not None else self.ring,
                             self.row_labels, self.col_labels,
                             [[fn(a) for a in row] for row in self.entries])


# ---------------------------------------------------------------------------
# minors, adjugate, Kronecker product
# ---------------------------------------------------------------------------

def minor(m: LabeledMatrix, rows_to_delete, cols_to_delete) -> LabeledMatrix:
    """Submatrix with the given row/column labels removed."""
    rset = set(rows_to_delete)
    cset = set(cols_to_delete)
    for r in rset:
        m.row_index(r)
    for c in cset:
        m.col_index(c)
    keep_r = [i for i, r in enumerate(m.row_labels) if r not in rset]
    keep_c = [j for j, c in enumerate(m.col_labels) if c not in cset]
    return LabeledMatrix(m.ring,
                         [m.row_labels[i] for i in keep_r],
                         [m.col_labels[j] for j in keep_c],
                         [[m.entries[i][j] for j in keep_c] for i in keep_r])


def kronecker(a: LabeledMatrix, b: LabeledMatrix) -> LabeledMatrix:
    """Kronecker product; pair labels in the induced lexicographic order."""
    if a.ring is not b.ring:
        raise ValueError("kronecker factors must share a ring")
    rows = [(ra, rb) for ra in a.row_labels for rb in b.row_labels]
    cols = [(ca, cb) for ca in a.col_labels for cb in b.col_labels]
    entries = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            entries.append([a.entries[i][j] * b.entries[k][l]
                            for j in range(a.ncols) for l in range(b.ncols)])
    return LabeledMatrix(a.ring, rows, cols, entries)


def berkowitz_charpoly(m: LabeledMatrix) -> list:
    """Coefficients of det(xI - A), leading term first, by Samuelson-Berkowitz.

    Division-free, hence valid over any commutative ring.
    """
    if not m.is_square():
        raise NonSquare(f"{m.nrows}x{m.ncols}")
    ring = m.ring
    n = m.nrows
    E = m.entries
    V = [ring.one]
    for i in range(n - 1, -1, -1):
        size = n - i
        col = [ring.one, -E[i][i]]
        if size > 1:
            R = E[i][i + 1:]
            w = [E[j][i] for j in range(i + 1, n)]
            col.append(-_dot(ring, R, w))
            for _ in range(size - 2):
                w = [_dot(ring, E[j][i + 1:], w) for j in range(i + 1, n)]
                col.append(-_dot(ring, R, w))
        out = []
        for r in range(size + 1):
            acc = ring.zero
            lo = max(0, r - len(col) + 1)
            hi = min(r, len(V) - 1)
            for s in range(lo, hi + 1):
                acc = acc + col[r - s] * V[s]
            out.append(acc)
        V = out
    return V


def _dot(ring, xs, ys):
    acc = ring.zero
    for x, y in zip(xs, ys):
        if x and y:
            acc = acc + x * y
    return acc


def det_berkowitz(m: LabeledMatrix):
    """Division-free determinant; agrees with det_gauss over fields."""
    if not m.is_square():
        raise NonSquare(f"{m.nrows}x{m.ncols}")
    n = m.nrows
    if n == 0:
        return m.ring.one
    c0 = berkowitz_charpoly(m)[-1]
    return c0 if n % 2 == 0 else -c0


def det_gauss(m: LabeledMatrix):
    """Exact determinant over a field by elimination with partial pivoting.

    The pivot is the first row (in declared order) with a nonzero entry in
    the current column; row swaps flip the sign.
    """
    if not m.is_square():
        raise NonSquare(f"{m.nrows}x{m.ncols}")
    ring = m.ring
    n = m.nrows
    if n == 0:
        return ring.one
    a = [list(row) for row in m.entries]
    det = ring.one
    sign = 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            return ring.zero
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        pval = a[col][col]
        det = det * pval
        inv = pval.inverse() if hasattr(pval, "inverse") else ring.one / pval
        for r in range(col + 1, n):
            f = a[r][col]
            if not f:
                continue
            f = f * inv
            for c in range(col + 1, n):
                if a[col][c]:
                    a[r][c] = a[r][c] - f * a[col][c]
            a[r][col] = ring.zero
    return det if sign == 1 else -det


def adjugate(m: LabeledMatrix) -> LabeledMatrix:
    """Classical adjoint, satisfying m @ adjugate(m) = det(m) * I.

    Computed from the characteristic polynomial (Cayley-Hamilton), so it is
    division-free and well defined for singular matrices.
    """
    if not m.is_square():
        raise NonSquare(f"{m.nrows}x{m.ncols}")
    ring = m.ring
    n = m.nrows
    if n == 0:
        return m
    if n == 1:
        return LabeledMatrix.identity(ring, m.row_labels)
    coeffs = berkowitz_charpoly(m)  # x^n + c_{n-1} x^{n-1} + ... + c_0
    ident = LabeledMatrix.identity(ring, m.row_labels)
    acc = ident
    for k in range(1, n):
        acc = (m @ acc) + ident.scale(coeffs[k])
    return acc if (n - 1) % 2 == 0 else -acc
