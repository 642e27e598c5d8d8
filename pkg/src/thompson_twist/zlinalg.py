"""Exact integer linear algebra for abelian twisted conjugacy.

Smith normal form with explicit unimodular transforms, cokernels, image
membership and canonical representatives of ``Z^n / Im(I - A)``.

Pivoting is deterministic: the smallest nonzero absolute value in the
active block, ties broken by the first position in row-major order.
Class representatives depend on this rule, so it must not change.
"""

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, FormatError, NotAutomorphism

__all__ = [
    "IntMatrix",
    "SnfResult",
    "Cardinality",
    "INFINITE",
    "snf",
    "invariant_factors",
    "coker_invariants",
    "reidemeister_of_matrix",
    "in_image",
    "twisted_equiv_abelian",
    "class_rep",
    "det",
    "unimodular_inverse",
    "matrix_to_json",
    "matrix_from_json",
]


class Cardinality(enum.Enum):
    INFINITE = "INFINITE"

    def __str__(self):
        return self.value


INFINITE = Cardinality.INFINITE


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch("matrix dimensions must be positive")
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise FormatError(f"matrix entry {e!r} is not an integer")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("rows must be nonempty and of equal length")
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self):
        return self.rows == self.cols

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch("inner dimensions differ")
            a, b = self.to_rows(), other.to_rows()
            return IntMatrix.from_rows(
                [[sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
                 for i in range(self.rows)]
            )
        v = list(other)
        if len(v) != self.cols:
            raise DimensionMismatch("vector length differs from column count")
        return [sum(self[i, j] * v[j] for j in range(self.cols)) for i in range(self.rows)]

    def __add__(self, other):
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __pow__(self, k):
        if not self.is_square or k < 0:
            raise DimensionMismatch("only non-negative powers of square matrices")
        out, base = IntMatrix.identity(self.rows), self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def transpose(self):
        return IntMatrix.from_rows([list(col) for col in zip(*self.to_rows())])

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == D`` with U, V unimodular and D in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]


def det(a):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise DimensionMismatch("determinant of a non-square matrix")
    m = a.to_rows()
    n = a.rows
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=4096)
def snf(a):
    """Smith normal form by row/column gcd reduction with tracked transforms.

    Results are cached per matrix; both are immutable.
    """
    m, n = a.rows, a.cols
    d = a.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    x = abs(d[i][j])
                    if x and (pivot is None or x < pivot[0]):
                        pivot = (x, i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return SnfResult(IntMatrix.from_rows(u), IntMatrix.from_rows(d), IntMatrix.from_rows(v))


def invariant_factors(a):
    """Diagonal of the Smith form, zeros included."""
    return snf(a).diagonal


def coker_invariants(a):
    """``(torsion, free_rank)`` with ``Z^rows / Im(a) = (+) Z/t (+) Z^free_rank``."""
    diag = invariant_factors(a)
    torsion = [x for x in diag if x > 1]
    rank = sum(1 for x in diag if x)
    return torsion, a.rows - rank


def reidemeister_of_matrix(a):
    """``#Coker(I - A)`` for an automorphism A of Z^n; INFINITE when det(I - A) = 0."""
    if not a.is_square:
        raise DimensionMismatch("Reidemeister number needs a square matrix")
    if abs(det(a)) != 1:
        raise NotAutomorphism(f"|det A| = {abs(det(a))}, not 1")
    b = IntMatrix.identity(a.rows) - a
    dt = abs(det(b))
    if dt == 0:
        return INFINITE
    product = 1
    for x in invariant_factors(b):
        product *= x
    if product != dt:
        raise ArithmeticError(f"|det(I-A)| = {dt} but invariant factors multiply to {product}")
    return dt


def in_image(a, v):
    """Whether ``a @ x == v`` has an integer solution x."""
    v = list(v)
    if len(v) != a.rows:
        raise DimensionMismatch("vector length differs from row count")
    res = snf(a)
    w = res.U @ v
    diag = res.diagonal
    for i, wi in enumerate(w):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if wi:
                return False
        elif wi % di:
            return False
    return True


def _one_minus(a):
    if not a.is_square:
        raise DimensionMismatch("twisted classes need a square matrix")
    return IntMatrix.identity(a.rows) - a


def twisted_equiv_abelian(u, v, a):
    """``u ~ v`` under ``x ~ g + x - A g``, i.e. ``u - v`` in Im(I - A)."""
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise DimensionMismatch("vectors differ in length")
    return in_image(_one_minus(a), [x - y for x, y in zip(u, v)])


def class_rep(v, a):
    """Canonical coordinates of ``v`` in ``Z^n / Im(I - A)``.

    ``U @ v`` reduced into ``[0, d_i)`` where the Smith factor d_i is
    positive and left as is where it is zero.
    """
    v = list(v)
    b = _one_minus(a)
    if len(v) != b.rows:
        raise DimensionMismatch("vector length differs from matrix size")
    res = snf(b)
    w = res.U @ v
    diag = res.diagonal
    return tuple(wi % diag[i] if i < len(diag) and diag[i] else wi for i, wi in enumerate(w))


def unimodular_inverse(a):
    """Exact inverse of a matrix with determinant +-1 (via its Smith form)."""
    if not a.is_square or abs(det(a)) != 1:
        raise NotAutomorphism("matrix is not unimodular")
    res = snf(a)
    # U A V = I  =>  A^-1 = V U
    return res.V @ res.U


def matrix_to_json(a):
    return {"rows": a.rows, "cols": a.cols, "entries": [str(x) for x in a.entries]}


def _int(x):
    if isinstance(x, bool):
        raise FormatError(f"matrix entry {x!r} is not an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise FormatError(f"matrix entry {x!r} is not an integer")


def matrix_from_json(doc):
    """Read ``{"rows", "cols", "entries"}`` or a plain list of rows."""
    if isinstance(doc, list):
        if not doc or not all(isinstance(r, list) for r in doc):
            raise FormatError("matrix must be a nonempty list of rows")
        return IntMatrix.from_rows([[_int(x) for x in r] for r in doc])
    if not isinstance(doc, dict):
        raise FormatError("matrix JSON must be an object or a list of rows")
    try:
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    except KeyError as exc:
        raise FormatError(f"matrix JSON missing {exc}") from None
    if not isinstance(entries, list):
        raise FormatError('"entries" must be a list')
    return IntMatrix(_int(rows), _int(cols), tuple(_int(x) for x in entries))
