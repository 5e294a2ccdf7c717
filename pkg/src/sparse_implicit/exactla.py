"""Exact linear algebra over Q.

Everything reduces to integer matrices (rows scaled by the lcm of their
denominators) and fraction-free elimination.  The elimination kernels come
from the compiled ``_kernels`` extension when it is importable, otherwise
from the pure-Python ``_kernels_py``; set ``SPARSE_IMPLICIT_PURE=1`` to force
the latter.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

from . import _bigint

if os.environ.get("SPARSE_IMPLICIT_PURE"):
    from . import _kernels_py as _k
    BACKEND = "python"
else:
    try:
        from . import _kernels as _k
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        from . import _kernels_py as _k
        BACKEND = "python"


class LinAlgError(ValueError):
    pass


def _canon(c):
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _row_scale(row):
    den = 1
    for c in row:
        if type(c) is not int:
            den = den * c.denominator // math.gcd(den, c.denominator)
    return den


def integer_rows(rows):
    """Scale each row to integers; returns ``(int_rows, product_of_scales)``."""
    out = []
    total = 1
    for row in rows:
        den = _row_scale(row)
        if den == 1:
            out.append([int(c) for c in row])
        else:
            out.append([int(c * den) for c in row])
            total *= den
    return out, total


class QMatrix:
    """Dense rational matrix, immutable by convention."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows, ncols=None):
        rows = [tuple(_canon(c) for c in r) for r in rows]
        if ncols is None:
            if not rows:
                raise LinAlgError("cannot infer the column count of an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise LinAlgError("ragged matrix")
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = tuple(rows)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_sparse(cls, nrows, ncols, entries):
        """``entries`` maps ``(i, j)`` to a value."""
        grid = [[0] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            grid[i][j] = v
        return cls(grid, ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def rows(self):
        return [list(r) for r in self._rows]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def transpose(self):
        return QMatrix([list(c) for c in zip(*self._rows)] if self.nrows else [],
                       self.nrows)

    def submatrix(self, rows, cols):
        return QMatrix([[self._rows[i][j] for j in cols] for i in rows], len(cols))

    def select_columns(self, cols):
        return self.submatrix(range(self.nrows), cols)

    def mul_vector(self, v):
        if len(v) != self.ncols:
            raise LinAlgError("dimension mismatch")
        return [_canon(sum(a * b for a, b in zip(r, v) if a and b)) for r in self._rows]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"QMatrix({self.nrows}x{self.ncols})"


def _as_rows(A):
    if isinstance(A, QMatrix):
        return A.rows(), A.ncols
    rows = [list(r) for r in A]
    return rows, (len(rows[0]) if rows else 0)


class KernelBasis:
    """Primitive integer basis vectors of a right kernel."""

    __slots__ = ("vectors", "ncols", "pivots")

    def __init__(self, vectors, ncols, pivots=()):
        self.vectors = [tuple(v) for v in vectors]
        self.ncols = ncols
        self.pivots = tuple(pivots)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]


SPARSE_DENSITY = 0.3


def _big(rows):
    if not _bigint.HAVE_GMPY2:
        return rows
    mpz = _bigint.mpz
    return [[mpz(x) if x else 0 for x in r] for r in rows]


def rank_int(rows, ncols):
    """Rank of an integer matrix given as a list of int lists.

    Sparse inputs go through pivot-by-sparsest-row elimination, which keeps
    fill-in and entry growth far below that of dense Bareiss.
    """
    if not rows or not ncols:
        return 0
    nnz = sum(1 for r in rows for x in r if x)
    if nnz < SPARSE_DENSITY * len(rows) * ncols:
        sp = [{j: x for j, x in enumerate(r) if x} for r in _big(rows)]
        return _k.sparse_rank(sp, ncols)
    if len(rows) > ncols:
        rows = [list(c) for c in zip(*rows)]
        ncols = len(rows[0])
    return _k.rank_bareiss(_big(rows), ncols)


def rank(A):
    """Exact rank by fraction-free elimination."""
    rows, ncols = _as_rows(A)
    if not rows or not ncols:
        return 0
    irows, _ = integer_rows(rows)
    return rank_int(irows, ncols)


def pivot_columns_int(rows, ncols):
    """Pivot columns of an integer matrix, scanning columns left to right."""
    if not rows or not ncols:
        return []
    return _k.pivot_columns(rows, ncols)


def _sparse_int_rows(rows):
    irows, _ = integer_rows(rows)
    return [{j: v for j, v in enumerate(r) if v} for r in irows]


def rref_sparse(sparse_rows, ncols):
    """RREF of integer rows given as ``{col: value}`` dicts."""
    return _k.sparse_rref(sparse_rows, ncols)


def kernel_basis_sparse(sparse_rows, ncols):
    """Kernel of an integer matrix given as sparse rows; vectors as dicts."""
    pivots, prows = _k.sparse_rref(sparse_rows, ncols)
    return pivots, _k.kernel_from_rref(pivots, prows, ncols)


def kernel_basis(A):
    """RREF-derived kernel basis.

    One vector per free column in ascending order: it has a positive entry
    at its free column, zeros at the other free columns, and coprime
    integer entries.
    """
    rows, ncols = _as_rows(A)
    pivots, vecs = kernel_basis_sparse(_sparse_int_rows(rows), ncols)
    dense = []
    for v in vecs:
        d = [0] * ncols
        for j, x in v.items():
            d[j] = x
        dense.append(tuple(d))
    return KernelBasis(dense, ncols, pivots)


def rref(A):
    """Reduced row echelon form over Q with unit pivots."""
    rows, ncols = _as_rows(A)
    pivots, prows = rref_sparse(_sparse_int_rows(rows), ncols)
    out = []
    for c, r in zip(pivots, prows):
        p = r[c]
        d = [0] * ncols
        for j, x in r.items():
            d[j] = _canon(Fraction(x, p))
        out.append(d)
    return pivots, out


def det_int(rows):
    return _k.det_bareiss(rows)


def determinant(A):
    rows, ncols = _as_rows(A)
    if len(rows) != ncols:
        raise LinAlgError("determinant of a non-square matrix")
    if not rows:
        return 1
    irows, scale = integer_rows(rows)
    d = _k.det_bareiss(irows)
    return _canon(Fraction(d, scale)) if scale != 1 else d


def minor(A, row_subset, col_subset):
    row_subset = list(row_subset)
    col_subset = list(col_subset)
    if len(row_subset) != len(col_subset):
        raise LinAlgError("minor needs equally many rows and columns")
    rows, ncols = _as_rows(A)
    n = len(rows)
    if any(not 0 <= i < n for i in row_subset) or any(not 0 <= j < ncols for j in col_subset):
        raise LinAlgError("minor index out of range")
    return determinant([[rows[i][j] for j in col_subset] for i in row_subset])


def is_in_span(vectors, v):
    """Whether ``v`` lies in the Q-span of ``vectors``."""
    if not vectors:
        return not any(v)
    return rank(list(vectors) + [list(v)]) == rank(list(vectors))
