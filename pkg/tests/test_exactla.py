import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sparse_implicit import _kernels_py, exactla
from sparse_implicit.exactla import (LinAlgError, QMatrix, determinant, is_in_span,
                                     kernel_basis, minor, rank, rref)
from sparse_implicit.syzygy import build_coefficient_matrix

from fixtures import QUAD_FS, QUAD_P

try:
    from sparse_implicit import _kernels as _kernels_c
except ImportError:  # pragma: no cover - extension not built
    _kernels_c = None


def cofactor_det(a):
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    return sum((-1) ** j * a[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in a[1:]])
               for j in range(n) if a[0][j])


def lu_det(a):
    """Gaussian elimination over Fraction with partial pivoting."""
    m = [[Fraction(x) for x in r] for r in a]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def rand_matrix(rng, n, m, lo=-9, hi=9, zero_bias=0.3):
    return [[0 if rng.random() < zero_bias else rng.randint(lo, hi) for _ in range(m)]
            for _ in range(n)]


small = st.integers(-5, 5)
matrices = st.integers(1, 7).flatmap(
    lambda n: st.integers(1, 7).flatmap(
        lambda m: st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n)))


def test_rank_examples():
    assert rank(QMatrix.identity(5)) == 5
    assert rank(QMatrix.zeros(3, 4)) == 0
    B = build_coefficient_matrix(QUAD_FS, QUAD_P.dilate(2), QUAD_P)
    assert B.shape == (22, 48) and rank(B) == 22


def test_kernel_examples():
    A = QMatrix([[2, 1], [1, 1]])
    assert len(kernel_basis(A)) == 0
    K = kernel_basis(QMatrix([[1, 1]]))
    assert K.vectors == [(-1, 1)]
    B = build_coefficient_matrix(QUAD_FS, QUAD_P.dilate(2), QUAD_P)
    assert len(kernel_basis(B)) == 26


def test_determinant_examples():
    assert determinant(QMatrix.identity(4)) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[Fraction(1, 2), 1], [3, Fraction(1, 3)]]) == Fraction(-17, 6)
    with pytest.raises(LinAlgError):
        determinant([[1, 2, 3]])
    rng = random.Random(1)
    A = rand_matrix(rng, 10, 10, zero_bias=0.1)
    d = determinant(A)
    assert d == lu_det(A)
    for rows in itertools.combinations(range(10), 4):
        cols = rows[::-1]
        sub = [[A[i][j] for j in sorted(cols)] for i in rows]
        assert minor(A, rows, sorted(cols)) == cofactor_det(sub)
        break


def test_minor_examples():
    A = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    assert minor(A, [0, 1, 2], [0, 1, 2]) == determinant(A)
    assert minor(A, [1], [2]) == 6
    dep = [[1, 2, 3], [2, 4, 6]]  # columns 0 and 1 proportional
    assert minor(dep, [0, 1], [0, 1]) == 0
    with pytest.raises(LinAlgError):
        minor(A, [0, 1], [0])


@pytest.mark.parametrize("n", range(1, 13))
def test_bareiss_matches_lu(n):
    rng = random.Random(n)
    A = rand_matrix(rng, n, n, -30, 30, 0.2)
    assert determinant(A) == lu_det(A)
    if n <= 5:
        assert determinant(A) == cofactor_det(A)


def test_rational_determinant():
    rng = random.Random(5)
    A = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)] for _ in range(5)]
    assert determinant(A) == lu_det(A)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_nullity_and_kernel(a):
    A = QMatrix(a)
    K = kernel_basis(A)
    r = rank(A)
    assert r + len(K) == A.ncols
    assert r == sympy.Matrix(a).rank()
    for v in K:
        assert not any(A.mul_vector(list(v)))
        g = 0
        for x in v:
            g = abs(int(x)) if g == 0 else __import__("math").gcd(g, int(x))
        assert g == 1


@settings(max_examples=50, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_kernel_span_row_order_invariant(a, rnd):
    perm = list(a)
    rnd.shuffle(perm)
    K1 = kernel_basis(QMatrix(a))
    K2 = kernel_basis(QMatrix(perm))
    assert K1.vectors == K2.vectors  # RREF is unique, hence so is the basis
    for v in K2:
        assert is_in_span(K1.vectors, v)


def test_kernel_convention():
    A = QMatrix([[1, 2, 0, 3], [0, 0, 1, 4]])
    K = kernel_basis(A)
    assert K.pivots == (0, 2)
    assert K.vectors == [(-2, 1, 0, 0), (-3, 0, -4, 1)]
    pivots, R = rref(A)
    assert R == [[1, 2, 0, 3], [0, 0, 1, 4]]


def test_rref_unit_pivots_against_sympy():
    rng = random.Random(2)
    A = rand_matrix(rng, 5, 7)
    pivots, R = rref(A)
    want, wp = sympy.Matrix(A).rref()
    assert tuple(pivots) == wp
    assert [[Fraction(int(x.p), int(x.q)) for x in want.row(i)] for i in range(len(pivots))] == R


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
def test_backends_agree():
    rng = random.Random(9)
    for _ in range(150):
        n, m = rng.randint(1, 8), rng.randint(1, 9)
        A = rand_matrix(rng, n, m, -40, 40, 0.5)
        sp = [{j: x for j, x in enumerate(r) if x} for r in A]
        assert _kernels_c.sparse_rref(sp, m) == _kernels_py.sparse_rref(sp, m)
        assert _kernels_c.sparse_rank(sp, m) == _kernels_py.sparse_rank(sp, m)
        assert _kernels_c.pivot_columns(A, m) == _kernels_py.pivot_columns(A, m)
        assert _kernels_c.rank_bareiss(A, m) == _kernels_py.rank_bareiss(A, m)
        piv, rows = _kernels_py.sparse_rref(sp, m)
        assert _kernels_c.kernel_from_rref(piv, rows, m) == _kernels_py.kernel_from_rref(piv, rows, m)
        if n == m:
            assert _kernels_c.det_bareiss(A) == _kernels_py.det_bareiss(A)


def test_backend_flag():
    assert exactla.BACKEND in ("cython", "python")


def test_dense_and_sparse_rank_paths_agree():
    rng = random.Random(4)
    for _ in range(40):
        A = rand_matrix(rng, rng.randint(1, 9), rng.randint(1, 9), -20, 20, rng.random())
        dense = _kernels_py.rank_bareiss(A, len(A[0]))
        sparse = _kernels_py.sparse_rank([{j: x for j, x in enumerate(r) if x} for r in A], len(A[0]))
        assert dense == sparse == exactla.rank(A)


def test_pivot_columns_nonzero_minor():
    rng = random.Random(8)
    A = rand_matrix(rng, 4, 9, zero_bias=0.6)
    piv = exactla.pivot_columns_int(A, 9)
    assert len(piv) == rank(A)
    if len(piv) == 4:
        assert minor(A, range(4), piv) != 0


def test_qmatrix_basics():
    A = QMatrix([[1, Fraction(1, 2)], [0, 3]])
    assert A.shape == (2, 2)
    assert A.transpose().rows() == [[1, 0], [Fraction(1, 2), 3]]
    assert A.mul_vector([2, 2]) == [3, 6]
    with pytest.raises(LinAlgError):
        QMatrix([[1, 2], [3]])
    assert QMatrix.from_sparse(2, 2, {(0, 1): 5}).rows() == [[0, 5], [0, 0]]


def test_env_fallbacks_run_pipeline():
    import os
    import subprocess
    import sys

    code = ("import sys; sys.path.insert(0, %r);"
            "from fixtures import QUAD_FS;"
            "from sparse_implicit import exactla, _bigint;"
            "from sparse_implicit.implicit import implicit_equation;"
            "r = implicit_equation(QUAD_FS);"
            "print(exactla.BACKEND, _bigint.HAVE_GMPY2, r.degree, r.certified)"
            % os.path.dirname(__file__))
    env = dict(os.environ, SPARSE_IMPLICIT_PURE="1", SPARSE_IMPLICIT_NO_GMPY="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, timeout=60)
    assert out.stdout.split() == ["python", "False", "3", "True"], out.stderr
