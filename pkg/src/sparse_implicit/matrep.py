"""Matrix representations built from linear syzygies.

A :class:`MatRep` stores four integer matrices ``C_0..C_3`` of the same
shape; the entry at (row beta, column j) is the linear form
``sum_i C_i[beta][j] * T_i``, i.e. the coefficient of ``s^beta`` in
``L_j = sum_i h_i^(j) T_i``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import exactla, upoly
from .interp import LinearMatrix
from .lattice import (LatticePolygon, hirzebruch, hirzebruch_support, hull_of,
                      refined_support)
from .polyring import BiPoly, LinearForm, TPoly, _canon
from .syzygy import (SupportSet, as_support, coefficient_system, diagnostics,
                     syzygy_basis, vector_to_syzygy)


class RepresentationError(ValueError):
    pass


SAMPLE_POINTS = tuple((1, 2**k, 3**k, 5**k) for k in range(1, 4))


class MatRep:
    __slots__ = ("rows", "ncols", "coeffs", "polygon", "support", "variant",
                 "nvars", "diagnostics", "basis", "_generic_rank", "meta")

    def __init__(self, rows, coeffs, polygon=None, support=None, variant="general",
                 nvars=4, diagnostics=None, basis=None, meta=None):
        self.rows = tuple(rows)
        self.coeffs = tuple(tuple(tuple(r) for r in C) for C in coeffs)
        if len(self.coeffs) != 4:
            raise RepresentationError("need four coefficient matrices")
        self.ncols = len(self.coeffs[0][0]) if self.rows else 0
        self.polygon = polygon
        self.support = support
        self.variant = variant
        self.nvars = nvars
        self.diagnostics = diagnostics
        self.basis = basis
        self.meta = dict(meta or {})
        self._generic_rank = None

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        return LinearForm(tuple(C[i][j] for C in self.coeffs))

    def entries(self):
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def linear_matrix(self):
        return LinearMatrix(self.coeffs)

    def evaluate(self, point):
        """M(point) as a list of rows of exact rationals."""
        p = [_canon(x) for x in _pad_point(point)]
        C0, C1, C2, C3 = self.coeffs
        return [[_canon(p[0] * a + p[1] * b + p[2] * c + p[3] * d)
                 for a, b, c, d in zip(C0[r], C1[r], C2[r], C3[r])]
                for r in range(self.nrows)]

    def rank_at(self, point):
        return exactla.rank(self.evaluate(point))

    def generic_rank(self):
        if self._generic_rank is None:
            best = 0
            for p in SAMPLE_POINTS:
                best = max(best, self.rank_at(p))
                if best == min(self.shape):
                    break
            self._generic_rank = best
        return self._generic_rank

    @property
    def full_rank_ok(self):
        return self.generic_rank() == min(self.shape)

    def with_columns(self, order):
        """Same representation with columns permuted (or a subset)."""
        order = list(order)
        coeffs = [[[row[j] for j in order] for row in C] for C in self.coeffs]
        basis = None
        if self.basis is not None:
            basis = [self.basis[j] for j in order]
        return MatRep(self.rows, coeffs, self.polygon, self.support, self.variant,
                      self.nvars, self.diagnostics, basis, self.meta)

    def to_tpoly_matrix(self):
        return [[self.entry(i, j).to_tpoly() for j in range(self.ncols)]
                for i in range(self.nrows)]

    def __repr__(self):
        return f"MatRep({self.nrows}x{self.ncols}, variant={self.variant!r})"


def _pad_point(point):
    p = list(point)
    if len(p) not in (3, 4):
        raise RepresentationError("a point needs 3 or 4 homogeneous coordinates")
    if len(p) == 3:
        p.append(0)
    return p


def matrep_from_vectors(vectors, support, **kw):
    """Assemble a MatRep from syzygy coordinate vectors on ``support``."""
    S = as_support(support)
    n = len(S)
    ncols = len(vectors)
    coeffs = [[[0] * ncols for _ in range(n)] for _ in range(4)]
    for j, v in enumerate(vectors):
        items = v.items() if isinstance(v, dict) else enumerate(v)
        for idx, x in items:
            if x:
                coeffs[idx // n][idx % n][j] = x
    kw.setdefault("support", S)
    return MatRep(S.points, coeffs, **kw)


def _check_polygon(fs, P):
    nz = [f for f in fs if f]
    hull = hull_of(nz)
    if hull.dimension < 2:
        raise RepresentationError("the Newton polygon of the input is degenerate")
    if P is None:
        P = hull
    elif not P.contains_polygon(hull):
        raise RepresentationError("the input polynomials do not fit in the polygon P")
    P.require_2d("matrix representation")
    return P


def build_matrix_rep(fs, P=None, S=None, variant="general"):
    """Matrix representation from syzygies supported on S (default 2P).

    ``variant="refined"`` with no explicit S takes the smaller support of
    the ``P = dP'`` refinement.
    """
    fs = list(fs)
    P = _check_polygon(fs, P)
    if S is None:
        S = refined_support(P) if variant == "refined" else P.dilate(2)
    S = as_support(S)
    basis = syzygy_basis(fs, S, P)
    if not basis.vectors:
        raise RepresentationError("no syzygies at this support")
    diag = diagnostics(fs, P)
    M = matrep_from_vectors(basis.vectors, S, polygon=P, variant=variant,
                            diagnostics=diag, basis=basis.elements,
                            meta={"B_shape": basis.shape, "B_rank": basis.rank})
    diag.full_rank_ok = M.full_rank_ok
    return M


def build_hirzebruch_rep(fs, a, b, n=0, orientation=None):
    """Representation with support H_{2a-1,b-1,n} or H_{a-1,2b-1,n}."""
    H = hirzebruch(a, b, n)
    fs = list(fs)
    P = _check_polygon(fs, H)
    S, orient = hirzebruch_support(a, b, n, orientation)
    M = build_matrix_rep(fs, P, S, variant="hirzebruch")
    M.meta.update(hirzebruch=(a, b, n), orientation=orient)
    return M


# ---------------------------------------------------------------------------
# curves


def as_univariate(f):
    """BiPoly in s1 only, from a BiPoly or a coefficient list."""
    if isinstance(f, BiPoly):
        if any(e[1] for e in f.support()):
            raise RepresentationError("curve polynomials must not involve s2")
        return f
    return BiPoly({(k, 0): c for k, c in enumerate(f) if c})


def _coeff_list(f):
    d = f.degree_in(0)
    return [f.coeff((k, 0)) for k in range(d + 1)]


def moving_lines_matrix(f0, f1, f2, nu=None):
    """Moving-line matrix M_nu of a planar curve (linear forms in T0, T1, T2)."""
    fs = [as_univariate(f) for f in (f0, f1, f2)]
    if not any(fs):
        raise RepresentationError("all curve polynomials vanish")
    d = max(f.degree_in(0) for f in fs if f)
    if d < 1:
        raise RepresentationError("a curve parametrization needs degree >= 1")
    if nu is None:
        nu = d - 1
    if nu < d - 1:
        raise RepresentationError(f"nu = {nu} is below d - 1 = {d - 1}")
    g = []
    for f in fs:
        if f:
            g = upoly.gcd(g, _coeff_list(f))
    if len(g) > 1:
        raise RepresentationError("curve polynomials have a common factor")
    P = LatticePolygon([(0, 0), (d, 0)])
    S = SupportSet(LatticePolygon([(0, 0), (nu, 0)]))
    system = coefficient_system(fs + [BiPoly.zero()], S, P)
    n = len(S)
    # drop the h3 block: with f3 = 0 it only adds trivial syzygies
    rows = [{j: v for j, v in r.items() if j < 3 * n} for r in system.rows]
    pivots, vecs = exactla.kernel_basis_sparse(rows, 3 * n)
    if not vecs:
        raise RepresentationError("no syzygies at this degree")
    basis = [vector_to_syzygy(v, S) for v in vecs]
    return matrep_from_vectors(vecs, S, polygon=P, variant="curve", nvars=3,
                               basis=basis, meta={"nu": nu, "d": d})


# ---------------------------------------------------------------------------
# evaluation-level operations


def generic_rank(M):
    return M.generic_rank()


def integral_point(p):
    """The primitive integer representative of a rational projective point."""
    p = [Fraction(x) for x in p]
    den = 1
    for x in p:
        den = math.lcm(den, x.denominator)
    q = [int(x * den) for x in p]
    g = 0
    for x in q:
        g = math.gcd(g, x)
    return [x // g for x in q] if g > 1 else q


def membership(M, p):
    """True iff the rank of M(p) drops below the generic rank."""
    p = _pad_point(p)
    if not any(p):
        raise RepresentationError("the zero tuple is not a projective point")
    return M.rank_at(integral_point(p)) < M.generic_rank()


def squareify(M):
    """``M * M^T`` as a rows x rows matrix of quadratic TPolys."""
    if M.nrows > M.ncols:
        raise RepresentationError("squareify needs rows <= cols")
    L = M.to_tpoly_matrix()
    n = M.nrows
    out = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            acc = TPoly.zero()
            for j in range(M.ncols):
                x, y = L[a][j], L[b][j]
                if x and y:
                    acc = acc + x * y
            out[a][b] = out[b][a] = acc
    return out


def to_fraction_grid(M, point):
    return [[Fraction(x) for x in r] for r in M.evaluate(point)]
