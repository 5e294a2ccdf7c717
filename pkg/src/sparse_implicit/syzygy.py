"""Linear syzygies of (f0, f1, f2, f3) with prescribed monomial support."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import exactla
from .lattice import LatticePoint, LatticePolygon, edge_restriction, hull_of
from .polyring import BiPoly, poly_gcd


class SyzygyError(ValueError):
    pass


class SupportSet:
    """Allowed exponents of each syzygy component: the lattice points of a polygon."""

    __slots__ = ("polygon", "points", "_index")

    def __init__(self, polygon):
        if not isinstance(polygon, LatticePolygon):
            polygon = LatticePolygon(polygon)
        self.polygon = polygon
        self.points = tuple(polygon.lattice_points())
        self._index = {p: k for k, p in enumerate(self.points)}

    def index(self, p):
        return self._index[LatticePoint(*p)]

    def __contains__(self, p):
        return LatticePoint(*p) in self._index

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"SupportSet({self.polygon!r}, {len(self.points)} points)"


def as_support(S):
    return S if isinstance(S, SupportSet) else SupportSet(S)


def _padded(fs):
    fs = list(fs)
    if len(fs) > 4 or not fs:
        raise SyzygyError("expected one to four polynomials")
    return fs + [BiPoly.zero()] * (4 - len(fs))


def _cleared(fs):
    """Common-denominator integer copies of fs (the syzygy space is unchanged)."""
    den = 1
    for f in fs:
        for c in f.terms.values():
            if type(c) is not int:
                den = den * c.denominator // math.gcd(den, c.denominator)
    return [{e: int(c * den) for e, c in f.items()} for f in fs]


@dataclass
class CoefficientSystem:
    """The linear map (h0..h3) -> sum h_i f_i in monomial coordinates."""

    rows: list  # sparse integer rows, {col: value}
    row_points: tuple
    support: SupportSet
    ncols: int

    @property
    def shape(self):
        return (len(self.row_points), self.ncols)

    def to_qmatrix(self):
        grid = [[0] * self.ncols for _ in self.row_points]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                grid[i][j] = v
        return exactla.QMatrix(grid, self.ncols)

    def column_label(self, j):
        n = len(self.support)
        return j // n, self.support.points[j % n]


def coefficient_system(fs, S, P=None):
    fs = _padded(fs)
    S = as_support(S)
    nz = [f for f in fs if f]
    if not nz:
        raise SyzygyError("all input polynomials vanish")
    if P is None:
        P = hull_of(nz)
    for f in nz:
        if not all(P.contains(e) for e in f.support()):
            raise SyzygyError("a polynomial has support outside the polygon P")
    row_poly = P.minkowski_sum(S.polygon)
    row_points = tuple(row_poly.lattice_points())
    row_index = {p: k for k, p in enumerate(row_points)}
    ints = _cleared(fs)
    n = len(S)
    rows = [dict() for _ in row_points]
    for i, f in enumerate(ints):
        for k, beta in enumerate(S.points):
            col = i * n + k
            for e, c in f.items():
                g = (beta[0] + e[0], beta[1] + e[1])
                rows[row_index[g]][col] = c
    return CoefficientSystem(rows, row_points, S, 4 * n)


def build_coefficient_matrix(fs, S, P=None):
    """Matrix of ``(h_i) -> sum_i h_i f_i``; columns (i, beta) i-major."""
    return coefficient_system(fs, S, P).to_qmatrix()


@dataclass
class SyzygyBasis:
    elements: list
    support: SupportSet
    vectors: list  # integer coordinate vectors, length 4*|S|
    rank: int = 0
    shape: tuple = (0, 0)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, j):
        return self.elements[j]


def vector_to_syzygy(v, S):
    S = as_support(S)
    n = len(S)
    comps = [dict() for _ in range(4)]
    items = v.items() if isinstance(v, dict) else enumerate(v)
    for j, x in items:
        if x:
            comps[j // n][S.points[j % n]] = x
    return tuple(BiPoly(c) for c in comps)


def syzygy_to_vector(h, S):
    S = as_support(S)
    n = len(S)
    v = [0] * (4 * n)
    for i, hi in enumerate(_padded(h)):
        for e, c in hi.items():
            if e not in S:
                raise SyzygyError(f"exponent {e} of h{i} lies outside the support")
            v[i * n + S.index(e)] = c
    return v


def syzygy_basis(fs, S, P=None):
    """Deterministic basis of the syzygies supported on S (RREF kernel)."""
    system = coefficient_system(fs, S, P)
    pivots, vecs = exactla.kernel_basis_sparse(system.rows, system.ncols)
    S = system.support
    dense = []
    for v in vecs:
        d = [0] * system.ncols
        for j, x in v.items():
            d[j] = x
        dense.append(d)
    elements = [vector_to_syzygy(v, S) for v in vecs]
    return SyzygyBasis(elements, S, dense, len(pivots), system.shape)


def is_syzygy(fs, h):
    fs = _padded(fs)
    h = _padded(h)
    total = BiPoly.zero()
    for hi, fi in zip(h, fs):
        if hi and fi:
            total = total + hi * fi
    return not total


def in_span(basis, h):
    """Whether the syzygy ``h`` lies in the span of ``basis``."""
    v = syzygy_to_vector(h, basis.support)
    return exactla.is_in_span(basis.vectors, v)


@dataclass
class Diagnostics:
    gcd_ok: bool
    edge_ok: dict = field(default_factory=dict)
    full_rank_ok: object = None  # filled in once the matrix rank is known
    common_factor: object = None

    @property
    def edges_ok(self):
        return all(self.edge_ok.values())

    @property
    def passed(self):
        return self.gcd_ok and self.edges_ok and self.full_rank_ok is not False

    def as_dict(self):
        return {
            "gcd_ok": self.gcd_ok,
            "edge_ok": [
                {"edge": [list(e.start), list(e.end)], "ok": ok}
                for e, ok in self.edge_ok.items()
            ],
            "full_rank_ok": self.full_rank_ok,
        }


def common_factor(fs):
    g = None
    for f in fs:
        if not f:
            continue
        g = f.primitive() if g is None else poly_gcd(g, f)
        if g.is_monomial():
            break
    return g


def diagnostics(fs, P=None):
    """Advisory checks: no common factor, and every edge of P sees some f_i."""
    fs = [f for f in _padded(fs)]
    nz = [f for f in fs if f]
    if P is None:
        P = hull_of(nz)
    g = common_factor(nz)
    gcd_ok = g is not None and g.is_monomial()
    edge_ok = {}
    for E in P.edges():
        edge_ok[E] = any(edge_restriction(f, E) for f in nz)
    return Diagnostics(gcd_ok, edge_ok, None, None if gcd_ok else g)
