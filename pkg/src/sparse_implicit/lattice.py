"""Convex lattice polygons in the plane.

Points are ordered globally by ``(x + y, x)``; every list of lattice points
returned here follows that order, which fixes row and column indexing of
the matrices built downstream.
"""

from __future__ import annotations

import math
from typing import NamedTuple


class LatticeError(ValueError):
    pass


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticePoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticePoint(self.x - other[0], self.y - other[1])

    def scaled(self, t):
        return LatticePoint(self.x * t, self.y * t)


class Edge(NamedTuple):
    start: LatticePoint
    end: LatticePoint
    lattice_length: int


def order_key(p):
    return (p[0] + p[1], p[0])


def sort_points(points):
    return sorted({LatticePoint(int(p[0]), int(p[1])) for p in points}, key=order_key)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _convex_hull(points):
    """Andrew's monotone chain; ccw, collinear points dropped."""
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return [LatticePoint(*p) for p in pts]
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return [LatticePoint(*p) for p in hull]


class LatticePolygon:
    """Convex hull of finitely many lattice points.

    ``vertices`` is counter-clockwise with no redundant vertices.  A point
    or a segment is representable (1 or 2 vertices); operations that need
    an honest polygon raise :class:`LatticeError` on those.
    """

    __slots__ = ("vertices", "_points")

    def __init__(self, points):
        verts = _convex_hull(points)
        if not verts:
            raise LatticeError("a polygon needs at least one point")
        self.vertices = tuple(verts)
        self._points = None

    @classmethod
    def hull(cls, points):
        return cls(points)

    # -- basic shape data --------------------------------------------------
    @property
    def dimension(self):
        return min(len(self.vertices) - 1, 2)

    def require_2d(self, what="operation"):
        if self.dimension < 2:
            raise LatticeError(f"{what} needs a 2-dimensional polygon")

    def edges(self):
        v = self.vertices
        if len(v) == 1:
            return []
        if len(v) == 2:
            a, b = v
            return [Edge(a, b, math.gcd(b.x - a.x, b.y - a.y))]
        out = []
        for i, a in enumerate(v):
            b = v[(i + 1) % len(v)]
            out.append(Edge(a, b, math.gcd(b.x - a.x, b.y - a.y)))
        return out

    def area2(self):
        """Twice the Euclidean area (shoelace)."""
        v = self.vertices
        s = 0
        for i, a in enumerate(v):
            b = v[(i + 1) % len(v)]
            s += a.x * b.y - a.y * b.x
        return abs(s)

    def boundary_count(self):
        if len(self.vertices) == 1:
            return 1
        if len(self.vertices) == 2:
            return self.edges()[0].lattice_length + 1
        return sum(e.lattice_length for e in self.edges())

    def interior_count(self):
        self.require_2d("interior count")
        # Pick: A = I + B/2 - 1
        return (self.area2() - self.boundary_count() + 2) // 2

    def bbox(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    # -- membership and enumeration ----------------------------------------
    def contains(self, p):
        v = self.vertices
        if len(v) == 1:
            return tuple(p) == tuple(v[0])
        if len(v) == 2:
            a, b = v
            if _cross(a, b, p):
                return False
            return (min(a.x, b.x) <= p[0] <= max(a.x, b.x)
                    and min(a.y, b.y) <= p[1] <= max(a.y, b.y))
        return all(_cross(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))

    __contains__ = contains

    def _row_range(self, y):
        lo, hi = self.bbox()[0], self.bbox()[2]
        v = self.vertices
        for i, a in enumerate(v):
            b = v[(i + 1) % len(v)]
            dx, dy = b.x - a.x, b.y - a.y
            # inside iff dx*(y - a.y) - dy*(x - a.x) >= 0
            rhs = dx * (y - a.y)
            if dy == 0:
                if rhs < 0:
                    return None
            elif dy > 0:
                hi = min(hi, a.x + rhs // dy)
            else:
                lo = max(lo, a.x - rhs // (-dy))
        return (lo, hi) if lo <= hi else None

    def lattice_points(self):
        """All lattice points of the polygon in the global order."""
        if self._points is None:
            v = self.vertices
            if len(v) == 1:
                pts = [v[0]]
            elif len(v) == 2:
                a, b = v
                g = math.gcd(b.x - a.x, b.y - a.y)
                sx, sy = (b.x - a.x) // g, (b.y - a.y) // g
                pts = [LatticePoint(a.x + k * sx, a.y + k * sy) for k in range(g + 1)]
            else:
                _, y0, _, y1 = self.bbox()
                pts = []
                for y in range(y0, y1 + 1):
                    r = self._row_range(y)
                    if r:
                        pts.extend(LatticePoint(x, y) for x in range(r[0], r[1] + 1))
            self._points = tuple(sorted(pts, key=order_key))
        return list(self._points)

    def __len__(self):
        return len(self.lattice_points())

    # -- constructions ------------------------------------------------------
    def dilate(self, t):
        if not isinstance(t, int) or t < 1:
            raise LatticeError("dilation factor must be a positive integer")
        return LatticePolygon([p.scaled(t) for p in self.vertices])

    def translate(self, v):
        return LatticePolygon([p + v for p in self.vertices])

    def minkowski_sum(self, other):
        return LatticePolygon([p + q for p in self.vertices for q in other.vertices])

    __add__ = minkowski_sum

    def contains_polygon(self, other):
        return all(self.contains(p) for p in other.vertices)

    # -- dunder -------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    def __repr__(self):
        inner = ", ".join(f"({p.x},{p.y})" for p in self.vertices)
        return f"LatticePolygon([{inner}])"


# ---------------------------------------------------------------------------
# module-level operations


def newton_polygon(f):
    if not f:
        raise LatticeError("undefined Newton polygon of the zero polynomial")
    return LatticePolygon(f.support())


def hull_of(fs):
    fs = list(fs)
    if not fs:
        raise LatticeError("hull of an empty list of polynomials")
    pts = []
    for f in fs:
        if not f:
            raise LatticeError("undefined Newton polygon of the zero polynomial")
        pts.extend(f.support())
    return LatticePolygon(pts)


def lattice_points(P):
    return P.lattice_points()


def dilate(P, t):
    return P.dilate(t)


def lattice_area(P):
    P.require_2d("lattice area")
    return P.area2()


def ehrhart_count(P, t):
    """Number of lattice points of ``tP`` from the Ehrhart polynomial."""
    P.require_2d("Ehrhart count")
    if t < 1:
        raise LatticeError("dilation factor must be a positive integer")
    # vol*t^2 + (B/2)*t + 1 with vol = area2/2
    return (P.area2() * t * t + P.boundary_count() * t) // 2 + 1


def decompose_sum(beta, P):
    """``(p, q)`` in P with ``p + q = beta``; ``p`` is the first in the global order."""
    beta = LatticePoint(*beta)
    for p in P.lattice_points():
        q = beta - p
        if P.contains(q):
            return p, q
    raise LatticeError(f"{tuple(beta)} is not in 2P")


def _quad(a, b, n):
    """Hull of (0,0), (a,0), (0,b), (a+nb,b); may be degenerate."""
    if a < 0 or b < 0 or n < 0:
        raise LatticeError("Hirzebruch parameters must be nonnegative")
    return LatticePolygon([(0, 0), (a, 0), (0, b), (a + n * b, b)])


def hirzebruch(a, b, n=0):
    if a < 1 or b < 1:
        raise LatticeError("Hirzebruch quadrilateral needs a, b >= 1")
    if n < 0:
        raise LatticeError("Hirzebruch twist n must be nonnegative")
    return _quad(a, b, n)


def hirzebruch_support(a, b, n=0, orientation=None):
    """Syzygy support polygon for fs inside ``H_{a,b,n}``.

    Horizontal is ``H_{2a-1,b-1,n}``, vertical ``H_{a-1,2b-1,n}``.  With no
    orientation given, the one with fewer lattice points wins (horizontal on
    ties).  Returns ``(polygon, orientation)``.
    """
    hirzebruch(a, b, n)
    horiz = _quad(2 * a - 1, b - 1, n)
    vert = _quad(a - 1, 2 * b - 1, n)
    if orientation is None:
        orientation = "vertical" if len(vert) < len(horiz) else "horizontal"
    if orientation in ("h", "horizontal"):
        return horiz, "horizontal"
    if orientation in ("v", "vertical"):
        return vert, "vertical"
    raise LatticeError(f"unknown orientation {orientation!r}")


def _divisors_desc(g):
    ds = set()
    for k in range(1, math.isqrt(g) + 1):
        if g % k == 0:
            ds.add(k)
            ds.add(g // k)
    return sorted(ds, reverse=True)


def is_unimodular_triangle(P):
    return len(P.vertices) == 3 and P.area2() == 1


def refined_decomposition(P):
    """``(d, P')`` with ``P = v0 + d*P'`` and P' free of interior points, or None.

    ``v0`` is the first vertex; d is the largest admissible divisor of the
    gcd of the edge lattice lengths.
    """
    P.require_2d("refined support")
    g = 0
    for e in P.edges():
        g = math.gcd(g, e.lattice_length)
    v0 = P.vertices[0]
    for d in _divisors_desc(g):
        rel = [p - v0 for p in P.vertices]
        if any(p.x % d or p.y % d for p in rel):
            continue
        Pp = LatticePolygon([(p.x // d, p.y // d) for p in rel])
        if Pp.interior_count() == 0:
            return d, Pp
    return None


def refined_support(P):
    """Smaller syzygy support from the ``P = dP'`` refinement, else ``2P``.

    The result is translated by ``2*v0`` so that it lies inside ``2P``;
    translating a support does not change the syzygy space up to a monomial.
    """
    dec = refined_decomposition(P)
    if dec is None:
        return P.dilate(2)
    d, Pp = dec
    t = 2 * d - 2 if is_unimodular_triangle(Pp) else 2 * d - 1
    v0 = P.vertices[0]
    if t == 0:
        return LatticePolygon([v0 + v0])
    return Pp.dilate(t).translate(v0 + v0)


def edge_restriction(f, E):
    """Sum of the terms of ``f`` whose exponents lie on the segment ``E``."""
    a, b = E.start, E.end
    seg = LatticePolygon([a, b])
    return type(f)({e: c for e, c in f.items() if seg.contains(e)})


def simplex(d):
    """The triangle with vertices (0,0), (d,0), (0,d)."""
    return LatticePolygon([(0, 0), (d, 0), (0, d)])
