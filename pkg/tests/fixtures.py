"""Parametrizations used across the test suite."""

from pathlib import Path

from sparse_implicit.expr import parse_system
from sparse_implicit.lattice import LatticePolygon
from sparse_implicit.polyring import BiPoly

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

# lattice points p0..p4 of the quadrilateral (0,0),(2,0),(1,1),(0,1)
QUAD_POINTS = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)]


def _on_quad(cs):
    return BiPoly({p: c for p, c in zip(QUAD_POINTS, cs)})


# f3's coefficient on p1 is 3: with 0 the known first syzygy is not a syzygy
QUAD_FS = [
    _on_quad([1, 3, 1, 2, 1]),
    _on_quad([5, -1, -1, 2, -1]),
    _on_quad([7, 3, 2, 6, 3]),
    _on_quad([11, 3, 4, 3, 5]),
]
QUAD_P = LatticePolygon([(0, 0), (2, 0), (1, 1), (0, 1)])

QUAD_H1 = [
    _on_quad([-196, 504, -257, 672, 234]),
    _on_quad([0, 0, -237, 420, -168]),
    _on_quad([28, 0, 10, -364, 226]),
    _on_quad([0, 0, 0, 0, -216]),
]

# (0,0),(1,0),... coefficients of the implicit cubic, first terms only
QUAD_F_LEADING = {
    (3, 0, 0, 0): 2643, (2, 1, 0, 0): 2905, (1, 2, 0, 0): 1345, (0, 3, 0, 0): 91,
    (2, 0, 1, 0): -8, (1, 1, 1, 0): -444, (0, 2, 1, 0): 284,
}

# six-monomial parametrization; variables (s, t) written as (s1, s2)
SPARSE6_FS, _ = parse_system([
    "s1*s2^6 + 2", "s1*s2^5 - 3*s1*s2^3", "s1*s2^4 + 5*s1^2*s2^6", "2 + s1^2*s2^6",
])
SPARSE6_P = LatticePolygon([(0, 0), (1, 6), (2, 6)])


def _T(a, b, c, d):
    return (a, b, c, d)


SPARSE6_F = {
    _T(2, 4, 0, 0): 2809, _T(0, 6, 0, 0): 124002, _T(3, 2, 1, 0): -5618,
    _T(1, 4, 1, 0): 66816, _T(4, 0, 2, 0): 2809, _T(2, 2, 2, 0): -50580,
    _T(0, 4, 2, 0): 86976, _T(3, 0, 3, 0): 212, _T(1, 2, 3, 0): -14210,
    _T(2, 0, 4, 0): 3078, _T(0, 2, 4, 0): 13632, _T(1, 0, 5, 0): 116,
    _T(0, 0, 6, 0): 841, _T(3, 2, 0, 1): 14045, _T(1, 4, 0, 1): -169849,
    _T(4, 0, 1, 1): -14045, _T(2, 2, 1, 1): 261327, _T(0, 4, 1, 1): -468288,
    _T(3, 0, 2, 1): -7208, _T(1, 2, 2, 1): 157155, _T(2, 0, 3, 1): -31098,
    _T(0, 2, 3, 1): -129215, _T(1, 0, 4, 1): -4528, _T(0, 0, 5, 1): -12673,
    _T(2, 2, 0, 2): -16695, _T(0, 4, 0, 2): 169600, _T(3, 0, 1, 2): 30740,
    _T(1, 2, 1, 2): -433384, _T(2, 0, 2, 2): 82434, _T(0, 2, 2, 2): 269745,
    _T(1, 0, 3, 2): 36696, _T(0, 0, 4, 2): 63946, _T(1, 2, 0, 3): 2775,
    _T(0, 2, 1, 3): 177675, _T(1, 0, 2, 3): -85360, _T(0, 0, 3, 3): -109490,
    _T(0, 2, 0, 4): -125, _T(1, 0, 1, 4): 2900, _T(0, 0, 2, 4): 7325,
    _T(0, 0, 1, 5): -125,
}
# listed on T0^2*T2*T3^4 (total degree 7); the sextic has the term on T0^2*T2*T3^3
SPARSE6_F_BAD_TERM = (_T(2, 0, 1, 4), _T(2, 0, 1, 3), -19470)

# rectangle [0,2]x[0,2]; f1 keeps its repeated s2^2 term
RECT_FS, _ = parse_system([
    "3*s1^2*s2-2*s1*s2^2-s1^2+s1*s2-3*s1-s2+4-s2^2",
    "3*s1^2*s2-s1^2-3*s1*s2-s1+s2+s2^2+s2^2+s1^2*s2^2",
    "2*s1^2*s2^2-3*s1^2*s2-s1^2+s1*s2+3*s1-3*s2+2-s2^2",
    "2*s1^2*s2^2-3*s1^2*s2-2*s1*s2^2+s1^2+5*s1*s2-3*s1-3*s2+4-s2^2",
])
RECT_F_LEADING = {
    (8, 0, 0, 0): 63569053, (7, 1, 0, 0): -159051916, (6, 2, 0, 0): 175350068,
    (5, 3, 0, 0): -82733240, (4, 4, 0, 0): 2363584,
}

# fewnomials with a base point at (1,1) in the torus
TORUS_BP_FS, _ = parse_system([
    "1 - s2*s1", "-s2*s1^36 + 1", "-s2*(-s1^38 + s2)", "s1^37 - s2",
])
SPARSE6_F_FIXED = dict(SPARSE6_F)
SPARSE6_F_FIXED[SPARSE6_F_BAD_TERM[1]] = SPARSE6_F_BAD_TERM[2]
