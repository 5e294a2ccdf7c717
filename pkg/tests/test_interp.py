import random
from fractions import Fraction

import pytest
import sympy

from sparse_implicit.interp import (CompressedMinorFamily, LinearMatrix, MinorFamily,
                                    TPolyFamily, blackbox_gcd, interpolate_homogeneous,
                                    interpolated_gcd, restrict_tpoly, simplex_grid)
from sparse_implicit.matrep import build_matrix_rep
from sparse_implicit.polyring import TPoly, normalize, tpoly_gcd

from fixtures import QUAD_FS, QUAD_P

T = sympy.symbols("T0:4")
T0, T1, T2, T3 = TPoly.gens()


def homog(rng, deg, n=5):
    out = {}
    for _ in range(n):
        a = rng.randint(0, deg)
        b = rng.randint(0, deg - a)
        c = rng.randint(0, deg - a - b)
        out[(a, b, c, deg - a - b - c)] = rng.randint(-9, 9) or 1
    return TPoly(out)


def test_simplex_grid():
    for D in range(5):
        g = simplex_grid(D)
        assert len(g) == len(set(g)) == (D + 1) * (D + 2) * (D + 3) // 6
        assert all(sum(p) <= D and min(p) >= 0 for p in g)


@pytest.mark.parametrize("seed", range(6))
def test_interpolate_homogeneous_roundtrip(seed):
    rng = random.Random(seed)
    D = rng.randint(0, 5)
    p = homog(rng, D, 6)
    if rng.random() < 0.5:
        p = p.scale(Fraction(1, 7))
    assert interpolate_homogeneous(p.evaluate, D, rng) == p


def test_restrict_tpoly_against_sympy():
    rng = random.Random(1)
    p = homog(rng, 4)
    a, b = [2, -1, 3, 5], [1, 4, -2, 7]
    s = sympy.Symbol("s")
    expr = sum(c * sympy.prod([(ai + s * bi) ** k for ai, bi, k in zip(a, b, e)])
               for e, c in p.items())
    want = [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), s).all_coeffs())]
    assert restrict_tpoly(p, a, b) == want


@pytest.mark.parametrize("seed", range(5))
def test_blackbox_gcd_against_sympy(seed):
    rng = random.Random(10 + seed)
    G = homog(rng, rng.randint(1, 3), 4)
    polys = [G * homog(rng, rng.randint(1, 2), 3) for _ in range(3)]
    want = sympy.gcd_list([sum(c * sympy.prod([v**k for v, k in zip(T, e)])
                               for e, c in q.items()) for q in polys])
    want = normalize(TPoly({e: int(c) for e, c in sympy.Poly(want, *T).terms()}))
    got, info = blackbox_gcd(TPolyFamily(polys), random.Random(seed))
    assert normalize(got) == want
    assert interpolated_gcd(polys[0], polys[1]) == normalize(tpoly_gcd(polys[0], polys[1]))


def test_blackbox_zero_family():
    G, _ = blackbox_gcd(TPolyFamily([TPoly.zero(), TPoly.zero()]))
    assert G is None


def test_linear_matrix_minors():
    lm = LinearMatrix([[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 0]]])
    # [[T0, T1], [T2, T0]]
    assert lm.minor_at([0, 1], (2, 3, 5, 7)) == 4 - 15
    assert lm.full_minor([0, 1]) == T0**2 - T1 * T2
    assert lm.restrict_minor([0, 1], [1, 0, 0, 0], [0, 1, 1, 0]) == [1, 0, -1]


def test_minor_families_share_gcd():
    M = build_matrix_rep(QUAD_FS, QUAD_P)
    lm = M.linear_matrix()
    subsets = MinorFamily(lm, random.Random(2))
    comp = CompressedMinorFamily(lm, random.Random(2))
    cols = subsets.member(0)
    assert len(cols) == 12 and lm.minor_at(cols, (1, 2, 3, 5)) != 0
    assert comp.member(0).ncols == 12
    a, b = [3, 1, 4, 1], [5, 9, 2, 6]
    assert comp.restrict(0, a, b) and subsets.restrict(0, a, b)
