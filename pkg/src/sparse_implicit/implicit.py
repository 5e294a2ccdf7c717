"""Implicit equations from matrix representations, plus the naive oracle."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import exactla, upoly
from .interp import DEFAULT_SEED, CompressedMinorFamily, MinorFamily, blackbox_gcd
from .lattice import ehrhart_count, hull_of, lattice_area
from .matrep import build_hirzebruch_rep, build_matrix_rep
from .polyring import (BiPoly, PolynomialError, TPoly, dehomogenize, extract_base,
                       normalize, substitute_parametrization)


class ImplicitizationError(ValueError):
    pass


class PreconditionError(ImplicitizationError):
    pass


class RankError(ImplicitizationError):
    pass


RANK_WARNING = ("representation invalid: matrix is not of full generic rank; "
                "the base points are not of the required kind")
FACTOR_WARNING = ("diagnostics failed: the gcd of the maximal minors may contain "
                  "factors other than a power of the implicit equation")
EXTRACT_WARNING = ("the gcd of the maximal minors is not a power of a squarefree "
                   "polynomial; it is reported unfactored")

VERIFY_MAX_DEGREE = 30


def gcd_of_maximal_minors(M, seed=DEFAULT_SEED, with_info=False):
    """Normalized gcd of all maximal minors of a matrix representation.

    Square matrices give their determinant.  Otherwise the gcd is
    accumulated over seeded random combinations of maximal minors (all
    minors themselves when there are few) until its degree is stable for
    STABLE_ROUNDS members, interpolated, and then checked by exact division
    against CONFIRMATIONS further maximal minors.
    """
    if M.nrows > M.ncols:
        raise RankError("more rows than columns: maximal minors are not defined")
    if not M.full_rank_ok:
        raise RankError(RANK_WARNING)
    lm = M.linear_matrix()
    rng = random.Random(seed)
    if M.nrows == M.ncols:
        G = lm.full_minor(list(range(M.ncols)), rng)
        info = {"square": True, "used": [tuple(range(M.ncols))], "exhaustive": True}
    else:
        subsets = MinorFamily(lm, rng)
        if subsets.finite:
            G, info = blackbox_gcd(subsets, rng)
            info["used"] = [subsets.member(i) for i in info["used"]]
        else:
            fam = CompressedMinorFamily(lm, rng)
            G, info = blackbox_gcd(fam, rng, confirm=subsets)
            info["used"] = len(info["used"])
        if G is None:
            raise RankError(RANK_WARNING)
        info["confirmed"] = [subsets.member(i) for i in info.get("confirmed", [])]
        info["square"] = False
    if not G:
        raise RankError(RANK_WARNING)
    G = normalize(G)
    return (G, info) if with_info else G


def restricted_minor_gcd_degree(M, count=3, seed=DEFAULT_SEED, compressed=True):
    """Degree of the univariate gcd of ``count`` maximal-minor members on a random line.

    A cheap probe of the degree of the full gcd when interpolating it is out
    of reach.  With ``compressed`` the members are Cauchy-Binet combinations
    of all maximal minors; otherwise they are single (nonzero) column-subset
    minors, whose gcd can carry extra common factors.
    """
    rng = random.Random(seed)
    lm = M.linear_matrix()
    a = [rng.randint(-1000, 1000) for _ in range(4)]
    b = [rng.randint(-1000, 1000) for _ in range(4)]
    fam = CompressedMinorFamily(lm, rng) if compressed else MinorFamily(lm, rng)
    g = []
    used = 0
    idx = 0
    while used < count:
        r = fam.restrict(idx, a, b)
        idx += 1
        if r:
            g = upoly.gcd(g, r)
            used += 1
    return upoly.degree(g)


@dataclass
class ImplicitResult:
    G: TPoly
    F: object
    k: object
    degree: int
    certified: bool
    diagnostics: object = None
    matrix: object = None
    warnings: list = field(default_factory=list)
    info: dict = field(default_factory=dict)
    vanishes: object = None

    def affine(self):
        base = self.F if self.F is not None else self.G
        return dehomogenize(base)


def _pad(fs):
    fs = list(fs)
    return fs + [BiPoly.zero()] * (4 - len(fs))


def implicit_equation(fs, P=None, variant="general", hirzebruch=None,
                      orientation=None, seed=DEFAULT_SEED, S=None, verify=True):
    """Full pipeline: support, syzygies, matrix, gcd of minors, extraction.

    ``variant`` is ``general`` (support 2P), ``refined`` or ``hirzebruch``
    (which needs ``hirzebruch=(a, b, n)``).
    """
    fs = _pad(fs)
    if variant == "hirzebruch":
        if hirzebruch is None:
            raise PreconditionError("the hirzebruch variant needs (a, b, n)")
        M = build_hirzebruch_rep(fs, *hirzebruch, orientation=orientation)
    elif variant in ("general", "refined"):
        M = build_matrix_rep(fs, P, S, variant)
    else:
        raise PreconditionError(f"unknown variant {variant!r}")
    diag = M.diagnostics
    if not diag.gcd_ok:
        raise PreconditionError(
            f"input polynomials share the factor {diag.common_factor}")
    if not M.full_rank_ok:
        raise RankError(RANK_WARNING)
    G, info = gcd_of_maximal_minors(M, seed, with_info=True)
    info["seed"] = seed
    warnings = []
    try:
        F, k = extract_base(G)
    except PolynomialError:
        F, k = None, None
        warnings.append(EXTRACT_WARNING)
    if not diag.edges_ok:
        warnings.append(FACTOR_WARNING)
    vanishes = None
    base = F if F is not None else G
    if verify and base.total_degree() <= VERIFY_MAX_DEGREE:
        vanishes = not substitute_parametrization(base, fs)
        if not vanishes:
            warnings.append("the recovered equation does not vanish on the parametrization")
    certified = (F is not None and diag.passed and vanishes is not False)
    degree = base.total_degree()
    return ImplicitResult(G, F, k, degree, certified, diag, M, warnings, info, vanishes)


# ---------------------------------------------------------------------------
# naive linear algebra


def t_monomials(D):
    """Exponent 4-tuples of total degree D, in descending T-order."""
    out = []
    for a in range(D, -1, -1):
        for b in range(D - a, -1, -1):
            for c in range(D - a - b, -1, -1):
                out.append((a, b, c, D - a - b - c))
    return out


def naive_implicitize(fs, P=None, max_degree=6):
    """Implicit equation by undetermined coefficients in ascending degree.

    For D = 1, 2, ... the coefficients of a generic degree-D form F_D are
    constrained by ``F_D(f) = 0``; the first D with a one-dimensional
    solution space gives F.
    """
    fs = _pad(fs)
    nz = [f for f in fs if f]
    if P is None:
        P = hull_of(nz)
    v = lattice_area(P)
    if v > max_degree:
        raise PreconditionError(
            f"lattice area {v} exceeds the naive-method cap {max_degree}")
    powers = [[BiPoly.constant(1)] for _ in range(4)]
    for D in range(1, v + 1):
        for i in range(4):
            powers[i].append(powers[i][-1] * fs[i])
        monos = t_monomials(D)
        cols = []
        for e in monos:
            term = BiPoly.constant(1)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            cols.append(term)
        exps = sorted({x for c in cols for x in c.support()})
        index = {x: r for r, x in enumerate(exps)}
        rows = [dict() for _ in exps]
        for j, c in enumerate(cols):
            for x, coef in c.items():
                rows[index[x]][j] = coef
        int_rows = []
        for r in rows:
            den = 1
            for c in r.values():
                if type(c) is not int:
                    den = den * c.denominator // math.gcd(den, c.denominator)
            int_rows.append({j: int(c * den) for j, c in r.items()})
        _, kernel = exactla.kernel_basis_sparse(int_rows, len(monos))
        if not kernel:
            continue
        if len(kernel) > 1:
            raise ImplicitizationError(
                "parametrization not generically finite or degenerate "
                f"({len(kernel)} independent forms of degree {D})")
        vec = kernel[0]
        return normalize(TPoly({monos[j]: c for j, c in vec.items()}))
    raise ImplicitizationError(f"no implicit equation of degree <= {v}")


# ---------------------------------------------------------------------------
# predictions


def predicted_degree(P):
    """Generic implicit degree: the lattice area of P (an upper bound in general)."""
    return lattice_area(P)


@dataclass
class SizeReport:
    unknowns: int
    equations: int
    method: str
    closed_form: dict = field(default_factory=dict)


def system_size(P, method="syzygy"):
    v = lattice_area(P)
    if method == "naive":
        unknowns = math.comb(v + 3, 3)
        equations = ehrhart_count(P, v)
        B = P.boundary_count()
        closed = {"unknowns": unknowns,
                  "equations": (v**3 + B * v) // 2 + 1}
        if len(P.vertices) == 3 and P.area2() == v and _is_standard_simplex(P):
            d = P.edges()[0].lattice_length
            closed["simplex_unknowns"] = math.comb(d * d + 3, 3)
            closed["simplex_equations"] = math.comb(d**3 + 2, 2)
        return SizeReport(unknowns, equations, "naive", closed)
    if method == "syzygy":
        unknowns = 4 * len(P.dilate(2))
        equations = len(P.dilate(3))
        closed = {}
        if _is_standard_simplex(P):
            d = P.edges()[0].lattice_length
            closed = {"unknowns_exact": 4 * math.comb(2 * d + 2, 2),
                      "equations_exact": math.comb(3 * d + 2, 2),
                      "unknowns_refined": 4 * math.comb(2 * d, 2),
                      "equations_refined": math.comb(3 * d, 2)}
        return SizeReport(unknowns, equations, "syzygy", closed)
    raise ValueError(f"unknown method {method!r}")


def _is_standard_simplex(P):
    """P is a translate of the triangle (0,0), (d,0), (0,d)."""
    if len(P.vertices) != 3:
        return False
    v0 = min(P.vertices)
    rel = sorted(tuple(p - v0) for p in P.vertices)
    d = max(max(r) for r in rel)
    return rel == sorted([(0, 0), (d, 0), (0, d)])
