"""Evaluation/interpolation machinery for polynomials in T0..T3.

Two pieces live here:

* dense interpolation of a homogeneous polynomial of known degree from its
  values on a simplex grid in the affine chart ``T0 = 1``;
* a black-box gcd for a family of homogeneous polynomials that can only be
  evaluated (maximal minors of a linear matrix, most importantly).  The gcd
  is read off univariate gcds along parallel lines and then interpolated.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from . import exactla, upoly
from ._bigint import mpz
from .polyring import TPoly, _canon

STABLE_ROUNDS = 4
CONFIRMATIONS = 3
DEFAULT_SEED = 20240229

_OFFSET_RANGE = 10**4
_DIR_RANGE = 10**3


class InterpolationError(RuntimeError):
    pass


def simplex_grid(D):
    return [(i, j, k) for s in range(D + 1) for i in range(s, -1, -1)
            for j in range(s - i, -1, -1) for k in (s - i - j,)]


def _lcm_den(values):
    den = 1
    for v in values:
        if type(v) is not int:
            d = Fraction(v).denominator
            den = den * d // math.gcd(den, d)
    return den


def interpolate_affine(values, D, offset):
    """Polynomial of degree <= D in (T1, T2, T3) matching ``values``.

    ``values[(i, j, k)]`` is the value at ``(x0 + i, y0 + j, z0 + k)`` for all
    ``i + j + k <= D``.  Returned as a TPoly free of T0.
    """
    x0, y0, z0 = offset
    den = _lcm_den(values.values())
    f = {key: int(v * den) for key, v in values.items()}

    def diff_axis(axis):
        for key in list(f):
            if key[axis]:
                continue
            n = D - sum(key)
            seq = []
            for t in range(n + 1):
                k2 = list(key)
                k2[axis] = t
                seq.append(f[tuple(k2)])
            for lvl in range(1, n + 1):
                for t in range(n, lvl - 1, -1):
                    seq[t] -= seq[t - 1]
            for t in range(n + 1):
                k2 = list(key)
                k2[axis] = t
                f[tuple(k2)] = seq[t]

    for axis in range(3):
        diff_axis(axis)

    # basis polynomials prod_{m<i} (X - (x0 + m)) per axis
    def basis(h):
        out = [[1]]
        for m in range(D):
            out.append(upoly.mul(out[-1], [-(h + m), 1]))
        return out

    bx, by, bz = basis(x0), basis(y0), basis(z0)
    fact = [1]
    for m in range(1, D + 1):
        fact.append(fact[-1] * m)
    big = fact[D]
    acc = {}
    for (i, j, k), c in f.items():
        if not c:
            continue
        c = c * (big // (fact[i] * fact[j] * fact[k]))
        px, py, pz = bx[i], by[j], bz[k]
        for a, cx in enumerate(px):
            if not cx:
                continue
            cxa = c * cx
            for b, cy in enumerate(py):
                if not cy:
                    continue
                cxy = cxa * cy
                for e, cz in enumerate(pz):
                    if cz:
                        key = (0, a, b, e)
                        acc[key] = acc.get(key, 0) + cxy * cz
    scale = big * den
    return TPoly({k: Fraction(v, scale) for k, v in acc.items() if v})


def homogenize_to(q, D):
    return TPoly({(D - sum(e),) + e[1:]: c for e, c in q.items()})


def interpolate_homogeneous(fn, D, rng=None, offset=None):
    """Homogeneous degree-D polynomial from the oracle ``fn((1, x, y, z))``."""
    rng = rng or random.Random(DEFAULT_SEED)
    if offset is None:
        offset = tuple(rng.randint(-_OFFSET_RANGE, _OFFSET_RANGE) for _ in range(3))
    x0, y0, z0 = offset
    values = {}
    for (i, j, k) in simplex_grid(D):
        values[(i, j, k)] = fn((1, x0 + i, y0 + j, z0 + k))
    q = interpolate_affine(values, D, offset)
    return homogenize_to(q, D)


def restrict_tpoly(p, a, b):
    d = p.total_degree()
    if d < 0:
        return []
    vals = [p.evaluate([x + t * y for x, y in zip(a, b)]) for t in range(d + 1)]
    return upoly.interpolate(vals)


# ---------------------------------------------------------------------------
# families


class TPolyFamily:
    """A finite list of explicit homogeneous TPolys."""

    def __init__(self, polys):
        self.polys = [p for p in polys]
        self.finite = True
        self._cache = {}

    def __len__(self):
        return len(self.polys)

    def member(self, idx):
        return idx

    def degree(self, idx):
        return self.polys[idx].total_degree()

    def restrict(self, idx, a, b):
        key = (idx, tuple(a), tuple(b))
        if key not in self._cache:
            self._cache[key] = restrict_tpoly(self.polys[idx], a, b)
        return self._cache[key]

    def full(self, idx):
        return self.polys[idx]


class LinearMatrix:
    """``M(T) = sum_i T_i * C_i`` with integer coefficient matrices ``C_i``."""

    def __init__(self, coeffs):
        self.coeffs = [[[mpz(x) for x in r] for r in C] for C in coeffs]
        self.nrows = len(self.coeffs[0])
        self.ncols = len(self.coeffs[0][0]) if self.nrows else 0

    def at(self, point, cols=None):
        cols = range(self.ncols) if cols is None else cols
        p = point
        out = []
        C0, C1, C2, C3 = self.coeffs
        for r in range(self.nrows):
            r0, r1, r2, r3 = C0[r], C1[r], C2[r], C3[r]
            out.append([p[0] * r0[j] + p[1] * r1[j] + p[2] * r2[j] + p[3] * r3[j]
                        for j in cols])
        return out

    def minor_at(self, cols, point):
        return int(exactla.det_int(self.at(point, cols)))

    def restrict_minor(self, cols, a, b):
        r = self.nrows
        vals = []
        for t in range(r + 1):
            pt = [x + t * y for x, y in zip(a, b)]
            vals.append(self.minor_at(cols, pt))
        return upoly.interpolate(vals)

    def full_minor(self, cols, rng=None):
        return interpolate_homogeneous(lambda p: self.minor_at(cols, p),
                                       self.nrows, rng)


class MinorFamily:
    """Maximal minors of a LinearMatrix, indexed by column subsets.

    Small families are enumerated completely in lexicographic order; large
    ones are sampled with a seeded generator (no repeats).
    """

    ENUM_LIMIT = 40

    def __init__(self, lm, rng):
        self.lm = lm
        self.rng = rng
        r, c = lm.nrows, lm.ncols
        if r > c:
            raise InterpolationError("more rows than columns: no maximal minors")
        total = math.comb(c, r)
        self.total = total
        self._cache = {}
        self.finite = total <= self.ENUM_LIMIT
        if self.finite:
            self._subsets = [tuple(s) for s in combinations(range(c), r)]
        else:
            self._subsets = []
            self._seen = set()

    def __len__(self):
        return self.total if self.finite else 10**18

    def _sample(self):
        """Columns of a nonzero maximal minor, found by pivoting M(p) after a
        random column shuffle; a blind subset is most often a zero minor."""
        lm, rng = self.lm, self.rng
        for _ in range(3):
            perm = list(range(lm.ncols))
            rng.shuffle(perm)
            p = [rng.randint(-100, 100) for _ in range(4)]
            piv = exactla.pivot_columns_int(lm.at(p, perm), lm.ncols)
            if len(piv) == lm.nrows:
                return tuple(sorted(perm[k] for k in piv))
        return tuple(sorted(rng.sample(range(lm.ncols), lm.nrows)))

    def member(self, idx):
        misses = 0
        while idx >= len(self._subsets):
            if self.finite:
                raise IndexError(idx)
            s = self._sample()
            if s not in self._seen:
                self._seen.add(s)
                self._subsets.append(s)
            else:
                misses += 1
                if misses > 50:
                    raise InterpolationError("ran out of distinct maximal minors")
        return self._subsets[idx]

    def degree(self, idx):
        return self.lm.nrows

    def restrict(self, idx, a, b):
        key = (idx, tuple(a), tuple(b))
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self.lm.restrict_minor(self.member(idx), a, b)
        return hit

    def full(self, idx):
        return self.lm.full_minor(self.member(idx), self.rng)


class CompressedMinorFamily:
    """Determinants of ``M * R`` for seeded random integer matrices R.

    By Cauchy-Binet each member is a combination of all maximal minors with
    coefficients det(R_S), so the gcd of all maximal minors divides it, and
    two generic members already have that gcd (plain column subsets can
    share spurious factors for a long time).
    """

    finite = False
    RADIUS = 3

    def __init__(self, lm, rng):
        if lm.nrows > lm.ncols:
            raise InterpolationError("more rows than columns: no maximal minors")
        self.lm = lm
        self.rng = rng
        self._members = []
        self._cache = {}

    def __len__(self):
        return 10**18

    def member(self, idx):
        r, c = self.lm.nrows, self.lm.ncols
        while idx >= len(self._members):
            R = [[self.rng.randint(-self.RADIUS, self.RADIUS) for _ in range(r)]
                 for _ in range(c)]
            comp = []
            for C in self.lm.coeffs:
                comp.append([[sum(row[k] * R[k][j] for k in range(c) if row[k])
                              for j in range(r)] for row in C])
            self._members.append(LinearMatrix(comp))
        return self._members[idx]

    def degree(self, idx):
        return self.lm.nrows

    def restrict(self, idx, a, b):
        key = (idx, tuple(a), tuple(b))
        hit = self._cache.get(key)
        if hit is None:
            m = self.member(idx)
            hit = self._cache[key] = m.restrict_minor(list(range(m.ncols)), a, b)
        return hit

    def full(self, idx):
        m = self.member(idx)
        return m.full_minor(list(range(m.ncols)), self.rng)


# ---------------------------------------------------------------------------
# the black-box gcd


class _Members:
    """Iterates over family members that look nonzero on a fixed line."""

    def __init__(self, fam, a, b, max_zero=200):
        self.fam = fam
        self.a, self.b = a, b
        self.next_idx = 0
        self.max_zero = max_zero

    def next(self):
        zeros = 0
        while True:
            idx = self.next_idx
            if self.fam.finite and idx >= len(self.fam):
                return None
            self.next_idx += 1
            if self.fam.restrict(idx, self.a, self.b):
                return idx
            zeros += 1
            if zeros > self.max_zero:
                return None


def _random_vec(rng, n, rad):
    return [rng.randint(-rad, rad) for _ in range(n)]


def _line_gcd(fam, used, a, b, target=None):
    g = []
    for idx in used:
        g = upoly.gcd(g, fam.restrict(idx, a, b))
        if target is not None and upoly.degree(g) <= target:
            break
    return g


def blackbox_gcd(fam, rng=None, stable_rounds=STABLE_ROUNDS,
                 confirmations=CONFIRMATIONS, max_rounds=12, confirm=None):
    """Gcd of a family of homogeneous polynomials, up to scalar.

    Returns ``(G, info)`` with ``G`` a primitive TPoly (or ``None`` if the
    family is identically zero) and ``info`` recording the members used.
    ``confirm`` is an optional second family whose members the result must
    divide; by default further members of ``fam`` are used.
    """
    rng = rng or random.Random(DEFAULT_SEED)
    info = {"used": [], "confirmed": [], "exhaustive": False}
    # a direction b along which the first nonzero member has full degree
    probe_a = [_random_vec(rng, 4, _DIR_RANGE) for _ in range(3)]
    b = _random_vec(rng, 4, _DIR_RANGE)
    scan = _Members(fam, probe_a[0], b)
    first = scan.next()
    if first is None:
        return None, info
    for _ in range(50):
        r0 = fam.restrict(first, probe_a[0], b)
        if upoly.degree(r0) == fam.degree(first):
            break
        b = _random_vec(rng, 4, _DIR_RANGE)
    else:
        raise InterpolationError("could not find a generic direction")
    used = [first]
    if confirm is not None and not confirm.finite:
        confirm_scan = _Members(confirm, probe_a[0], b)

    def settle_degree():
        """Add members until every probe line is stable; return D."""
        degs = []
        for a in probe_a:
            degs.append(upoly.degree(_line_gcd(fam, used, a, b)))
        D = min(degs)
        stable = 0
        while stable < stable_rounds and D > 0:
            idx = scan.next()
            if idx is None:
                break
            used.append(idx)
            new = []
            for a, d in zip(probe_a, degs):
                g = _line_gcd(fam, used, a, b)
                new.append(upoly.degree(g))
            if new == degs:
                stable += 1
            else:
                stable = 0
            degs = new
            D = min(degs)
        return D

    for _ in range(max_rounds):
        D = settle_degree()
        G = _interpolate_gcd(fam, used, b, D, rng, scan)
        if isinstance(G, list):
            # a grid point saw a smaller gcd: use it as an extra probe line
            probe_a.append(G)
            continue
        if G is None:
            continue
        if G.is_constant():
            info.update(used=list(used), degree=0)
            return TPoly.constant(1), info
        # certification on further members
        failed = None
        confirmed = []
        cfam = confirm if confirm is not None else fam
        if cfam.finite:
            extra = [i for i in range(len(cfam)) if cfam is not fam or i not in used]
        else:
            extra = []
            cscan = scan if cfam is fam else confirm_scan
            while len(extra) < confirmations:
                idx = cscan.next()
                if idx is None:
                    break
                extra.append(idx)
        for idx in extra:
            full = cfam.full(idx)
            if full and not G.divides(full):
                failed = idx
                break
            confirmed.append(idx)
        if failed is None:
            info.update(used=list(used), confirmed=confirmed, degree=D,
                        exhaustive=cfam.finite and cfam is fam)
            return G, info
        if cfam is fam:
            used.append(failed)
        else:
            # the divisibility failure shows D is too large; accumulate more
            stable_rounds += 1
    raise InterpolationError("gcd did not certify")


def _interpolate_gcd(fam, used, b, D, rng, scan, tries=6, extra_members=2):
    """Interpolate G/G(b) on a simplex grid.

    Returns the primitive candidate, ``None`` after repeated bad grids, or
    the offending point (a list) when it reveals that D is too large.
    """
    if D == 0:
        return TPoly.constant(1)
    for _ in range(tries):
        offset = tuple(rng.randint(-_OFFSET_RANGE, _OFFSET_RANGE) for _ in range(3))
        values = {}
        bad = False
        for (i, j, k) in simplex_grid(D):
            a = (1, offset[0] + i, offset[1] + j, offset[2] + k)
            g = _line_gcd(fam, used, a, b, target=D)
            d = upoly.degree(g)
            pulled = 0
            while d > D and pulled < extra_members:
                idx = scan.next()
                if idx is None:
                    break
                used.append(idx)
                pulled += 1
                g = upoly.gcd(g, fam.restrict(idx, a, b))
                d = upoly.degree(g)
            if d > D:
                bad = True
                break
            if d < D:
                return list(a)
            values[(i, j, k)] = _canon(Fraction(g[0]) / g[-1])
        if bad:
            continue
        q = interpolate_affine(values, D, offset)
        G = homogenize_to(q, D)
        return G.primitive()
    return None


def interpolated_gcd(g, h, rng=None):
    """Gcd of two homogeneous TPolys by line restrictions; None if unsure."""
    fam = TPolyFamily([g, h])
    try:
        G, _ = blackbox_gcd(fam, rng or random.Random(DEFAULT_SEED))
    except InterpolationError:
        return None
    if G is None:
        return None
    if not (G.divides(g) and G.divides(h)):
        return None
    return G
