"""Sparse exact polynomials in the parameters (s1, s2) and targets (T0..T3).

A polynomial is a dict from exponent tuples to nonzero rational
coefficients.  Coefficients are kept as ``int`` whenever they are integral
and as :class:`fractions.Fraction` otherwise, so integer-heavy work (gcds,
determinant interpolation) never pays for Fraction arithmetic it does not
need.

Examples
--------
>>> s1, s2 = BiPoly.gens()
>>> (s1 + s2) * (s1 - s2)
BiPoly('-s2^2 + s1^2')
>>> T = TPoly.gens()
>>> normalize(-2 * T[0])
TPoly('T0')
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from numbers import Rational

from . import upoly

Rat = Fraction


class PolynomialError(ValueError):
    pass


def _canon(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, Rational):
        return _canon(Fraction(c))
    if hasattr(c, "__index__"):
        return int(c)
    raise TypeError(f"inexact coefficient {c!r}")


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _SparsePoly:
    nvars = 0
    names: tuple = ()
    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(int(x) for x in e)
                if len(e) != self.nvars:
                    raise PolynomialError(
                        f"exponent {e} has wrong length for {type(self).__name__}"
                    )
                c = _canon(c)
                if c:
                    v = t.get(e, 0) + c
                    if v:
                        t[e] = _canon(v)
                    else:
                        t.pop(e, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def constant(cls, c):
        c = _canon(c)
        return cls._raw({(0,) * cls.nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls({tuple(exps): c})

    @classmethod
    def gens(cls):
        out = []
        for i in range(cls.nvars):
            e = [0] * cls.nvars
            e[i] = 1
            out.append(cls._raw({tuple(e): 1}))
        return tuple(out)

    # -- inspection ------------------------------------------------------
    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coeff(self, exps):
        return self._t.get(tuple(exps), 0)

    def support(self):
        return list(self._t)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and not any(next(iter(self._t))))

    def is_monomial(self):
        return len(self._t) == 1

    def total_degree(self):
        if not self._t:
            return -1
        return max(sum(e) for e in self._t)

    def degree_in(self, i):
        if not self._t:
            return -1
        return max(e[i] for e in self._t)

    def variables(self):
        present = set()
        for e in self._t:
            for i, x in enumerate(e):
                if x:
                    present.add(i)
        return present

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, _SparsePoly):
            if type(other) is not type(self):
                raise PolynomialError("operands live in different rings")
            return other
        return type(self).constant(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = _canon(v)
            else:
                t.pop(e, None)
        return type(self)._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _canon(c)
        if not c:
            return type(self).zero()
        return type(self)._raw({e: _canon(v * c) for e, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, _SparsePoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = _add_exps(e1, e2)
                t[e] = get(e, 0) + c1 * c2
        return type(self)._raw({e: _canon(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("exponent must be a nonnegative integer")
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, _SparsePoly):
            return self.exact_div(c)
        return self.scale(Fraction(1) / Fraction(c))

    def mul_monomial(self, exps, c=1):
        return type(self)._raw(
            {_add_exps(e, exps): _canon(v * c) for e, v in self._t.items()}
        )

    def __eq__(self, other):
        if isinstance(other, _SparsePoly):
            return type(other) is type(self) and self._t == other._t
        try:
            return self._t == type(self).constant(other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._t.items())))
        return self._hash

    # -- calculus and evaluation -----------------------------------------
    def evaluate(self, point):
        """Exact value at ``point`` (a sequence of rationals)."""
        point = [_canon(x) for x in point]
        if len(point) != self.nvars:
            raise PolynomialError("point has wrong dimension")
        total = 0
        for e, c in self._t.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total += v
        return _canon(total)

    __call__ = evaluate

    def derivative(self, i):
        t = {}
        for e, c in self._t.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                t[tuple(e2)] = _canon(c * k)
        return type(self)._raw(t)

    def coefficients_in(self, i):
        """Map ``k -> coefficient of x_i^k`` (polynomials free of ``x_i``)."""
        out = {}
        for e, c in self._t.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: type(self)._raw(t) for k, t in out.items()}

    # -- division --------------------------------------------------------
    def exact_div(self, other):
        """Quotient of an exact division; raises if ``other`` does not divide."""
        other = self._coerce(other)
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(other._t)
        lc = Fraction(other._t[lead])
        rem = dict(self._t)
        quo = {}
        bitems = list(other._t.items())
        while rem:
            m = max(rem)
            shift = tuple(x - y for x, y in zip(m, lead))
            if min(shift) < 0:
                raise PolynomialError("division is not exact")
            q = _canon(rem[m] / lc)
            quo[shift] = q
            for e, c in bitems:
                e2 = _add_exps(e, shift)
                v = rem.get(e2, 0) - q * c
                if v:
                    rem[e2] = v
                else:
                    rem.pop(e2, None)
        return type(self)._raw({e: _canon(c) for e, c in quo.items()})

    def divides(self, other):
        try:
            other.exact_div(self)
        except PolynomialError:
            return False
        return True

    # -- normal forms ----------------------------------------------------
    @classmethod
    def _order_key(cls, e):
        return e

    def leading_exponent(self):
        return max(self._t, key=self._order_key)

    def sorted_terms(self, descending=True):
        return sorted(self._t.items(), key=lambda it: self._order_key(it[0]),
                      reverse=descending)

    def primitive(self):
        """Integer primitive part with positive leading coefficient."""
        if not self._t:
            raise PolynomialError("zero polynomial has no primitive part")
        den = 1
        for c in self._t.values():
            if type(c) is not int:
                den = den * c.denominator // math.gcd(den, c.denominator)
        g = 0
        for c in self._t.values():
            g = math.gcd(g, int(c * den))
            if g == 1:
                break
        if self._t[self.leading_exponent()] < 0:
            g = -g
        return self.scale(Fraction(den, g))

    # -- printing --------------------------------------------------------
    def _monomial_str(self, e):
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def to_str(self, descending=True):
        if not self._t:
            return "0"
        out = []
        for e, c in self.sorted_terms(descending):
            mono = self._monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_str()!r})"


class BiPoly(_SparsePoly):
    """Polynomial in the two parameters ``s1, s2``."""

    nvars = 2
    names = ("s1", "s2")
    __slots__ = ()

    @classmethod
    def _order_key(cls, e):
        return (e[0] + e[1], e[0])

    def __str__(self):
        return self.to_str(descending=False)

    def __repr__(self):
        return f"BiPoly({self.to_str(descending=False)!r})"

    def exponents(self):
        return list(self._t)


class TPoly(_SparsePoly):
    """Polynomial in the target coordinates ``T0..T3`` (graded lex, T0 first)."""

    nvars = 4
    names = ("T0", "T1", "T2", "T3")
    __slots__ = ()

    @classmethod
    def _order_key(cls, e):
        return (sum(e), e)

    @property
    def is_homogeneous(self):
        degs = {sum(e) for e in self._t}
        return len(degs) <= 1


class LinearForm(tuple):
    """``c0*T0 + c1*T1 + c2*T2 + c3*T3`` as a 4-tuple of rationals."""

    __slots__ = ()

    def __new__(cls, coeffs):
        coeffs = tuple(_canon(c) for c in coeffs)
        if len(coeffs) > 4:
            raise PolynomialError("a linear form has at most four coefficients")
        return super().__new__(cls, coeffs + (0,) * (4 - len(coeffs)))

    def __call__(self, point):
        return _canon(sum(c * x for c, x in zip(self, point)))

    def is_zero(self):
        return not any(self)

    def to_tpoly(self):
        t = {}
        for i, c in enumerate(self):
            if c:
                e = [0, 0, 0, 0]
                e[i] = 1
                t[tuple(e)] = c
        return TPoly._raw(t)

    def __str__(self):
        return str(self.to_tpoly())


# ---------------------------------------------------------------------------
# gcd


def _content_in(p, i):
    g = None
    for c in p.coefficients_in(i).values():
        g = c if g is None else _prs_gcd(g, c)
        if g.is_constant():
            return type(p).constant(1)
    return g


def _prem(a, b, i):
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in ``x_i``."""
    db = b.degree_in(i)
    bc = b.coefficients_in(i)
    lb = bc[db]
    r = a
    unit = [0] * a.nvars
    while r and r.degree_in(i) >= db:
        dr = r.degree_in(i)
        lr = r.coefficients_in(i)[dr]
        unit[i] = dr - db
        r = r * lb - (b * lr).mul_monomial(tuple(unit))
    return r


def _prs_gcd(a, b):
    """Recursive primitive-PRS gcd; result is primitive (or zero)."""
    cls = type(a)
    if not a:
        return b.primitive() if b else b
    if not b:
        return a.primitive()
    if a.is_constant() or b.is_constant():
        return cls.constant(1)
    va, vb = a.variables(), b.variables()
    present = va | vb
    # main variable of lowest maximal degree
    i = min(present, key=lambda v: (max(a.degree_in(v), b.degree_in(v)), v))
    if i not in va:
        return _prs_gcd(a, _content_in(b, i))
    if i not in vb:
        return _prs_gcd(_content_in(a, i), b)
    ca, cb = _content_in(a, i), _content_in(b, i)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    c = _prs_gcd(ca, cb)
    if pa.degree_in(i) < pb.degree_in(i):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, i)
        if not r:
            break
        if r.degree_in(i) == 0:
            pb = cls.constant(1)
            break
        r = r.exact_div(_content_in(r, i)).primitive()
        pa, pb = pb, r
    g = pb.exact_div(_content_in(pb, i)) if pb.degree_in(i) > 0 else pb
    return (c * g).primitive()


def _restrict_to_line(p, a, b):
    """Univariate coefficients of ``t -> p(a + t*b)``."""
    d = p.total_degree()
    if d < 0:
        return []
    vals = [p.evaluate([x + t * y for x, y in zip(a, b)]) for t in range(d + 1)]
    return upoly.interpolate(vals)


def coprime_certificate(a, b, rng=None, tries=2):
    """True only if ``a`` and ``b`` are provably coprime.

    On a line ``a0 + t*b0`` with ``deg_t a(line) = deg a`` any common factor
    restricts to a nonconstant polynomial, so a constant univariate gcd
    certifies coprimality.  ``False`` means "not certified", not "not coprime".
    """
    rng = rng or random.Random(0x5EED)
    da = a.total_degree()
    for _ in range(tries):
        p0 = [rng.randint(-50, 50) for _ in range(a.nvars)]
        d0 = [rng.randint(-50, 50) for _ in range(a.nvars)]
        ra = _restrict_to_line(a, p0, d0)
        if upoly.degree(ra) != da:
            continue
        rb = _restrict_to_line(b, p0, d0)
        if upoly.degree(upoly.gcd(ra, rb)) == 0:
            return True
    return False


def poly_gcd(a, b):
    """Gcd of two sparse polynomials over Q, as a primitive polynomial.

    Works in any of the rings here.  Coprime pairs are detected by a
    univariate certificate first; everything else goes through the
    recursive primitive PRS.
    """
    if not a and not b:
        raise PolynomialError("gcd(0, 0) is undefined")
    if a and b and not (a.is_constant() or b.is_constant()):
        if coprime_certificate(a, b) or coprime_certificate(b, a):
            return type(a).constant(1)
    return _prs_gcd(a, b)


def tpoly_gcd(g, h, method="auto"):
    """Normalized gcd in Q[T0..T3].

    ``method="prs"`` forces the recursive primitive PRS; ``"interp"`` uses
    line restrictions plus interpolation (homogeneous inputs only) and falls
    back to PRS if its exact division check fails; ``"auto"`` picks
    interpolation for homogeneous inputs.
    """
    if not g and not h:
        raise PolynomialError("gcd(0, 0) is undefined")
    if not g:
        return normalize(h)
    if not h:
        return normalize(g)
    homog = g.is_homogeneous and h.is_homogeneous
    if method == "interp" or (method == "auto" and homog):
        if not homog:
            raise PolynomialError("interpolation gcd needs homogeneous input")
        from .interp import interpolated_gcd

        cand = interpolated_gcd(g, h)
        if cand is not None:
            return normalize(cand)
    return normalize(poly_gcd(g, h))


# ---------------------------------------------------------------------------
# normal forms and transformations


def normalize(g):
    """Integer coefficients with content 1 and a positive leading coefficient.

    The leading monomial is the first one in graded lex with T0 > T1 > T2 > T3.
    """
    if not g:
        raise PolynomialError("cannot normalize the zero polynomial")
    return g.primitive()


def homogenize(f, degree):
    """T0-homogenization of a polynomial in T1..T3 to the given degree."""
    if any(e[0] for e in f._t):
        raise PolynomialError("homogenize expects a polynomial free of T0")
    if f and f.total_degree() > degree:
        raise PolynomialError(
            f"target degree {degree} is below the degree {f.total_degree()}"
        )
    return TPoly._raw(
        {(degree - sum(e),) + e[1:]: c for e, c in f._t.items()}
    )


def dehomogenize(h):
    """Set T0 = 1."""
    if not h.is_homogeneous:
        raise PolynomialError("dehomogenize expects a homogeneous polynomial")
    t = {}
    for e, c in h._t.items():
        t[(0,) + e[1:]] = c
    return TPoly._raw(t)


def substitute_parametrization(h, fs):
    """Expand ``h(f0, f1, f2, f3)`` for homogeneous ``h``."""
    if not h.is_homogeneous:
        raise PolynomialError("substitution requires a homogeneous polynomial")
    fs = list(fs)
    if len(fs) < 4:
        fs += [type(fs[0]).zero()] * (4 - len(fs))
    powers = [{0: type(fs[0]).constant(1)} for _ in range(4)]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * fs[i]
        return cache[k]

    total = type(fs[0]).zero()
    for e, c in h.sorted_terms():
        term = type(fs[0]).constant(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def squarefree_part(g):
    """``g / gcd(g, dg/dT_i for every T_i present)``, normalized."""
    r = g
    for i in sorted(g.variables()):
        d = g.derivative(i)
        r = poly_gcd(r, d) if d else r
        if r.is_constant():
            break
    return normalize(g.exact_div(r))


def extract_base(g):
    """Split ``g = c * F^k`` into the normalized squarefree ``F`` and ``k``."""
    if not g or g.is_constant():
        raise PolynomialError("no base to extract from a constant")
    f = squarefree_part(g)
    dg, df = g.total_degree(), f.total_degree()
    if dg % df:
        raise PolynomialError("gcd is not a pure power of a squarefree polynomial")
    k = dg // df
    if normalize(f**k) != normalize(g):
        raise PolynomialError("gcd is not a pure power of a squarefree polynomial")
    return f, k


def shift_to_nonnegative(term_dicts):
    """Multiply Laurent term dicts by the minimal common monomial.

    Returns the shifted dicts and the exponent of the monomial used.
    """
    mins = None
    for t in term_dicts:
        for e in t:
            mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
    if mins is None:
        return [dict(t) for t in term_dicts], (0, 0)
    shift = tuple(-m if m < 0 else 0 for m in mins)
    out = [{_add_exps(e, shift): c for e, c in t.items()} for t in term_dicts]
    return out, shift
