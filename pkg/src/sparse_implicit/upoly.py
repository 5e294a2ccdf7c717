"""Dense univariate polynomials over Q stored as coefficient lists.

Index ``k`` of a list holds the coefficient of ``t**k``.  The zero polynomial
is the empty list.  These helpers back the line restrictions used by the
minor-gcd machinery and the curve case, where everything is univariate.
"""

from __future__ import annotations

from fractions import Fraction

from ._bigint import igcd, mpz


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def evaluate(a, t):
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc


def interpolate(values):
    """Coefficients of the polynomial taking ``values[i]`` at ``t = i``.

    The result has degree below ``len(values)``.  Integer-valued input on
    integer nodes still yields rationals in general; they are canonicalised
    back to ``int`` when the denominator is 1.
    """
    n = len(values)
    if n == 0:
        return []
    # forward differences; the Newton coefficient of order l is delta^l / l!
    d = list(values)
    for lvl in range(1, n):
        for i in range(n - 1, lvl - 1, -1):
            d[i] = d[i] - d[i - 1]
    fact = 1
    newton = []
    for lvl in range(n):
        if lvl:
            fact *= lvl
        c = d[lvl]
        newton.append(Fraction(c, fact) if c % fact else c // fact)
    # Horner on the Newton basis t(t-1)...(t-l+1)
    coeffs = [newton[-1]]
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs * (t - i) + newton[i]
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= i * c
        nxt[0] += newton[i]
        coeffs = nxt
    return trim([_canon(c) for c in coeffs])


def taylor_shift(a, h):
    """Coefficients of ``a(t - h)``."""
    out = []
    for c in reversed(a):
        # out <- out * (t - h) + c
        nxt = [0] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k + 1] += v
            nxt[k] -= h * v
        nxt[0] += c
        out = nxt
    return trim([_canon(c) for c in out])


def primitive(a):
    """Integer primitive part with positive leading coefficient.

    Coefficients may come back as gmpy2 integers; ``gcd`` converts its
    result to plain ints.
    """
    a = trim(list(a))
    if not a:
        return []
    den = 1
    for c in a:
        if isinstance(c, Fraction):
            den = den * c.denominator // igcd(den, c.denominator)
    if den != 1:
        a = [mpz(int(c * den)) for c in a]
    else:
        a = [mpz(c) for c in a]
    g = 0
    for c in a:
        g = igcd(g, c)
        if g == 1:
            break
    if a[-1] < 0:
        g = -g
    if g != 1:
        a = [c // g for c in a]
    return a


def prem(a, b):
    """Pseudo-remainder of integer polynomials ``a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for k, c in enumerate(b):
            r[k + shift] -= lr * c
        trim(r)
    return r


def gcd(a, b):
    """Gcd over Q, returned as a primitive integer polynomial.

    The gcd of the zero polynomial with itself is the zero polynomial; any
    constant gcd is returned as ``[1]``.
    """
    a = primitive(a)
    b = primitive(b)
    if not a:
        return [int(c) for c in b]
    if not b:
        return [int(c) for c in a]
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = primitive(prem(a, b))
        a, b = b, r
    return [int(c) for c in a]


def monic(a):
    lc = a[-1]
    return [_canon(Fraction(c) / lc) for c in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def divmod_(a, b):
    """Quotient and remainder over Q."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 0)
    lb = Fraction(b[-1])
    while r and len(r) - 1 >= db:
        c = r[-1] / lb
        shift = len(r) - 1 - db
        q[shift] = c
        for k, v in enumerate(b):
            r[k + shift] -= c * v
        r.pop()
        trim(r)
    return trim([_canon(c) for c in q]), [_canon(c) for c in r]
