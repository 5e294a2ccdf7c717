from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sparse_implicit import upoly

t = sympy.Symbol("t")
ints = st.lists(st.integers(-20, 20), max_size=7)


def to_sympy(a):
    return sympy.Poly(list(reversed([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                                     for c in a])) or [0], t)


def test_examples():
    assert upoly.interpolate([1, 2, 5, 10]) == [1, 0, 1]
    assert upoly.interpolate([0, 0]) == []
    assert upoly.interpolate([0, 1]) == [0, 1]
    assert upoly.evaluate([1, 0, 1], 3) == 10
    assert upoly.gcd([-1, 0, 1], [1, 2, 1]) == [1, 1]
    assert upoly.gcd([2, 4], [3]) == [1]
    assert upoly.gcd([], []) == []
    assert upoly.taylor_shift([0, 0, 1], 1) == [1, -2, 1]
    assert upoly.primitive([Fraction(1, 2), Fraction(-3, 4)]) == [-2, 3]
    assert upoly.divmod_([1, 0, 1], [1, 1]) == ([-1, 1], [2])


def test_interpolate_rational_nodes():
    vals = [Fraction(k * k, 3) - 1 for k in range(4)]
    assert upoly.interpolate(vals) == [-1, 0, Fraction(1, 3)]


@settings(max_examples=80, deadline=None)
@given(ints)
def test_interpolate_roundtrip(a):
    a = upoly.trim(list(a))
    n = max(len(a), 1) + 2
    assert upoly.interpolate([upoly.evaluate(a, k) for k in range(n)]) == a


@settings(max_examples=80, deadline=None)
@given(ints, ints, ints)
def test_gcd_against_sympy(a, b, c):
    x, y = upoly.mul(a, c), upoly.mul(b, c)
    got = upoly.gcd(x, y)
    if not upoly.trim(list(x)) and not upoly.trim(list(y)):
        assert got == []
        return
    want = sympy.gcd(to_sympy(x), to_sympy(y))
    want = [int(v) for v in reversed(sympy.Poly(want, t).primitive()[1].all_coeffs())]
    if want[-1] < 0:
        want = [-v for v in want]
    assert got == want


@settings(max_examples=60, deadline=None)
@given(ints, st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_divmod(a, b):
    b = upoly.trim(list(b))
    if not b:
        return
    q, r = upoly.divmod_(a, b)
    back = upoly.mul(q, b)
    back = back + [0] * (len(a) - len(back))
    for k, v in enumerate(upoly.trim(list(r))):
        back[k] += v
    assert upoly.trim(back) == upoly.trim(list(a))
    assert upoly.degree(upoly.trim(list(r))) < upoly.degree(b)
