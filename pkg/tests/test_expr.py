from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sparse_implicit.expr import (ParseError, parse_laurent, parse_polygon, parse_polynomial,
                                  parse_problem, parse_system, parse_triple, parse_with_shift,
                                  serialize)
from sparse_implicit.lattice import LatticePolygon
from sparse_implicit.polyring import BiPoly

from fixtures import PROBLEMS, QUAD_FS

s1, s2 = BiPoly.gens()


def sympy_parse(text):
    x, y = sympy.symbols("s1 s2")
    expr = sympy.sympify(text.replace("^", "**"), locals={"s1": x, "s2": y})
    poly = sympy.Poly(sympy.expand(expr), x, y)
    return BiPoly({e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


def test_parse_examples():
    assert parse_polynomial("1 + 3*s1 + s1^2") == 1 + 3 * s1 + s1**2
    assert parse_polynomial("(s1 + s2)^2") == s1**2 + 2 * s1 * s2 + s2**2
    assert parse_polynomial("s1**2 - 1/2*s2") == s1**2 - Fraction(1, 2) * s2
    assert parse_polynomial("-(2)") == BiPoly.constant(-2)
    assert parse_polynomial("3*s1/6") == Fraction(1, 2) * s1


@pytest.mark.parametrize("text", [
    "(s1 - 2*s2)^3 * (1 + s1)",
    "7/3 - s1*s2^4 + 2*(s2 - 1)^2",
    "-s1 - -s2 + +3",
])
def test_parse_against_sympy(text):
    assert parse_polynomial(text) == sympy_parse(text)


def test_laurent_shift():
    f, shift = parse_with_shift("s1^-1 + s2")
    assert shift == (1, 0)
    assert f == 1 + s1 * s2
    fs, shift = parse_system(["s1^-1*s2^-2", "s2", "1", "s1"])
    assert shift == (1, 2)
    assert fs[0] == BiPoly.constant(1) and fs[1] == s1 * s2**3


def test_curve_variables():
    t = parse_laurent("s^3 - 2*s", ("s",))
    assert t == {(3, 0): 1, (1, 0): -2}


@pytest.mark.parametrize("text,col", [
    ("s1 + * s2", 6),
    ("2s1", 2),
    ("s1 + s3", 6),
])
def test_errors_have_columns(text, col):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text)
    assert exc.value.col == col


@pytest.mark.parametrize("text", ["", "s1/s2", "s1^s2", "1/0", "s1^(1/2)", "s1 = 2", "f(s1)"])
def test_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text)


def test_polygon_and_triple():
    assert parse_polygon("(0,0);(2,0);(0,2)") == LatticePolygon([(0, 0), (2, 0), (0, 2)])
    assert parse_triple(" 2, 2,0") == (2, 2, 0)
    with pytest.raises(ParseError):
        parse_polygon("(0,0);(1,x)")
    with pytest.raises(ParseError):
        parse_triple("2,2")


def test_problem_file():
    with open(PROBLEMS / "quad.txt") as fh:
        spec = parse_problem(fh.read())
    assert spec.fs == QUAD_FS and spec.polygon_mode == "auto" and spec.shift == (0, 0)
    spec = parse_problem("P: (0,0);(1,0);(0,1)\nf0 = s1^-1\nf1 = 1\nf2 = s2\nf3 = s1")
    assert spec.shift == (1, 0) and spec.polygon_mode == "explicit"
    assert set(spec.polygon.vertices) == {(1, 0), (2, 0), (1, 1)}
    spec = parse_problem("P: hirzebruch 2,2,0\nf0=1\nf1=s1\nf2=s2\nf3=s1*s2")
    assert spec.hirzebruch == (2, 2, 0)


def test_problem_file_errors():
    with pytest.raises(ParseError) as exc:
        parse_problem("f0 = 1\nf1 = s1 +\nf2 = 1\nf3 = 1")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        parse_problem("f0 = 1\nf1 = 1\nf2 = 1")
    assert "f3" in str(exc.value)
    with pytest.raises(ParseError):
        parse_problem("f0 = 1\nf0 = 2\nf2 = 1\nf3 = 1")
    with pytest.raises(ParseError) as exc:
        parse_problem("f0 = 1\nnonsense\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_problem("f0=1\nf1=s\nf2=s^2\nf3=1", curve=True)


coef = st.fractions(min_value=-30, max_value=30, max_denominator=7)
polys = st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), coef, max_size=6)


@settings(max_examples=100, deadline=None)
@given(polys)
def test_serialize_roundtrip(t):
    f = BiPoly(t)
    assert parse_polynomial(serialize(f)) == f


@settings(max_examples=40, deadline=None)
@given(polys)
def test_serialize_matches_sympy(t):
    f = BiPoly(t)
    if f:
        assert sympy_parse(serialize(f)) == f
