"""Parsing of polynomial expressions and problem files.

Expressions use ``+ - * / ^`` (``**`` also works), parentheses, integer
literals and the variables ``s1, s2`` (``s`` in curve mode).  Division is
only by nonzero constants, so ``1/2*s1`` is fine but ``s1/s2`` is not.
Negative exponents are allowed on monomials; such Laurent input is shifted
by a common monomial at ingestion and the shift is reported.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import LatticePolygon
from .polyring import BiPoly, shift_to_nonnegative

SURFACE_VARS = ("s1", "s2")
CURVE_VARS = ("s",)


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.msg = msg
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}, column {col}: " if col is not None else f"line {line}: "
        super().__init__(where + msg)


# Laurent polynomials during evaluation: dict exponent-tuple -> Fraction


def _l_add(a, b, sign=1):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _l_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1[0] + e2[0], e1[1] + e2[1])
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _const_value(p):
    if not p:
        return Fraction(0)
    if len(p) == 1 and (0, 0) in p:
        return Fraction(p[(0, 0)])
    return None


class _Evaluator:
    def __init__(self, variables, src_map):
        self.vars = {name: k for k, name in enumerate(variables)}
        self.src_map = src_map

    def fail(self, node, msg):
        line = getattr(node, "lineno", None)
        col = getattr(node, "col_offset", None)
        if col is not None:
            col = self.src_map(line, col) + 1
        raise ParseError(msg, line, col)

    def visit(self, node):
        if isinstance(node, ast.Expression):
            return self.visit(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                self.fail(node, f"unsupported literal {node.value!r} (integers only)")
            return {(0, 0): Fraction(node.value)} if node.value else {}
        if isinstance(node, ast.Name):
            if node.id not in self.vars:
                names = ", ".join(self.vars)
                self.fail(node, f"unknown variable {node.id!r} (expected {names})")
            e = [0, 0]
            e[self.vars[node.id]] = 1
            return {tuple(e): Fraction(1)}
        if isinstance(node, ast.UnaryOp):
            v = self.visit(node.operand)
            if isinstance(node.op, ast.USub):
                return {e: -c for e, c in v.items()}
            if isinstance(node.op, ast.UAdd):
                return v
            self.fail(node, "unsupported unary operator")
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                return self.power(node)
            a = self.visit(node.left)
            b = self.visit(node.right)
            if isinstance(node.op, ast.Add):
                return _l_add(a, b)
            if isinstance(node.op, ast.Sub):
                return _l_add(a, b, -1)
            if isinstance(node.op, ast.Mult):
                return _l_mul(a, b)
            if isinstance(node.op, ast.Div):
                c = _const_value(b)
                if c is None:
                    self.fail(node.right, "division is only allowed by constants")
                if c == 0:
                    self.fail(node.right, "division by zero")
                return {e: v / c for e, v in a.items()}
            self.fail(node, "unsupported operator")
        self.fail(node, f"unsupported syntax ({type(node).__name__})")

    def power(self, node):
        base = self.visit(node.left)
        ex = self.visit(node.right)
        k = _const_value(ex)
        if k is None or k.denominator != 1:
            self.fail(node.right, "exponent must be an integer")
        k = int(k)
        if k < 0:
            if len(base) != 1:
                self.fail(node, "negative exponents are only allowed on monomials")
            (e, c), = base.items()
            return {(e[0] * k, e[1] * k): Fraction(1) / c**(-k)}
        out = {(0, 0): Fraction(1)}
        for _ in range(k):
            out = _l_mul(out, base)
        return out


def _translate(text):
    """Replace ``^`` by ``**``; return new text and a column mapper."""
    lines = text.split("\n")
    new_lines = []
    maps = []
    for line in lines:
        out = []
        m = []
        i = 0
        while i < len(line):
            ch = line[i]
            if ch == "^":
                out.append("**")
                m.extend([i, i])
            else:
                out.append(ch)
                m.append(i)
            i += 1
        m.append(len(line))
        new_lines.append("".join(out))
        maps.append(m)

    def src_map(lineno, col):
        if lineno is None or lineno - 1 >= len(maps):
            return col
        m = maps[lineno - 1]
        return m[min(col, len(m) - 1)]

    return "\n".join(new_lines), src_map


def parse_laurent(text, variables=SURFACE_VARS):
    """Terms of a Laurent polynomial as ``{(i, j): Fraction}``."""
    if not text or not text.strip():
        raise ParseError("empty expression")
    if re.search(r"\d[A-Za-z_]", text):
        m = re.search(r"\d[A-Za-z_]", text)
        raise ParseError("implicit multiplication is not allowed", 1, m.start() + 2)
    src, src_map = _translate(text.strip())
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        col = src_map(exc.lineno, (exc.offset or 1) - 1) + 1
        raise ParseError(f"syntax error: {exc.msg}", exc.lineno, col) from None
    return _Evaluator(variables, src_map).visit(tree)


def _to_bipoly(terms):
    return BiPoly({e: c for e, c in terms.items()})


def parse_with_shift(text, variables=SURFACE_VARS):
    """``(BiPoly, shift)``: Laurent input multiplied by its minimal monomial."""
    terms = parse_laurent(text, variables)
    (shifted,), shift = shift_to_nonnegative([terms])
    return _to_bipoly(shifted), shift


def parse_polynomial(text, variables=SURFACE_VARS):
    """Parse one expression into a BiPoly (Laurent input is shifted)."""
    return parse_with_shift(text, variables)[0]


def parse_system(texts, variables=SURFACE_VARS):
    """Parse several expressions with one common Laurent shift."""
    raw = []
    for k, t in enumerate(texts):
        try:
            raw.append(parse_laurent(t, variables))
        except ParseError as exc:
            raise ParseError(f"f{k}: {exc.msg}", exc.line, exc.col) from None
    shifted, shift = shift_to_nonnegative(raw)
    return [_to_bipoly(t) for t in shifted], shift


def serialize(f, variables=SURFACE_VARS):
    """Text form that ``parse_polynomial`` reads back."""
    if not f:
        return "0"
    parts = []
    for e, c in sorted(f.items(), key=lambda it: (it[0][0] + it[0][1], it[0][0])):
        mono = []
        for name, k in zip(variables, e):
            if k == 1:
                mono.append(name)
            elif k:
                mono.append(f"{name}^{k}")
        c = Fraction(c)
        coef = str(abs(c.numerator)) if c.denominator == 1 else f"{abs(c.numerator)}/{c.denominator}"
        body = "*".join(([coef] if coef != "1" or not mono else []) + mono)
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# problem files


@dataclass
class ProblemSpec:
    fs: list
    polygon_mode: str = "auto"  # auto | explicit | hirzebruch
    polygon: object = None
    hirzebruch: object = None
    shift: tuple = (0, 0)
    texts: list = field(default_factory=list)


def parse_polygon(text):
    """``"(x,y);(x,y);..."`` into a LatticePolygon."""
    pts = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)
    rest = re.sub(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)", "", text)
    if not pts or rest.replace(";", "").strip():
        raise ParseError(f"cannot read polygon {text!r}; expected (x,y);(x,y);...")
    return LatticePolygon([(int(x), int(y)) for x, y in pts])


def parse_triple(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(re.fullmatch(r"\d+", p) for p in parts):
        raise ParseError(f"expected a,b,n with nonnegative integers, got {text!r}")
    return tuple(int(p) for p in parts)


def parse_problem(text, curve=False):
    """Read the ``P:`` / ``f0 = ...`` file layout."""
    variables = CURVE_VARS if curve else SURFACE_VARS
    nf = 3 if curve else 4
    found = {}
    mode, polygon, hirz = "auto", None, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"P\s*:\s*(.*)", line)
        if m:
            val = m.group(1).strip()
            try:
                if val == "auto" or not val:
                    mode = "auto"
                elif val.startswith("hirzebruch"):
                    hirz = parse_triple(val[len("hirzebruch"):])
                    mode = "hirzebruch"
                else:
                    polygon = parse_polygon(val)
                    mode = "explicit"
            except ParseError as exc:
                raise ParseError(exc.msg, lineno) from None
            continue
        m = re.fullmatch(r"f(\d)\s*=\s*(.*)", line)
        if not m:
            raise ParseError(f"cannot read {line!r}; expected 'P: ...' or 'fK = ...'", lineno)
        k = int(m.group(1))
        if k >= nf:
            raise ParseError(f"f{k} is out of range for {nf} polynomials", lineno)
        if k in found:
            raise ParseError(f"f{k} given twice", lineno)
        try:
            terms = parse_laurent(m.group(2), variables)
        except ParseError as exc:
            raise ParseError(f"f{k}: {exc.msg}", lineno, exc.col) from None
        found[k] = (m.group(2), terms)
    missing = [k for k in range(nf) if k not in found]
    if missing:
        raise ParseError(f"missing definition of f{missing[0]}")
    raw_terms = [found[k][1] for k in range(nf)]
    shifted, shift = shift_to_nonnegative(raw_terms)
    fs = [_to_bipoly(t) for t in shifted]
    if polygon is not None and shift != (0, 0):
        polygon = polygon.translate(shift)
    return ProblemSpec(fs, mode, polygon, hirz, shift, [found[k][0] for k in range(nf)])
