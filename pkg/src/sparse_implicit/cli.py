"""Command-line front end.

Surface problems come from a file with an optional ``P:`` line and the
lines ``f0 = ...`` to ``f3 = ...`` (``-`` reads standard input).  Exit codes:
0 success, 2 parse error, 3 precondition failure, 4 rank or diagnostic
failure.  An uncertified result still exits 0 and warns on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, exactla
from .expr import (CURVE_VARS, ParseError, parse_polygon, parse_problem,
                   parse_system, parse_triple)
from .implicit import (ImplicitizationError, PreconditionError, RankError,
                       gcd_of_maximal_minors, implicit_equation, naive_implicitize,
                       predicted_degree, system_size)
from .interp import DEFAULT_SEED, InterpolationError
from .lattice import LatticeError, ehrhart_count, hirzebruch, hull_of, lattice_area
from .matrep import (RepresentationError, build_hirzebruch_rep, build_matrix_rep,
                     integral_point, membership, moving_lines_matrix, squareify)
from .polyring import PolynomialError, dehomogenize
from .syzygy import SyzygyError

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_DIAGNOSTIC = 4


class CliError(Exception):
    def __init__(self, msg, code):
        super().__init__(msg)
        self.code = code


# ---------------------------------------------------------------------------
# serialization


def rat(c):
    c = Fraction(c)
    return [c.numerator, c.denominator]


def poly_doc(p):
    """Structured form of a TPoly or BiPoly: ordered terms plus text."""
    return {
        "text": str(p),
        "terms": [{"exponent": list(e), "coeff": rat(c)} for e, c in p.sorted_terms()],
    }


def matrix_doc(M):
    return {
        "rows": M.nrows,
        "cols": M.ncols,
        "variant": M.variant,
        "row_points": [list(p) for p in M.rows],
        "entries": [[[rat(x) for x in M.entry(i, j)] for j in range(M.ncols)]
                    for i in range(M.nrows)],
        "generic_rank": M.generic_rank(),
        "full_rank_ok": M.full_rank_ok,
    }


def matrix_text(M):
    lines = [f"matrix {M.nrows} x {M.ncols} (variant {M.variant}, "
             f"generic rank {M.generic_rank()})"]
    lines.append("row lattice points: " + " ".join(f"({p[0]},{p[1]})" for p in M.rows))
    for i in range(M.nrows):
        lines.append("[" + ", ".join(str(M.entry(i, j)) for j in range(M.ncols)) + "]")
    return "\n".join(lines)


def emit(args, doc, text):
    if args.format == "structured":
        json.dump(doc, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# ---------------------------------------------------------------------------
# problem loading


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None


def load_problem(args):
    spec = parse_problem(_read(args.spec))
    if args.polygon is not None:
        if args.polygon == "auto":
            spec.polygon_mode, spec.polygon = "auto", None
        else:
            spec.polygon_mode, spec.polygon = "explicit", parse_polygon(args.polygon)
            if spec.shift != (0, 0):
                spec.polygon = spec.polygon.translate(spec.shift)
    if args.hirzebruch is not None:
        spec.polygon_mode, spec.hirzebruch = "hirzebruch", parse_triple(args.hirzebruch)
    variant = args.variant
    if variant is None:
        variant = "hirzebruch" if spec.polygon_mode == "hirzebruch" else "general"
    if variant == "hirzebruch" and spec.hirzebruch is None:
        raise CliError("the hirzebruch variant needs --hirzebruch a,b,n", EXIT_PRECONDITION)
    spec.variant = variant
    return spec


def problem_polygon(spec):
    if spec.polygon_mode == "hirzebruch":
        return hirzebruch(*spec.hirzebruch)
    if spec.polygon is not None:
        return spec.polygon
    return hull_of([f for f in spec.fs if f])


def _orientation(args):
    return {"h": "horizontal", "v": "vertical", None: None}[args.orientation]


def build_rep(spec, args):
    if spec.variant == "hirzebruch":
        return build_hirzebruch_rep(spec.fs, *spec.hirzebruch, orientation=_orientation(args))
    return build_matrix_rep(spec.fs, problem_polygon(spec), variant=spec.variant)


def header(spec, args):
    doc = {"variant": spec.variant, "seed": args.seed, "shift": list(spec.shift),
           "polygon": [list(v) for v in problem_polygon(spec).vertices]}
    if spec.hirzebruch is not None and spec.variant == "hirzebruch":
        doc["hirzebruch"] = list(spec.hirzebruch)
    return doc


def _warn(msg):
    sys.stderr.write(f"warning: {msg}\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_matrix_rep(args):
    spec = load_problem(args)
    M = build_rep(spec, args)
    doc = dict(header(spec, args), command="matrix-rep", matrix=matrix_doc(M))
    if M.diagnostics is not None:
        doc["diagnostics"] = M.diagnostics.as_dict()
    emit(args, doc, matrix_text(M))
    if not M.full_rank_ok:
        _warn("matrix is not of full generic rank")
    return 0


def cmd_implicitize(args):
    spec = load_problem(args)
    P = None if spec.variant == "hirzebruch" else problem_polygon(spec)
    res = implicit_equation(spec.fs, P, variant=spec.variant, hirzebruch=spec.hirzebruch,
                            orientation=_orientation(args), seed=args.seed)
    F = res.F if res.F is not None else res.G
    shown = dehomogenize(F) if args.affine else F
    doc = dict(header(spec, args), command="implicitize",
               shape=list(res.matrix.shape), G=poly_doc(res.G),
               F=poly_doc(res.F) if res.F is not None else None,
               k=res.k, degree=res.degree, certified=res.certified,
               diagnostics=res.diagnostics.as_dict(), warnings=list(res.warnings))
    if args.affine:
        doc["affine"] = poly_doc(shown)
    text = [f"matrix {res.matrix.nrows} x {res.matrix.ncols}",
            f"degree {res.degree}, k = {res.k}, certified = {str(res.certified).lower()}",
            ("F = " if not args.affine else "F(1,T1,T2,T3) = ") + str(shown)]
    emit(args, doc, "\n".join(text))
    for w in res.warnings:
        _warn(w)
    if not res.certified and not res.warnings:
        _warn("result is not certified")
    return 0


def parse_point(text):
    try:
        vals = [Fraction(p.strip()) for p in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise CliError(f"cannot read point {text!r}", EXIT_PARSE) from None
    if len(vals) == 3:
        return [Fraction(1)] + vals
    if len(vals) == 4:
        return vals
    raise CliError("a point needs 3 affine or 4 homogeneous coordinates", EXIT_PARSE)


def cmd_membership(args):
    spec = load_problem(args)
    point = parse_point(args.point)
    M = build_rep(spec, args)
    if not M.full_rank_ok:
        raise RankError("matrix is not of full generic rank; membership is meaningless")
    on = membership(M, point)
    r = M.rank_at(integral_point(point))
    doc = dict(header(spec, args), command="membership", point=[rat(x) for x in point],
               on_surface=on, rank_at_point=r, generic_rank=M.generic_rank())
    verdict = "on-surface" if on else "off-surface"
    emit(args, doc, f"{verdict} (rank {r} at the point, generic rank {M.generic_rank()})")
    return 0


def cmd_curve(args):
    if len(args.polys) == 1:
        spec = parse_problem(_read(args.polys[0]), curve=True)
        fs = spec.fs
    elif len(args.polys) == 3:
        fs, _ = parse_system(args.polys, CURVE_VARS)
    else:
        raise CliError("curve takes a problem file or three polynomials in s", EXIT_PARSE)
    M = moving_lines_matrix(*fs, nu=args.nu)
    if not M.full_rank_ok:
        raise RankError("moving-line matrix is not of full generic rank")
    G = gcd_of_maximal_minors(M, seed=args.seed)
    kind = "determinant" if M.nrows == M.ncols else "gcd of maximal minors"
    shown = dehomogenize(G) if args.affine else G
    doc = {"command": "curve", "nu": M.meta["nu"], "degree": M.meta["d"], "seed": args.seed,
           "matrix": matrix_doc(M), "kind": kind, "G": poly_doc(G)}
    if args.affine:
        doc["affine"] = poly_doc(shown)
    emit(args, doc, matrix_text(M) + f"\n{kind}: {shown}")
    return 0


def cmd_naive(args):
    spec = load_problem(args)
    F = naive_implicitize(spec.fs, problem_polygon(spec), max_degree=args.max_naive_degree)
    shown = dehomogenize(F) if args.affine else F
    doc = dict(header(spec, args), command="naive", F=poly_doc(F),
               degree=F.total_degree())
    if args.affine:
        doc["affine"] = poly_doc(shown)
    emit(args, doc, f"F = {shown}")
    return 0


def cmd_polygon_info(args):
    spec = load_problem(args)
    P = problem_polygon(spec)
    P.require_2d("polygon-info")
    pts = P.lattice_points()
    ehr = [{"t": t, "formula": ehrhart_count(P, t), "enumerated": len(P.dilate(t))}
           for t in (1, 2, 3)]
    sizes = {}
    for method in ("naive", "syzygy"):
        rep = system_size(P, method)
        sizes[method] = {"unknowns": rep.unknowns, "equations": rep.equations,
                         "closed_form": rep.closed_form}
    doc = dict(header(spec, args), command="polygon-info",
               vertices=[list(v) for v in P.vertices],
               lattice_points=[list(p) for p in pts],
               lattice_area=lattice_area(P), predicted_degree=predicted_degree(P),
               boundary=P.boundary_count(), interior=P.interior_count(),
               ehrhart=ehr, system_size=sizes)
    text = ["vertices: " + " ".join(f"({v[0]},{v[1]})" for v in P.vertices),
            f"lattice points: {len(pts)} ({P.boundary_count()} boundary, "
            f"{P.interior_count()} interior)",
            f"lattice area: {lattice_area(P)}",
            f"predicted degree: {predicted_degree(P)}",
            "ehrhart: " + ", ".join(f"{e['t']}P -> {e['formula']}" for e in ehr)]
    for method, s in sizes.items():
        text.append(f"{method}: {s['unknowns']} unknowns, {s['equations']} equations")
    emit(args, doc, "\n".join(text))
    return 0


def cmd_squareify(args):
    spec = load_problem(args)
    M = build_rep(spec, args)
    Q = squareify(M)
    doc = dict(header(spec, args), command="squareify", size=len(Q),
               entries=[[poly_doc(x) for x in row] for row in Q])
    text = [f"M*M^T, {len(Q)} x {len(Q)}"]
    text += ["[" + ", ".join(str(x) for x in row) + "]" for row in Q]
    emit(args, doc, "\n".join(text))
    return 0


# ---------------------------------------------------------------------------


def _common(p, problem=True):
    if problem:
        p.add_argument("spec", help="problem file, or - for standard input")
        p.add_argument("--polygon", help='auto or "(x,y);(x,y);..."')
        p.add_argument("--hirzebruch", metavar="A,B,N")
        p.add_argument("--orientation", choices=("h", "v"))
        p.add_argument("--variant", choices=("general", "refined", "hirzebruch"))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--affine", action="store_true", help="dehomogenize at T0 = 1")
    p.add_argument("--max-naive-degree", type=int, default=6)


def build_parser():
    ap = argparse.ArgumentParser(prog="sparse-implicit",
                                 description="Implicit equations of sparse rational "
                                             "surfaces and curves from linear syzygies.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)
    table = [("matrix-rep", cmd_matrix_rep, "matrix representation"),
             ("implicitize", cmd_implicitize, "implicit equation"),
             ("membership", cmd_membership, "rank-drop test at a point"),
             ("naive", cmd_naive, "undetermined-coefficient oracle"),
             ("polygon-info", cmd_polygon_info, "polygon and system-size report"),
             ("squareify", cmd_squareify, "M times its transpose")]
    for name, fn, help_ in table:
        p = sub.add_parser(name, help=help_)
        _common(p)
        if name == "membership":
            p.add_argument("--point", required=True, help="x,y,z for (1,x,y,z), or 4 coordinates")
        p.set_defaults(func=fn)
    p = sub.add_parser("curve", help="moving-line matrix of a planar curve")
    p.add_argument("polys", nargs="+", help="three polynomials in s, or a problem file")
    p.add_argument("--nu", type=int)
    _common(p, problem=False)
    p.set_defaults(func=cmd_curve)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        code, msg = exc.code, str(exc)
    except ParseError as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except RankError as exc:
        code, msg = EXIT_DIAGNOSTIC, str(exc)
    except (PreconditionError, RepresentationError, LatticeError, SyzygyError,
            PolynomialError, ImplicitizationError, exactla.LinAlgError,
            InterpolationError) as exc:
        code, msg = EXIT_PRECONDITION, str(exc)
    sys.stderr.write(f"error: {msg}\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
