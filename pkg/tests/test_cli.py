import json
import random
import subprocess
import sys
from fractions import Fraction


from sparse_implicit.cli import EXIT_DIAGNOSTIC, EXIT_PARSE, EXIT_PRECONDITION, main
from sparse_implicit.implicit import naive_implicitize

from fixtures import PROBLEMS, QUAD_FS, QUAD_P

QUAD = str(PROBLEMS / "quad.txt")
RECT = str(PROBLEMS / "rect.txt")
SPARSE6 = str(PROBLEMS / "sparse6.txt")
PARABOLA = str(PROBLEMS / "parabola.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def structured(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "structured")
    assert code == 0, err
    return json.loads(out), out


def no_floats(doc):
    if isinstance(doc, float):
        return False
    if isinstance(doc, dict):
        return all(no_floats(v) for v in doc.values())
    if isinstance(doc, list):
        return all(no_floats(v) for v in doc)
    return True


def test_polygon_info_example(capsys):
    doc, _ = structured(capsys, "polygon-info", QUAD)
    assert doc["lattice_area"] == 3 and doc["predicted_degree"] == 3
    counts = {e["t"]: e["enumerated"] for e in doc["ehrhart"]}
    assert counts == {1: 5, 2: 12, 3: 22}
    assert all(e["formula"] == e["enumerated"] for e in doc["ehrhart"])
    assert doc["system_size"]["syzygy"]["unknowns"] == 48


def test_matrix_rep_structured(capsys):
    doc, _ = structured(capsys, "matrix-rep", QUAD)
    m = doc["matrix"]
    assert (m["rows"], m["cols"]) == (12, 26)
    assert len(m["row_points"]) == 12 and m["full_rank_ok"] is True
    assert doc["variant"] == "general" and "seed" in doc
    entry = m["entries"][0][0]
    assert len(entry) == 4 and all(len(c) == 2 for c in entry)
    assert no_floats(doc)


def test_structured_output_deterministic(capsys):
    _, a = structured(capsys, "implicitize", QUAD)
    _, b = structured(capsys, "implicitize", QUAD)
    assert a == b


def test_implicitize_quad(capsys):
    doc, _ = structured(capsys, "implicitize", QUAD)
    assert doc["degree"] == 3 and doc["certified"] is True and doc["k"] == 1
    F = naive_implicitize(QUAD_FS, QUAD_P)
    got = {tuple(t["exponent"]): Fraction(*t["coeff"]) for t in doc["F"]["terms"]}
    assert got == dict(F.items())


def test_implicitize_hirzebruch(capsys):
    doc, _ = structured(capsys, "implicitize", RECT)
    assert doc["shape"] == [8, 8] and doc["degree"] == 8


def test_implicitize_text_and_affine(capsys):
    code, out, _ = run(capsys, "implicitize", QUAD, "--affine")
    assert code == 0 and "F(1,T1,T2,T3) = " in out and "T0" not in out.split("=", 1)[1]


def test_membership(capsys):
    rng = random.Random(4)
    F = naive_implicitize(QUAD_FS, QUAD_P)
    while True:
        p = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        if F([1] + p):
            break
    code, out, _ = run(capsys, "membership", QUAD, "--point=" + ",".join(map(str, p)))
    assert code == 0 and out.startswith("off-surface")
    s = (Fraction(2, 3), Fraction(-1, 2))
    img = [f(s) for f in QUAD_FS]
    code, out, _ = run(capsys, "membership", QUAD, "--point=" + ",".join(map(str, img)))
    assert out.startswith("on-surface")


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", PARABOLA)
    assert code == 0 and "determinant: T0*T2 - T1^2" in out
    doc, _ = structured(capsys, "curve", "1", "s", "s^2")
    assert doc["matrix"]["rows"] == 2 and doc["kind"] == "determinant"


def test_naive_and_squareify(capsys):
    code, out, _ = run(capsys, "naive", QUAD)
    assert code == 0 and out.startswith("F = ")
    code, out, _ = run(capsys, "naive", RECT)
    assert code == EXIT_PRECONDITION
    code, out, _ = run(capsys, "naive", RECT, "--max-naive-degree", "8")
    assert code == 0
    doc, _ = structured(capsys, "squareify", QUAD)
    assert doc["size"] == 12


def test_polygon_override(capsys, tmp_path):
    doc, _ = structured(capsys, "matrix-rep", SPARSE6, "--polygon", "auto")
    assert doc["matrix"]["rows"] == 17
    code, out, err = run(capsys, "implicitize", SPARSE6, "--polygon", "(0,0);(8,0);(0,8)")
    assert code == EXIT_DIAGNOSTIC and "full generic rank" in err


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("f0 = 1 +\nf1 = 1\nf2 = 1\nf3 = 1\n")
    code, _, err = run(capsys, "implicitize", str(bad))
    assert code == EXIT_PARSE and "line 1" in err
    code, _, _ = run(capsys, "membership", QUAD, "--point", "1,2")
    assert code == EXIT_PARSE
    common = tmp_path / "common.txt"
    common.write_text("f0 = 1 + s1\nf1 = s2*(1 + s1)\nf2 = s1*(1 + s1)\nf3 = s1*s2*(1 + s1)\n")
    code, out, err = run(capsys, "implicitize", str(common))
    assert code == EXIT_PRECONDITION and out == "" and "factor" in err


def test_stdin_and_module_entry():
    text = open(QUAD).read()
    proc = subprocess.run([sys.executable, "-m", "sparse_implicit", "polygon-info", "-"],
                          input=text, capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and "lattice area: 3" in proc.stdout
