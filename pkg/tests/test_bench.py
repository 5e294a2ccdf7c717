import importlib.util
from pathlib import Path

import pytest

from sparse_implicit import exactla

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


@pytest.mark.skipif(exactla.BACKEND != "cython", reason="compiled kernels not built")
def test_benchmark_runs_and_backends_agree(capsys):
    spec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1"]) == 0
    assert "speedup" in capsys.readouterr().out
