import os
import random
import subprocess
import sys

import pytest

from conftest import random_graph
from folkman import _pykernels, kernels

ck = pytest.importorskip("folkman._ckernels") if kernels.BACKEND == "cython" else None


def _complement_rows(g):
    full = (1 << g.n) - 1
    return [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)]


@pytest.mark.skipif(ck is None, reason="compiled kernels not built")
def test_backends_agree():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(1, 64)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        rows = list(g.rows)
        full = (1 << n) - 1
        assert ck.max_clique(rows, full) == _pykernels.max_clique(rows, full)
        for k in (2, 3, 4):
            assert ck.count_cliques(rows, full, k, 0) == _pykernels.count_cliques(rows, full, k, 0)
            assert ck.count_cliques(rows, full, k, 5) == _pykernels.count_cliques(rows, full, k, 5)
        if n <= 20:
            crows = _complement_rows(g)
            assert list(ck.flip_deltas(rows, crows, n, 4, 3, 0)) == list(_pykernels.flip_deltas(rows, crows, n, 4, 3, 0))
        if n <= 30:
            clique = _pykernels.max_clique(rows, full)
            a = ck.color_search(rows, n, clique, n + 1, None, len(clique), 0)
            b = _pykernels.color_search(rows, n, clique, n + 1, None, len(clique), 0)
            assert a[0] == b[0]


@pytest.mark.skipif(ck is None, reason="compiled kernels not built")
def test_large_orders_fall_back():
    rng = random.Random(9)
    g = random_graph(rng, 100, 0.5)
    full = (1 << 100) - 1
    assert ck.max_clique(list(g.rows), full) == _pykernels.max_clique(list(g.rows), full)


def test_pure_python_switch():
    code = "from folkman import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, FOLKMAN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_results_independent_of_backend():
    code = (
        "from folkman.graph import cycle, mycielskian, to_graph6;"
        "from folkman.invariants import chromatic_number;"
        "from folkman.miner import mine, MinerConfig;"
        "print(chromatic_number(mycielskian(cycle(5))), to_graph6(mine(MinerConfig(n=13, p=5)).graph))"
    )
    outs = []
    for pure in ("", "1"):
        env = dict(os.environ, FOLKMAN_PURE_PYTHON=pure)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]
