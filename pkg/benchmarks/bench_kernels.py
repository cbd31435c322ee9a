"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N] [--json FILE]

Kernel timings call both modules directly on identical seeded inputs.
End-to-end timings run a workload in a subprocess with and without
FOLKMAN_PURE_PYTHON so the whole library switches backend.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from folkman import _pykernels

try:
    from folkman import _ckernels
except ImportError:
    _ckernels = None


def _graph_rows(n, density, seed):
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def _cases():
    g48 = _graph_rows(48, 0.5, 1)
    g27 = _graph_rows(27, 0.6, 2)
    c27 = [((1 << 27) - 1) ^ r ^ (1 << v) for v, r in enumerate(g27)]
    g30 = _graph_rows(30, 0.3, 3)
    clique30 = _pykernels.max_clique(g30, (1 << 30) - 1)
    return {
        "max_clique n=48 p=0.5": lambda k: k.max_clique(g48, (1 << 48) - 1),
        "count 5-cliques n=48": lambda k: k.count_cliques(g48, (1 << 48) - 1, 5, 0),
        "flip_deltas n=27 (8,3)": lambda k: k.flip_deltas(g27, c27, 27, 8, 3, 0),
        "chromatic search n=30": lambda k: k.color_search(g30, 30, clique30, 31, None, len(clique30), 0),
    }


END_TO_END = {
    "mine (6,3) on 17 vertices": "from folkman.miner import mine, MinerConfig; mine(MinerConfig(n=17, p=6))",
    "mine (8,3) on 27 vertices": "from folkman.miner import mine, MinerConfig; mine(MinerConfig(n=27, p=8))",
    "triangle-free classes to order 9": "from folkman.enumeration import class_counts; class_counts(9, 3)",
}


def _subprocess_time(code, pure):
    env = dict(os.environ, FOLKMAN_PURE_PYTHON="1" if pure else "")
    wrapped = f"import time; t = time.perf_counter(); {code}; print(time.perf_counter() - t)"
    out = subprocess.run([sys.executable, "-c", wrapped], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
    results = []
    for name, fn in _cases().items():
        row = {"case": name}
        for label, mod in (("python", _pykernels), ("cython", _ckernels)):
            if mod is None:
                continue
            number = 1
            while timeit.timeit(lambda: fn(mod), number=number) < 0.2:
                number *= 2
            row[label] = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
        results.append(row)
    if not args.skip_end_to_end:
        for name, code in END_TO_END.items():
            row = {"case": name, "python": min(_subprocess_time(code, True) for _ in range(args.repeat))}
            if _ckernels is not None:
                row["cython"] = min(_subprocess_time(code, False) for _ in range(args.repeat))
            results.append(row)

    print(f"{'case':36s} {'python s':>12s} {'cython s':>12s} {'speedup':>8s}")
    for row in results:
        py, cy = row["python"], row.get("cython")
        speed = f"{py / cy:7.1f}x" if cy else "      -"
        cy_text = f"{cy:12.6f}" if cy else f"{'-':>12s}"
        print(f"{row['case']:36s} {py:12.6f} {cy_text} {speed}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=1)


if __name__ == "__main__":
    main()
