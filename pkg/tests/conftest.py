import itertools
import random

import pytest
from hypothesis import strategies as st

from folkman.graph import Graph


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    d = rng.random() if density is None else density
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < d])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


# --- brute-force oracles, deliberately naive ---


def bf_clique_number(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        if any(all(g.adjacent(u, v) for u, v in itertools.combinations(s, 2)) for s in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def bf_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    edges = list(g.edges())
    for r in range(1, g.n + 1):
        for col in itertools.product(range(r), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return r
    raise AssertionError


def bf_edge_arrows(g: Graph, a) -> bool:
    edges = list(g.edges())
    r = len(a)
    for col in itertools.product(range(r), repeat=len(edges)):
        mono = False
        for i in range(r):
            cls = {e for e, c in zip(edges, col) if c == i}
            for s in itertools.combinations(range(g.n), a[i]):
                if all((min(u, v), max(u, v)) in cls for u, v in itertools.combinations(s, 2)):
                    mono = True
                    break
            if mono:
                break
        if not mono:
            return False
    return True


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_TITLES = {
    1: "all-2 arrowing agrees with brute-force chi >= r+1 (exact, >= 300 graphs)",
    2: "join laws for chi, cl, f (exact, 200 pairs, order <= 16)",
    3: "F_v(2_2;3)=5 with C5 and F_v(2_3;4)=6 with the wheel (exact)",
    4: "no triangle-free graph of order <= 10 has chi >= 4; Groetzsch gives F_v(2_3;3)=11 (exact)",
    5: "construction families verify for all r <= 30 (exact)",
    6: "K_{r-m+1}+P pipeline gives F_v(2_13;8)=27 (exact)",
    7: "miner finds (p,3)-graphs at orders 5, 8, 13, 17 (exact verification)",
    8: "edge arrowing of K6/K5 and the chi >= R(3,3) screen to order 7 (exact)",
    9: "bound grid matches the statements and the golden file (zero diffs)",
    10: "property suite (involution, graph6, certificates, Gallai, minimal witnesses)",
}


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            num = int(nodeid.split("test_criterion_")[1].split("_")[0])
            if key != "passed" or num not in outcomes:
                outcomes[num] = "PASS" if key == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(outcomes):
        terminalreporter.write_line(f"criterion {num:2d}: {outcomes[num]}  {ACCEPTANCE_TITLES.get(num, '')}")
