"""Exact vertex and edge arrowing deciders with checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from folkman import kernels
from folkman.graph import CapacityError, Graph
from folkman.invariants import VertexColoring, chromatic_number, optimal_coloring
from folkman.ramsey import multicolor_ramsey

DEFAULT_MAX_ORDER = 64
DEFAULT_MAX_EDGES = 40


class NonexistenceError(ValueError):
    """The requested Folkman number does not exist (q <= max(a))."""


def normalize_pattern(a: Sequence[int]) -> tuple[int, ...]:
    """Drop entries equal to 1 and sort descending."""
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError(f"pattern entries must be positive: {a}")
    return tuple(sorted((x for x in a if x != 1), reverse=True))


@dataclass(frozen=True)
class EdgeColoring:
    """Each edge ``(u, v)``, ``u < v``, mapped to a class in ``1..r``."""

    n: int
    assignment: dict
    r: int

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.r)]
        for e in sorted(self.assignment):
            out[self.assignment[e] - 1].append(e)
        return out

    def to_dict(self) -> dict:
        return {"r": self.r, "classes": [[list(e) for e in c] for c in self.classes()]}


@dataclass
class ExhaustionRecord:
    nodes: int = 0
    prunes: int = 0
    complete: bool = True

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "prunes": self.prunes, "complete": self.complete}


Certificate = Union[VertexColoring, EdgeColoring, ExhaustionRecord]


@dataclass
class ArrowVerdict:
    arrows: bool
    kind: str
    pattern: tuple[int, ...]
    certificate: Certificate
    stats: ExhaustionRecord = field(default_factory=ExhaustionRecord)

    def to_dict(self) -> dict:
        cert = self.certificate
        return {
            "arrows": self.arrows,
            "kind": self.kind,
            "pattern": list(self.pattern),
            "certificate": {
                "type": "exhaustion" if isinstance(cert, ExhaustionRecord) else "coloring",
                **cert.to_dict(),
            },
            "search": self.stats.to_dict(),
        }


def _has_clique_in(rows, mask: int, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    return kernels.count_cliques(rows, mask, k, 1) > 0


def verify_vertex_counterexample(g: Graph, a: Sequence[int], coloring: VertexColoring) -> bool:
    """Fresh check that no class ``i`` contains an ``a[i]``-clique."""
    if coloring.n != g.n or coloring.r > len(a):
        return False
    for i, cls in enumerate(coloring.classes()):
        mask = 0
        for v in cls:
            mask |= 1 << v
        if _has_clique_in(g.rows, mask, a[i]):
            return False
    return True


def verify_edge_counterexample(g: Graph, a: Sequence[int], coloring: EdgeColoring) -> bool:
    if set(coloring.assignment) != set(g.edges()) or coloring.r > len(a):
        return False
    for i, cls in enumerate(coloring.classes()):
        rows = [0] * g.n
        for u, v in cls:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if _has_clique_in(rows, (1 << g.n) - 1, a[i]):
            return False
    return True


def _vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def vertex_arrows(g: Graph, a: Sequence[int], max_order: int = DEFAULT_MAX_ORDER) -> ArrowVerdict:
    """Decide whether every ``r``-partition of V(g) has a class-``i`` ``a[i]``-clique.

    Backtracks over class assignments in descending-degree order. A vertex
    may join class ``i`` only if its neighbours already in class ``i`` hold no
    ``(a[i]-1)``-clique, so partial assignments never contain a forbidden
    clique; a branch dies as soon as some unassigned vertex has no admissible
    class. Among empty classes with equal targets only the first is tried.
    """
    pattern = normalize_pattern(a)
    if g.n > max_order:
        raise CapacityError(f"vertex arrowing refused for order {g.n} > {max_order}")
    stats = ExhaustionRecord()
    if not pattern:
        # only 1s: any vertex in any class is a 1-clique
        if g.n:
            return ArrowVerdict(True, "vertex", pattern, stats, stats)
        return ArrowVerdict(False, "vertex", pattern, VertexColoring((), 0), stats)
    r = len(pattern)
    rows = g.rows
    order = _vertex_order(g)
    classes = [0] * r
    assign = [0] * g.n

    def admissible(v: int, i: int) -> bool:
        return not _has_clique_in(rows, classes[i] & rows[v], pattern[i] - 1)

    def recurse(pos: int) -> bool:
        stats.nodes += 1
        if pos == len(order):
            return True
        v = order[pos]
        for i in range(r):
            if not classes[i] and i and not classes[i - 1] and pattern[i] == pattern[i - 1]:
                continue
            if not admissible(v, i):
                continue
            classes[i] |= 1 << v
            assign[v] = i + 1
            dead = False
            for u in order[pos + 1:]:
                if (rows[v] >> u) & 1 and not any(admissible(u, j) for j in range(r)):
                    dead = True
                    break
            if dead:
                stats.prunes += 1
            elif recurse(pos + 1):
                return True
            classes[i] &= ~(1 << v)
            assign[v] = 0
        return False

    if recurse(0):
        col = VertexColoring(tuple(assign), r)
        return ArrowVerdict(False, "vertex", pattern, col, stats)
    return ArrowVerdict(True, "vertex", pattern, stats, stats)


def vertex_arrows_all2(g: Graph, r: int) -> ArrowVerdict:
    """``g`` arrows ``(2,...,2)`` with ``r`` entries iff ``chi(g) >= r + 1``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    pattern = (2,) * r
    col = optimal_coloring(g)
    stats = ExhaustionRecord()
    if col.r >= r + 1:
        return ArrowVerdict(True, "vertex", pattern, stats, stats)
    # pad unused classes so the certificate has exactly r classes available
    return ArrowVerdict(False, "vertex", pattern, VertexColoring(col.assignment, r), stats)


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    # edges to earlier vertices in descending-degree order, so triangles close early
    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    edges = [(u, v) if u < v else (v, u) for u, v in g.edges()]
    return sorted(edges, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


def edge_arrows(g: Graph, a: Sequence[int], max_edges: int = DEFAULT_MAX_EDGES) -> ArrowVerdict:
    """Decide whether every ``r``-colouring of E(g) has a colour-``i`` ``a[i]``-clique.

    Backtracks over edge colours; an edge may take colour ``i`` only if its
    endpoints' common colour-``i`` neighbourhood holds no ``(a[i]-2)``-clique.
    Interchangeable colours (equal targets) are opened in order.
    """
    raw = tuple(a)
    if any(x < 1 for x in raw):
        raise ValueError(f"pattern entries must be positive: {raw}")
    stats = ExhaustionRecord()
    if any(x == 1 for x in raw):
        # a 1-clique needs no edge, so every colouring contains one
        return ArrowVerdict(True, "edge", tuple(sorted(raw, reverse=True)), stats, stats)
    pattern = tuple(sorted(raw, reverse=True))
    m = g.num_edges()
    if m > max_edges:
        raise CapacityError(f"edge arrowing refused for {m} edges > {max_edges}")
    r = len(pattern)
    if r == 0:
        return ArrowVerdict(False, "edge", pattern, EdgeColoring(g.n, {}, 0), stats)
    edges = _edge_order(g)
    crow = [[0] * g.n for _ in range(r)]
    used = [0] * r
    assign: dict = {}

    def admissible(e, i):
        u, v = e
        if crow[i][u] >> v & 1:
            return False
        return not _has_clique_in(crow[i], crow[i][u] & crow[i][v], pattern[i] - 2)

    def recurse(pos: int) -> bool:
        stats.nodes += 1
        if pos == len(edges):
            return True
        e = edges[pos]
        u, v = e
        for i in range(r):
            if not used[i] and i and not used[i - 1] and pattern[i] == pattern[i - 1]:
                continue
            if not admissible(e, i):
                continue
            crow[i][u] |= 1 << v
            crow[i][v] |= 1 << u
            used[i] += 1
            assign[e] = i + 1
            dead = False
            for f in edges[pos + 1:]:
                if (f[0] in e or f[1] in e) and not any(admissible(f, j) for j in range(r)):
                    dead = True
                    break
            if dead:
                stats.prunes += 1
            elif recurse(pos + 1):
                return True
            crow[i][u] &= ~(1 << v)
            crow[i][v] &= ~(1 << u)
            used[i] -= 1
            del assign[e]
        return False

    if recurse(0):
        return ArrowVerdict(False, "edge", pattern, EdgeColoring(g.n, dict(assign), r), stats)
    return ArrowVerdict(True, "edge", pattern, stats, stats)


def lin_chromatic_check(g: Graph, a: Sequence[int]) -> bool:
    """Necessary condition for edge arrowing: ``chi(g) >= R(a)``."""
    big = multicolor_ramsey(a)
    if big is None:
        raise ValueError(f"R{tuple(a)} is not tabulated")
    return chromatic_number(g) >= big


def check_existence(a: Sequence[int], q: int) -> tuple[int, ...]:
    pattern = normalize_pattern(a)
    top = max(pattern) if pattern else 1
    if q <= top:
        raise NonexistenceError(f"F_v{tuple(a)};{q} does not exist: q must exceed max(a) = {top}")
    return pattern


def folkman_value_search(a: Sequence[int], q: int, n_max: int) -> tuple[int, Graph] | None:
    """Smallest ``n <= n_max`` with a K_q-free graph arrowing ``a``, and a witness."""
    from folkman.enumeration import certify_folkman_value

    cert = certify_folkman_value(a, q, n_max)
    if cert.value is None:
        return None
    return cert.value, cert.witness


def arrows_with_pattern(g: Graph, a: Sequence[int]) -> bool:
    """Vertex-arrowing decision, using the chromatic fast path for all-2 patterns."""
    pattern = normalize_pattern(a)
    if pattern and all(x == 2 for x in pattern):
        return vertex_arrows_all2(g, len(pattern)).arrows
    return vertex_arrows(g, pattern).arrows
