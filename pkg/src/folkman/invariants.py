"""Exact clique, independence and chromatic numbers, plus derived predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from folkman import kernels
from folkman.graph import (
    Graph,
    complement,
    delete_vertices,
    induced_subgraph,
    is_clique,
    is_independent,
    join_components,
)


@dataclass(frozen=True)
class VertexColoring:
    """Assignment of each vertex to a class in ``1..r``."""

    assignment: tuple[int, ...]
    r: int

    def __post_init__(self):
        for v, c in enumerate(self.assignment):
            if not 1 <= c <= self.r:
                raise ValueError(f"vertex {v} has class {c} outside 1..{self.r}")

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Sequence[int]]) -> "VertexColoring":
        assignment = [0] * n
        for i, cls_ in enumerate(classes, start=1):
            for v in cls_:
                if assignment[v]:
                    raise ValueError(f"vertex {v} assigned twice")
                assignment[v] = i
        if 0 in assignment:
            raise ValueError(f"vertex {assignment.index(0)} unassigned")
        return cls(tuple(assignment), len(classes))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.r)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out

    def is_proper(self, g: Graph) -> bool:
        return self.n == g.n and all(is_independent(g, c) for c in self.classes())

    def to_dict(self) -> dict:
        return {"r": self.r, "classes": self.classes()}


def _all(g: Graph) -> int:
    return (1 << g.n) - 1


def max_clique(g: Graph) -> list[int]:
    return kernels.max_clique(g.rows, _all(g))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def max_independent_set(g: Graph) -> list[int]:
    return kernels.max_clique(complement(g).rows, _all(g))


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))


def has_clique(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    return kernels.count_cliques(g.rows, _all(g), k, 1) > 0


def _to_coloring(colors: Sequence[int], k: int) -> VertexColoring:
    return VertexColoring(tuple(c + 1 for c in colors), k)


def _simple_lower_bound(g: Graph) -> int:
    return max(clique_number(g), -(-g.n // independence_number(g)))


def _lower_bound(g: Graph, clique: list[int]) -> int:
    # chi adds over join factors, so bound each factor separately
    factors = join_components(g)
    if len(factors) == 1:
        return max(len(clique), -(-g.n // independence_number(g)))
    total = sum(_simple_lower_bound(induced_subgraph(g, f)) for f in factors)
    return max(len(clique), total)


def coloring_with_at_most(g: Graph, k: int, node_limit: int = 0) -> VertexColoring | None:
    """A proper colouring with at most ``k`` classes, or ``None`` if none exists.

    Raises ``RuntimeError`` if ``node_limit`` cuts the search short before a
    verdict is reached.
    """
    if g.n == 0:
        return VertexColoring((), 0)
    if k <= 0:
        return None
    clique = max_clique(g)
    if _lower_bound(g, clique) > k:
        return None
    best, colors, _, complete = kernels.color_search(g.rows, g.n, clique, k + 1, None, k, node_limit)
    if best <= k:
        return _to_coloring(colors, best)
    if not complete:
        raise RuntimeError(f"colouring search hit the node limit {node_limit}")
    return None


def is_colorable(g: Graph, k: int) -> bool:
    return coloring_with_at_most(g, k) is not None


def optimal_coloring(g: Graph) -> VertexColoring:
    """Minimum proper colouring by DSATUR branch and bound.

    A maximum clique is precoloured, so colour symmetry is broken on it, and
    the search stops once it meets ``max(cl, ceil(n / alpha))``.
    """
    n = g.n
    if n == 0:
        return VertexColoring((), 0)
    clique = max_clique(g)
    lb = _lower_bound(g, clique)
    # first DSATUR descent gives the incumbent
    ub, colors, _, _ = kernels.color_search(g.rows, n, clique, n + 1, None, n)
    if ub > lb:
        ub, colors, _, complete = kernels.color_search(g.rows, n, clique, ub, colors, lb)
        assert complete
    return _to_coloring(colors, ub)


def chromatic_number(g: Graph) -> int:
    return optimal_coloring(g).r


def deficiency(g: Graph) -> int:
    return chromatic_number(g) - clique_number(g)


def is_vertex_critical(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("vertex-criticality needs at least one vertex")
    chi = chromatic_number(g)
    return all(is_colorable(delete_vertices(g, [v]), chi - 1) for v in range(g.n))


def is_pq_graph(g: Graph, p: int, q: int) -> bool:
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    return not has_clique(g, p) and not has_clique(complement(g), q)


def m_membership(g: Graph, x: int, y: int) -> bool:
    """Whether ``g`` is in the family ``|V| < chi + 2f - x`` and ``f <= y``."""
    chi = chromatic_number(g)
    f = chi - clique_number(g)
    return g.n < chi + 2 * f - x and f <= y


@dataclass
class InvariantReport:
    order: int
    clique_number: int
    independence_number: int
    chromatic_number: int
    max_clique: list[int]
    max_independent_set: list[int]
    coloring: VertexColoring

    @property
    def deficiency(self) -> int:
        return self.chromatic_number - self.clique_number

    def verify(self, g: Graph) -> bool:
        return (
            is_clique(g, self.max_clique)
            and len(self.max_clique) == self.clique_number
            and is_independent(g, self.max_independent_set)
            and len(self.max_independent_set) == self.independence_number
            and self.coloring.is_proper(g)
            and self.coloring.r == self.chromatic_number
        )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "clique_number": self.clique_number,
            "independence_number": self.independence_number,
            "chromatic_number": self.chromatic_number,
            "deficiency": self.deficiency,
            "max_clique": self.max_clique,
            "max_independent_set": self.max_independent_set,
            "coloring": self.coloring.to_dict(),
        }


def invariant_report(g: Graph) -> InvariantReport:
    clique = max_clique(g)
    indep = max_independent_set(g)
    col = optimal_coloring(g)
    return InvariantReport(g.n, len(clique), len(indep), col.r, clique, indep, col)


# Lower bounds on |V(G)| in terms of chi and f, keyed by the deficiency values
# they cover. Each entry: (clause, applies(f), bound(chi, f)).
_ORDER_BOUNDS = (
    ("f<=6: n>=chi+2f", lambda f: f <= 6, lambda chi, f: chi + 2 * f),
    ("f in 7..8: n>=chi+2f-1", lambda f: f in (7, 8), lambda chi, f: chi + 2 * f - 1),
    ("f=9: n>=chi+16", lambda f: f == 9, lambda chi, f: chi + 16),
    ("f in 10..11: n>=chi+2f-3", lambda f: f in (10, 11), lambda chi, f: chi + 2 * f - 3),
    ("f<=13: n>=chi+2f-4", lambda f: f <= 13, lambda chi, f: chi + 2 * f - 4),
)


@dataclass
class OrderBoundReport:
    order: int
    chromatic_number: int
    deficiency: int
    checks: list[dict] = field(default_factory=list)

    @property
    def violations(self) -> list[dict]:
        return [c for c in self.checks if not c["holds"]]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "chromatic_number": self.chromatic_number,
            "deficiency": self.deficiency,
            "checks": self.checks,
            "violations": self.violations,
        }


def order_bound_report(g: Graph, r10_at_most_41: bool | None = None) -> OrderBoundReport:
    """Check ``g`` against the deficiency-conditioned lower bounds on its order.

    The strict form for ``f = 12`` depends on whether R(10,3) <= 41; it is
    checked only when ``r10_at_most_41`` is True.
    """
    chi = chromatic_number(g)
    f = chi - clique_number(g)
    rep = OrderBoundReport(g.n, chi, f)
    for clause, applies, bound in _ORDER_BOUNDS:
        if applies(f):
            b = bound(chi, f)
            rep.checks.append({"clause": clause, "bound": b, "holds": g.n >= b})
    if f == 12 and r10_at_most_41:
        b = chi + 2 * f - 3
        rep.checks.append({"clause": "f=12: n>=chi+2f-3", "bound": b, "holds": g.n >= b, "assumes": "R(10,3) <= 41"})
    return rep
