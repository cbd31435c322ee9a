"""Exact tools for vertex and edge Folkman numbers on small graphs."""

__version__ = "0.1.0"

from folkman.kernels import BACKEND  # noqa: E402
from folkman.graph import (  # noqa: E402
    CapacityError,
    Graph,
    Graph6Error,
    complement,
    complete,
    cycle,
    from_graph6,
    join,
    mycielskian,
    separability_decompose,
    to_graph6,
)
from folkman.invariants import (  # noqa: E402
    chromatic_number,
    clique_number,
    independence_number,
    invariant_report,
)
from folkman.arrowing import NonexistenceError, edge_arrows, vertex_arrows  # noqa: E402

__all__ = [
    "BACKEND",
    "CapacityError",
    "Graph",
    "Graph6Error",
    "NonexistenceError",
    "chromatic_number",
    "clique_number",
    "complement",
    "complete",
    "cycle",
    "edge_arrows",
    "from_graph6",
    "independence_number",
    "invariant_report",
    "join",
    "mycielskian",
    "separability_decompose",
    "to_graph6",
    "vertex_arrows",
]
