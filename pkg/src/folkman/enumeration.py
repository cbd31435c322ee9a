"""Isomorph-free generation of small K_q-free graphs and Folkman-value certificates."""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from folkman import kernels
from folkman.arrowing import arrows_with_pattern, check_existence
from folkman.canon import canonical_labeling
from folkman.graph import CapacityError, Graph, from_graph6, is_connected, to_graph6
from folkman.invariants import chromatic_number, clique_number, is_vertex_critical

log = logging.getLogger(__name__)

DEFAULT_ORDER_WALL = 11


@dataclass(frozen=True)
class EnumerationConstraint:
    max_order: int
    forbid_clique: int | None = None
    min_chromatic: int | None = None
    connected: bool = False
    min_order: int = 1
    order_wall: int = DEFAULT_ORDER_WALL

    def __post_init__(self):
        if self.max_order > self.order_wall:
            raise CapacityError(
                f"enumeration to order {self.max_order} exceeds the wall {self.order_wall}; raise order_wall to override"
            )
        if self.forbid_clique is not None and self.forbid_clique < 2:
            raise ValueError("forbid_clique must be at least 2")

    def accepts(self, g: Graph) -> bool:
        # non-hereditary filters, applied at output only
        if self.connected and not is_connected(g):
            return False
        if self.min_chromatic is not None and chromatic_number(g) < self.min_chromatic:
            return False
        return True


def _extension_sets(parent: Graph, forbid: int | None) -> Iterator[int]:
    """Neighbourhoods for a new vertex that keep the graph K_forbid-free."""
    n = parent.n
    rows = parent.rows
    if forbid is None:
        yield from range(1 << n)
        return
    k = forbid - 1
    if k == 1:
        # only the empty neighbourhood avoids an edge
        yield 0
        return

    def grow(v, chosen):
        if v == n:
            yield chosen
            return
        yield from grow(v + 1, chosen)
        if k == 2:
            ok = not (rows[v] & chosen)
        else:
            ok = kernels.count_cliques(rows, rows[v] & chosen, k - 1, 1) == 0
        if ok:
            yield from grow(v + 1, chosen | (1 << v))

    yield from grow(0, 0)


def _children(parent: Graph, forbid: int | None) -> list[Graph]:
    """Canonical children of a canonical parent.

    The new vertex ``n`` is kept only if it has maximum degree and deleting
    the canonically last maximum-degree vertex gives back the parent's class.
    """
    n = parent.n
    parent_cert = parent.rows
    seen = set()
    out = []
    for nbrs in _extension_sets(parent, forbid):
        rows = list(parent.rows)
        for v in range(n):
            if (nbrs >> v) & 1:
                rows[v] |= 1 << n
        rows.append(nbrs)
        deg_new = nbrs.bit_count()
        if any(r.bit_count() > deg_new for r in rows):
            continue
        child = Graph._trusted(n + 1, tuple(rows))
        cert, pos = canonical_labeling(child)
        if cert in seen:
            continue
        # canonical deletion vertex: largest label among maximum-degree vertices
        w = max(range(n + 1), key=lambda v: (rows[v].bit_count(), pos[v]))
        if w != n:
            keep = [v for v in range(n + 1) if v != w]
            reduced = []
            for v in keep:
                r = rows[v]
                reduced.append(sum(1 << i for i, u in enumerate(keep) if (r >> u) & 1))
            if canonical_labeling(Graph._trusted(n, tuple(reduced)))[0] != parent_cert:
                continue
        seen.add(cert)
        out.append(Graph._trusted(n + 1, cert))
    return out


def _children_task(args):
    code, forbid = args
    return [to_graph6(c) for c in _children(from_graph6(code), forbid)]


def _seed_level(forbid):
    return [Graph._trusted(1, (0,))]


def generate_levels(
    max_order: int,
    forbid_clique: int | None = None,
    workers: int = 1,
    checkpoint_dir: str | Path | None = None,
    checkpoint_every: int = 1_000_000,
) -> Iterator[tuple[int, list[Graph]]]:
    """Yield ``(order, graphs)`` for orders ``1..max_order``, one canonical graph per class.

    The output of a level is the concatenation of the children of the
    previous level's graphs in order, so it does not depend on ``workers``.
    With ``checkpoint_dir`` completed levels are stored as ``level_{n}.g6``
    and partial levels are flushed every ``checkpoint_every`` graphs, so an
    interrupted run resumes where it stopped.
    """
    ckpt = Path(checkpoint_dir) if checkpoint_dir else None
    if ckpt:
        ckpt.mkdir(parents=True, exist_ok=True)
        meta = ckpt / "constraint.json"
        tag = {"forbid_clique": forbid_clique}
        if meta.exists() and json.loads(meta.read_text()) != tag:
            raise ValueError(f"checkpoint directory {ckpt} was written for {meta.read_text()}")
        meta.write_text(json.dumps(tag))
    level = _seed_level(forbid_clique)
    if max_order < 1:
        return
    yield 1, level
    for order in range(2, max_order + 1):
        done_path = ckpt / f"level_{order}.g6" if ckpt else None
        if done_path and done_path.exists():
            level = [from_graph6(s) for s in done_path.read_text().split()]
            yield order, level
            continue
        nxt: list[Graph] = []
        start = 0
        part_path = ckpt / f"level_{order}.partial.g6" if ckpt else None
        prog_path = ckpt / f"level_{order}.progress.json" if ckpt else None
        if part_path and part_path.exists() and prog_path.exists():
            start = json.loads(prog_path.read_text())["parents_done"]
            nxt = [from_graph6(s) for s in part_path.read_text().split()]
        since_flush = 0

        def flush(parents_done):
            if ckpt:
                part_path.write_text("".join(to_graph6(g) + "\n" for g in nxt))
                prog_path.write_text(json.dumps({"parents_done": parents_done}))

        parents = level[start:]
        if workers > 1 and len(parents) > 64:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                tasks = ((to_graph6(p), forbid_clique) for p in parents)
                for i, codes in enumerate(pool.map(_children_task, tasks, chunksize=16)):
                    nxt.extend(from_graph6(c) for c in codes)
                    since_flush += len(codes)
                    if since_flush >= checkpoint_every:
                        flush(start + i + 1)
                        since_flush = 0
        else:
            for i, p in enumerate(parents):
                kids = _children(p, forbid_clique)
                nxt.extend(kids)
                since_flush += len(kids)
                if since_flush >= checkpoint_every:
                    flush(start + i + 1)
                    since_flush = 0
        if ckpt:
            done_path.write_text("".join(to_graph6(g) + "\n" for g in nxt))
            for pth in (part_path, prog_path):
                if pth.exists():
                    pth.unlink()
        level = nxt
        log.info("order %d: %d classes", order, len(level))
        yield order, level


def enumerate_graphs(c: EnumerationConstraint, workers: int = 1, checkpoint_dir=None) -> Iterator[Graph]:
    """Stream one representative per isomorphism class satisfying ``c``."""
    for order, level in generate_levels(c.max_order, c.forbid_clique, workers, checkpoint_dir):
        if order < c.min_order:
            continue
        for g in level:
            if c.accepts(g):
                yield g


def class_counts(max_order: int, forbid_clique: int | None = None, workers: int = 1) -> dict[int, int]:
    return {n: len(level) for n, level in generate_levels(max_order, forbid_clique, workers)}


# --- Folkman values -------------------------------------------------------


@dataclass
class MinimalityCertificate:
    pattern: tuple[int, ...]
    q: int
    value: int | None
    witness: Graph | None
    exhausted_orders: list[int] = field(default_factory=list)
    class_counts: dict[int, int] = field(default_factory=dict)
    minimal_witnesses: list[Graph] = field(default_factory=list)

    @property
    def lower_bound_only(self) -> bool:
        return self.value is None

    @property
    def lower_bound(self) -> int:
        """Certified strict lower bound: F_v > this."""
        return max(self.exhausted_orders, default=0)

    def to_dict(self) -> dict:
        return {
            "pattern": list(self.pattern),
            "q": self.q,
            "value": self.value,
            "lower_bound_only": self.lower_bound_only,
            "greater_than": self.lower_bound,
            "witness": to_graph6(self.witness) if self.witness is not None else None,
            "minimal_witnesses": [to_graph6(g) for g in self.minimal_witnesses],
            "exhausted_orders": self.exhausted_orders,
            "class_counts": {str(k): v for k, v in self.class_counts.items()},
        }


def certify_folkman_value(
    a: Sequence[int],
    q: int,
    n_cap: int,
    workers: int = 1,
    checkpoint_dir=None,
    order_wall: int = DEFAULT_ORDER_WALL,
    on_level=None,
) -> MinimalityCertificate:
    """Least order of a K_q-free graph arrowing ``a``, by exhaustion up to ``n_cap``.

    Every K_q-free class of each order is tested in turn. If none arrows up
    to ``n_cap`` the certificate only states ``F_v > n_cap``.
    """
    pattern = check_existence(a, q)
    if n_cap > order_wall:
        raise CapacityError(f"n_cap {n_cap} exceeds the enumeration wall {order_wall}")
    cert = MinimalityCertificate(pattern, q, None, None)
    for order, level in generate_levels(n_cap, q, workers, checkpoint_dir):
        cert.class_counts[order] = len(level)
        if on_level is not None:
            on_level(order, level)
        members = [g for g in level if arrows_with_pattern(g, pattern)]
        if members:
            cert.value = order
            cert.witness = members[0]
            cert.minimal_witnesses = members
            return cert
        cert.exhausted_orders.append(order)
    return cert


@dataclass
class MinimalGraphReport:
    checks: list[dict]

    @property
    def violations(self) -> list[dict]:
        return [c for c in self.checks if not c["holds"]]

    def to_dict(self) -> dict:
        return {"checks": self.checks, "violations": self.violations}


def minimal_graph_properties(cert: MinimalityCertificate) -> MinimalGraphReport:
    """Check criticality and clique number of every minimal witness of an all-2 pattern.

    Each minimal graph for ``(2,...,2)`` with ``r`` entries and bound ``q``
    must be vertex-critical with chromatic number ``r + 1``, and when
    ``q < r + 3`` its clique number must be ``q - 1``.
    """
    if cert.value is None:
        raise ValueError("certificate has no witness")
    pattern = cert.pattern
    if not pattern or any(x != 2 for x in pattern):
        raise ValueError("minimal-graph properties are stated for all-2 patterns")
    r = len(pattern)
    checks = []
    for g in cert.minimal_witnesses or [cert.witness]:
        code = to_graph6(g)
        chi = chromatic_number(g)
        checks.append({"graph6": code, "property": "chromatic number r+1", "holds": chi == r + 1})
        checks.append({"graph6": code, "property": "vertex-critical", "holds": is_vertex_critical(g)})
        if cert.q < r + 3:
            checks.append({"graph6": code, "property": "clique number q-1", "holds": clique_number(g) == cert.q - 1})
    return MinimalGraphReport(checks)


def default_workers() -> int:
    env = os.environ.get("FOLKMAN_THREADS")
    if env:
        return max(1, int(env))
    try:
        return len(os.sched_getaffinity(0)) or 1
    except AttributeError:
        return os.cpu_count() or 1
