"""Immutable simple graphs on vertices ``0..n-1`` stored as bitset rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent, so adjacency tests and neighbourhood intersections are single
integer operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ORDER = 512


class CapacityError(ValueError):
    """A graph or search would exceed a configured size limit."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")


class Graph:
    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        _check_order(n)
        if rows is None:
            rows = (0,) * n
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full or (row >> v) & 1:
                raise ValueError(f"row {v} has bits outside the vertex range or a loop")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                r ^= low
        self._n = n
        self._rows = rows

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # internal constructor for rows already known to be valid
        _check_order(n)
        g = object.__new__(cls)
        g._n = n
        g._rows = rows
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @property
    def n(self) -> int:
        return self._n

    order = n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self._n):
            for v in bits(self._rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges()})"

    def to_graph6(self) -> str:
        return to_graph6(self)


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_vertex_set(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
        m |= 1 << v
    return m


# --- builders -------------------------------------------------------------


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices (``empty(0)`` has no vertices at all)."""
    _check_order(n)
    return Graph._trusted(n, (0,) * n)


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def circulant(n: int, distances: Iterable[int]) -> Graph:
    dist = {d % n for d in distances} - {0}
    return Graph.from_edges(n, ((i, (i + d) % n) for i in range(n) for d in dist))


def join(*graphs: Graph) -> Graph:
    """Join of the operands: disjoint union plus every cross edge.

    Operands keep their internal numbering and are laid out left to right,
    so the first graph occupies ``0..n1-1``, the second ``n1..n1+n2-1`` and
    so on.
    """
    total = sum(g.n for g in graphs)
    _check_order(total)
    full = (1 << total) - 1
    rows: list[int] = []
    offset = 0
    for g in graphs:
        block = ((1 << g.n) - 1) << offset
        outside = full & ~block
        rows.extend((r << offset) | outside for r in g.rows)
        offset += g.n
    return Graph._trusted(total, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    _check_order(total)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph._trusted(total, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
    _check_vertex_set(g, vertices)
    rows = []
    for v in vertices:
        row = g.rows[v]
        rows.append(mask_of(i for i, u in enumerate(vertices) if (row >> u) & 1))
    return Graph._trusted(len(vertices), tuple(rows))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Remove ``s``; survivors keep their relative order."""
    drop = _check_vertex_set(g, s)
    keep = [v for v in range(g.n) if not (drop >> v) & 1]
    return induced_subgraph(g, keep)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        pv = perm[v]
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << perm[u]
        rows[pv] = r
    return Graph._trusted(g.n, tuple(rows))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = _check_vertex_set(g, s)
    return all(not (g.rows[v] & m) for v in bits(m))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = _check_vertex_set(g, s)
    return all((g.rows[v] | (1 << v)) & m == m for v in bits(m))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def separability_decompose(g: Graph) -> tuple[Graph, Graph, list[int], list[int]] | None:
    """Split ``g`` as a join of two nonempty induced subgraphs, if possible.

    ``g`` is a join exactly when its complement is disconnected. The first
    complement component forms the left part, the rest the right part.
    Returns ``(left, right, left_vertices, right_vertices)`` or ``None``;
    ``join(left, right)`` equals ``relabel(g, ...)`` under the order
    ``left_vertices + right_vertices``.
    """
    if g.n < 1:
        raise ValueError("separability is defined for graphs with at least one vertex")
    comps = components(complement(g))
    if len(comps) < 2:
        return None
    left = comps[0]
    right = sorted(v for c in comps[1:] for v in c)
    return induced_subgraph(g, left), induced_subgraph(g, right), left, right


def join_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the maximal join factorisation (complement components)."""
    return components(complement(g))


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: vertices ``0..n-1`` original, ``n..2n-1`` shadows, ``2n`` apex."""
    n = g.n
    if n < 1:
        raise ValueError("the Mycielskian needs a nonempty graph")
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + v, 2 * n) for v in range(n))
    return Graph.from_edges(2 * n + 1, edges)


# --- graph6 ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """McKay graph6 encoding (no ``>>graph6<<`` header)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    base = len(text) - len(text.lstrip()) + (10 if text.strip().startswith(">>graph6<<") else 0)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise Graph6Error("truncated long-form header", base + len(vals))
            n = 0
            for x in vals[2:8]:
                n = (n << 6) | x
            pos = 8
        else:
            if len(vals) < 4:
                raise Graph6Error("truncated header", base + len(vals))
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            pos = 4
    else:
        n = vals[0]
        pos = 1
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds capacity {MAX_ORDER}", base)
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for order {n}, got {len(body)}", base + pos)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if k % 6 and body[-1] & ((1 << (6 - k % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph._trusted(n, tuple(rows))
