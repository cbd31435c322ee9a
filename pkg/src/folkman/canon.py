"""Canonical labelling of small graphs.

Equitable-partition refinement with individualisation, keeping the leaf
whose relabelled adjacency is lexicographically largest. Automorphisms are
harvested from leaves with identical certificates and used to skip sibling
branches that lie in one orbit of the pointwise stabiliser of the current
individualisation path.
"""

from __future__ import annotations

from folkman.graph import Graph, bits


def _refine(rows, cells):
    """Refine an ordered partition (list of lists) to the coarsest equitable one."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            splitter = 0
            for v in cells[i]:
                splitter |= 1 << v
            out = []
            split_any = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & splitter).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split_any = True
                    for k in sorted(groups):
                        out.append(groups[k])
            if split_any:
                cells = out
                changed = True
                i = 0
            else:
                i += 1
    return cells


def _certificate(rows, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        r = 0
        for u in bits(rows[v]):
            r |= 1 << pos[u]
        cert.append(r)
    return tuple(cert), pos


def _orbit_reps(candidates, gens, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(certificate, position)``.

    ``position[v]`` is the canonical label of ``v``; ``certificate`` is the
    row tuple of the relabelled graph, equal for isomorphic inputs.
    """
    n = g.n
    rows = g.rows
    if n == 0:
        return (), []
    # initial partition by degree keeps refinement cheap
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(rows[v].bit_count(), []).append(v)
    start = _refine(rows, [by_deg[d] for d in sorted(by_deg)])
    best: list = [None, None]
    seen: dict = {}
    autos: list[list[int]] = []

    def search(cells, path):
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1:
                target = idx
                break
        if target is None:
            order = [c[0] for c in cells]
            cert, pos = _certificate(rows, order)
            prev = seen.get(cert)
            if prev is not None:
                # pos^-1 then prev: maps this leaf onto an earlier one
                inv = [0] * n
                for v in range(n):
                    inv[pos[v]] = v
                autos.append([inv[prev[v]] for v in range(n)])
                return
            seen[cert] = pos
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, pos
            return
        tried: list[int] = []
        for v in list(cells[target]):
            if tried:
                stab = [a for a in autos if all(a[p] == p for p in path)]
                if stab:
                    find = _orbit_reps(tried, stab, n)
                    if any(find(v) == find(t) for t in tried):
                        continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            nxt = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(rows, nxt), path + [v])

    search(start, [])
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that is complete: equal iff isomorphic."""
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    cert, _ = canonical_labeling(g)
    return Graph._trusted(g.n, cert)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    return canonical_form(g) == canonical_form(h)
