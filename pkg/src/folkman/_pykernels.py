"""Pure-Python search kernels over bitset rows.

These are the fallback for :mod:`folkman._ckernels` and share its call
signatures exactly. Rows are Python ints; there is no order limit here.
"""

from __future__ import annotations

BACKEND = "python"


def _greedy_color_order(rows, cand):
    # Sequential greedy colouring of ``cand``; returns vertices and the colour
    # bound for each, in order of non-decreasing colour.
    order = []
    bounds = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~rows[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(rows, cand):
    """Vertices of a maximum clique inside the vertex mask ``cand``."""
    best = []
    stack = []

    def expand(cand):
        nonlocal best
        order, bounds = _greedy_color_order(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[i] <= len(best):
                return
            v = order[i]
            stack.append(v)
            sub = cand & rows[v]
            if sub:
                expand(sub)
            elif len(stack) > len(best):
                best = sorted(stack)
            stack.pop()
            cand &= ~(1 << v)

    if cand:
        expand(cand)
    return best


def count_cliques(rows, cand, k, cap=0):
    """Number of ``k``-cliques inside ``cand``; stops early once ``cap`` is reached (0 = no cap)."""
    if k <= 0:
        return 1
    if k == 1:
        n = cand.bit_count()
        return min(n, cap) if cap else n
    total = 0
    while cand:
        if cand.bit_count() < k:
            break
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = cand & rows[v]
        if sub.bit_count() >= k - 1:
            total += count_cliques(rows, sub, k - 1, cap - total if cap else 0)
            if cap and total >= cap:
                return cap
    return total


def flip_deltas(rows, crows, n, p, q, cap=0):
    """Change in (#p-cliques, #independent q-sets) from toggling each pair.

    Returns a flat list ``[dc, di, ...]`` over pairs ``(u, v)``, ``u < v``,
    in lexicographic order.
    """
    out = []
    for u in range(n):
        ru = rows[u]
        cu = crows[u]
        for v in range(u + 1, n):
            common = ru & rows[v]
            noncommon = cu & crows[v]
            if (ru >> v) & 1:
                out.append(-count_cliques(rows, common, p - 2, cap))
                out.append(count_cliques(crows, noncommon, q - 2, cap))
            else:
                out.append(count_cliques(rows, common, p - 2, cap))
                out.append(-count_cliques(crows, noncommon, q - 2, cap))
    return out


def color_search(rows, n, clique, best, best_colors, stop_at, node_limit=0):
    """Exact DSATUR branch and bound.

    ``clique`` is precoloured ``0..len(clique)-1``. ``best``/``best_colors`` is
    an incumbent colouring (``best_colors`` may be ``None`` when ``best`` is only
    a strict upper target). The search stops as soon as a colouring with
    ``stop_at`` colours is found. Returns ``(best, colors, nodes, complete)``.
    """
    colors = [-1] * n
    classes = []
    for c, v in enumerate(clique):
        colors[v] = c
        classes.append(1 << v)
    uncolored = ((1 << n) - 1)
    for v in clique:
        uncolored &= ~(1 << v)
    state = {"best": best, "colors": best_colors, "nodes": 0, "aborted": False}

    def recurse(uncolored):
        state["nodes"] += 1
        if node_limit and state["nodes"] > node_limit:
            state["aborted"] = True
            return True
        used = len(classes)
        if not uncolored:
            if used < state["best"]:
                state["best"] = used
                state["colors"] = list(colors)
            return used <= stop_at
        # pick the most saturated vertex, then most uncoloured neighbours, then lowest index
        pick = -1
        pick_sat = -1
        pick_deg = -1
        pick_forbidden = 0
        u = uncolored
        while u:
            low = u & -u
            v = low.bit_length() - 1
            u ^= low
            row = rows[v]
            forbidden = 0
            sat = 0
            for c in range(used):
                if classes[c] & row:
                    forbidden |= 1 << c
                    sat += 1
            if sat > pick_sat:
                pick, pick_sat, pick_forbidden = v, sat, forbidden
                pick_deg = (row & uncolored).bit_count()
            elif sat == pick_sat:
                deg = (row & uncolored).bit_count()
                if deg > pick_deg:
                    pick, pick_deg, pick_forbidden = v, deg, forbidden
        rest = uncolored & ~(1 << pick)
        for c in range(used):
            if (pick_forbidden >> c) & 1:
                continue
            classes[c] |= 1 << pick
            colors[pick] = c
            done = recurse(rest)
            classes[c] &= ~(1 << pick)
            colors[pick] = -1
            if done:
                return True
        if used + 1 < state["best"]:
            classes.append(1 << pick)
            colors[pick] = used
            done = recurse(rest)
            classes.pop()
            colors[pick] = -1
            if done:
                return True
        return False

    if len(clique) < state["best"]:
        recurse(uncolored)
    return state["best"], state["colors"], state["nodes"], not state["aborted"]
