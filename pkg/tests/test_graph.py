import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from folkman.canon import are_isomorphic
from folkman.graph import (
    MAX_ORDER,
    CapacityError,
    Graph,
    Graph6Error,
    complement,
    complete,
    components,
    cycle,
    delete_vertices,
    empty,
    from_graph6,
    is_connected,
    is_independent,
    join,
    mycielskian,
    path,
    separability_decompose,
    to_graph6,
)


def test_complete_and_empty():
    assert complete(0).n == 0
    assert complete(4).num_edges() == 6
    assert all(complete(4).adjacent(u, v) for u in range(4) for v in range(4) if u != v)
    with pytest.raises(CapacityError):
        complete(MAX_ORDER + 1)


def test_cycle():
    assert cycle(3) == complete(3)
    c5 = cycle(5)
    assert c5.num_edges() == 5 and all(c5.degree(v) == 2 for v in range(5)) and is_connected(c5)
    with pytest.raises(ValueError):
        cycle(2)


def test_join_examples():
    w = join(complete(1), cycle(5))
    assert w.n == 6 and w.degree(0) == 5
    assert join(empty(0), cycle(5)) == cycle(5)
    assert join(complete(2), complete(3)) == complete(5)
    # left operand keeps indices 0..n1-1
    g = join(path(3), cycle(4))
    assert all(g.adjacent(u, v) == path(3).adjacent(u, v) for u in range(3) for v in range(3))
    assert all(g.adjacent(u, v) for u in range(3) for v in range(3, 7))


def test_complement_examples():
    assert complement(complete(4)).num_edges() == 0
    assert are_isomorphic(complement(cycle(5)), cycle(5))
    c6 = complement(cycle(6))
    assert c6.adjacent(0, 2) and c6.adjacent(2, 4) and c6.adjacent(0, 4)


def test_delete_vertices():
    assert delete_vertices(cycle(5), {0}) == path(4)
    g = cycle(7)
    assert delete_vertices(g, set()) == g
    assert delete_vertices(complete(5), {0, 1}) == complete(3)
    with pytest.raises(ValueError):
        delete_vertices(g, {7})


def test_is_independent():
    assert is_independent(cycle(5), {0, 2})
    assert not is_independent(complete(3), {0, 1})
    assert is_independent(cycle(5), set())


def test_separability_examples():
    l, r, lv, rv = separability_decompose(complete(2))
    assert (l.n, r.n) == (1, 1)
    assert separability_decompose(cycle(5)) is None
    parts = separability_decompose(join(complete(2), cycle(5)))
    assert parts is not None
    sizes = sorted(len(s) for s in parts[2:])
    assert sizes in ([1, 6], [2, 5]) or sum(sizes) == 7
    with pytest.raises(ValueError):
        separability_decompose(empty(0))


def test_graph6_examples():
    # three edge bits 111 then zero padding: 0b111000 + 63 = "w"
    assert to_graph6(complete(3)) == "Bw"
    with pytest.raises(Graph6Error):
        from_graph6("B~")  # nonzero padding bits
    assert from_graph6(to_graph6(cycle(5))) == cycle(5)
    assert to_graph6(empty(0)) == "?"
    with pytest.raises(Graph6Error):
        from_graph6("garbage\x01")
    with pytest.raises(Graph6Error) as exc:
        from_graph6("B~~")
    assert exc.value.offset >= 0


def test_graph6_long_form_round_trip():
    rng = random.Random(5)
    for n in (62, 63, 100, 258):
        g = random_graph(rng, n, 0.3)
        code = to_graph6(g)
        assert (code[0] == "~") == (n >= 63)
        assert from_graph6(code) == g
    assert from_graph6(">>graph6<<" + to_graph6(cycle(5))) == cycle(5)


def test_graph6_known_codes():
    # published examples: Petersen graph and a 5-vertex path
    petersen = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                                + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert to_graph6(petersen) == "IheA@GUAo"


def test_mycielskian_base():
    assert are_isomorphic(mycielskian(complete(2)), cycle(5))
    assert mycielskian(cycle(5)).n == 11


def test_invalid_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [1])  # loop


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(3)
    for n in (1, 2, 5, 9, 40, 70):
        g = random_graph(rng, n)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(h, header=False).decode().strip() == to_graph6(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=16))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_round_trip_to_64():
    rng = random.Random(11)
    for n in range(0, 65):
        g = random_graph(rng, n)
        assert from_graph6(to_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_join_order_additive(g, h):
    assert join(g, h).n == g.n + h.n


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_separability_soundness(g):
    res = separability_decompose(g)
    if res is None:
        assert is_connected(complement(g))
        return
    left, right, lv, rv = res
    assert lv and rv and sorted(lv + rv) == list(range(g.n))
    order = lv + rv
    j = join(left, right)
    assert all(j.adjacent(i, k) == g.adjacent(order[i], order[k]) for i in range(g.n) for k in range(g.n) if i != k)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_components_partition(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
