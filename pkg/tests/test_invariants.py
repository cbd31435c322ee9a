import random

import pytest
from hypothesis import given, settings

from conftest import bf_chromatic_number, bf_clique_number, graphs, random_graph
from folkman.graph import Graph, complement, complete, cycle, empty, join, mycielskian, separability_decompose
from folkman.invariants import (
    VertexColoring,
    chromatic_number,
    clique_number,
    coloring_with_at_most,
    deficiency,
    independence_number,
    invariant_report,
    is_pq_graph,
    is_vertex_critical,
    m_membership,
    max_clique,
    optimal_coloring,
    order_bound_report,
)
from folkman.miner import MinerConfig, mine


def test_clique_examples():
    assert clique_number(complete(7)) == 7
    assert clique_number(cycle(5)) == 2
    assert clique_number(join(complete(3), cycle(5))) == 5
    assert clique_number(empty(0)) == 0


def test_independence_examples():
    assert independence_number(complete(5)) == 1
    assert independence_number(cycle(5)) == 2


def test_independence_is_complement_clique():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 14))
        assert independence_number(g) == clique_number(complement(g))


def test_chromatic_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(empty(0)) == 0
    grotzsch = mycielskian(cycle(5))
    assert grotzsch.n == 11 and chromatic_number(grotzsch) == 4 and clique_number(grotzsch) == 2


def test_grotzsch_has_no_3_colouring_by_brute_force():
    import itertools

    g = mycielskian(cycle(5))
    edges = list(g.edges())
    assert not any(all(c[u] != c[v] for u, v in edges) for c in itertools.product(range(3), repeat=11))


def test_deficiency_examples():
    assert deficiency(complete(6)) == 0
    assert deficiency(cycle(5)) == 1
    assert deficiency(join(cycle(5), cycle(5))) == 2


def test_vertex_critical_examples():
    assert is_vertex_critical(complete(4))
    assert is_vertex_critical(cycle(5))
    assert not is_vertex_critical(cycle(6))
    with pytest.raises(ValueError):
        is_vertex_critical(empty(0))


def test_pq_graph_examples():
    assert is_pq_graph(cycle(5), 3, 3)
    assert not is_pq_graph(complete(3), 3, 3)
    w = mine(MinerConfig(n=8, p=4, q=3, seed=0))
    assert w is not None and is_pq_graph(w.graph, 4, 3)


def test_m_membership_examples():
    assert not m_membership(cycle(5), 0, 6)
    assert m_membership(cycle(5), -1, 1)
    assert not m_membership(complete(5), 0, 0)


def test_order_bound_examples():
    rep = order_bound_report(cycle(5))
    assert rep.deficiency == 1 and not rep.violations
    assert any(c["holds"] and c["bound"] == 5 for c in rep.checks)
    triple = join(cycle(5), cycle(5), cycle(5))
    rep = order_bound_report(triple)
    assert rep.deficiency == 3 and rep.order == 15
    assert any(c["bound"] == 15 for c in rep.checks) and not rep.violations


def test_order_bounds_mass_screen():
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 13))
        assert not order_bound_report(g).violations


def test_colouring_api():
    c = coloring_with_at_most(cycle(5), 2)
    assert c is None
    c = coloring_with_at_most(cycle(5), 3)
    assert c is not None and c.is_proper(cycle(5))
    col = VertexColoring.from_classes(3, [[0, 2], [1]])
    assert col.assignment == (1, 2, 1) and col.classes() == [[0, 2], [1]]


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_brute_force_oracles(g):
    assert clique_number(g) == bf_clique_number(g)
    assert chromatic_number(g) == bf_chromatic_number(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_report_cross_consistency(g):
    rep = invariant_report(g)
    assert rep.verify(g)
    assert rep.chromatic_number >= rep.clique_number
    assert rep.independence_number * rep.chromatic_number >= g.n
    assert sorted(max_clique(g)) == sorted(rep.max_clique)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_join_laws(g, h):
    j = join(g, h)
    assert chromatic_number(j) == chromatic_number(g) + chromatic_number(h)
    assert clique_number(j) == clique_number(g) + clique_number(h)
    assert deficiency(j) == deficiency(g) + deficiency(h)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_gallai_on_random_critical(g):
    chi = chromatic_number(g)
    if chi >= 2 and is_vertex_critical(g) and g.n < 2 * chi - 1:
        assert separability_decompose(g) is not None


def test_larger_sparse_graphs_colour_quickly():
    rng = random.Random(2)
    for _ in range(5):
        g = random_graph(rng, 40, 0.15)
        col = optimal_coloring(g)
        assert col.is_proper(g) and col.r == chromatic_number(g)
