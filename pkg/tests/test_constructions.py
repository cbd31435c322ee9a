import pytest

from folkman.constructions import (
    PreconditionError,
    dirac_witness,
    double_c5_witness,
    mycielskian,
    ramsey_join_witness,
    triple_c5_witness,
)
from folkman.graph import complete, cycle, join
from folkman.canon import are_isomorphic
from folkman.invariants import chromatic_number, clique_number, independence_number
from folkman.miner import MinerConfig, RamseyWitness, mine


def _measured(cert):
    return cert.measured["chi"], cert.measured["cl"], cert.measured["order"]


def test_dirac_examples():
    assert _measured(dirac_witness(2)) == (3, 2, 5)
    c = dirac_witness(3)
    assert are_isomorphic(c.graph, join(complete(1), cycle(5))) and _measured(c) == (4, 3, 6)
    assert _measured(dirac_witness(10)) == (11, 10, 13)
    with pytest.raises(PreconditionError):
        dirac_witness(1)


def test_double_c5_examples():
    assert _measured(double_c5_witness(5)) == (6, 4, 10)
    assert _measured(double_c5_witness(6)) == (7, 5, 11)
    with pytest.raises(PreconditionError):
        double_c5_witness(4)


def test_triple_c5_examples():
    assert _measured(triple_c5_witness(8)) == (9, 6, 15)
    assert _measured(triple_c5_witness(9)) == (10, 7, 16)
    with pytest.raises(PreconditionError):
        triple_c5_witness(7)


def test_families_follow_join_laws():
    for r in range(8, 14):
        for cert, parts in (
            (dirac_witness(r), [complete(r - 2), cycle(5)]),
            (double_c5_witness(r), [complete(r - 5), cycle(5), cycle(5)]),
            (triple_c5_witness(r), [complete(r - 8), cycle(5), cycle(5), cycle(5)]),
        ):
            assert cert.verified
            assert cert.measured["chi"] == sum(chromatic_number(p) for p in parts)
            assert cert.measured["cl"] == sum(clique_number(p) for p in parts)


def test_mycielskian_examples():
    assert are_isomorphic(mycielskian(complete(2)), cycle(5))
    g = mycielskian(cycle(5))
    assert (g.n, chromatic_number(g), clique_number(g)) == (11, 4, 2)
    h = mycielskian(g)
    assert h.n == 23 and clique_number(h) == 2


def test_ramsey_join_small():
    # m=7, k=2: P is a (5,3)-graph on 13 vertices
    w = mine(MinerConfig(n=13, p=5, seed=0))
    cert = ramsey_join_witness(7, 2, 6, w)
    assert cert.verified and not cert.conditional
    assert cert.graph.n == 13 and cert.measured["cl"] <= 4
    p = w.graph
    assert independence_number(p) <= 2 and chromatic_number(p) >= 7


def test_ramsey_join_preconditions():
    w = RamseyWitness(cycle(5), 3)
    with pytest.raises(PreconditionError):
        ramsey_join_witness(5, 1, 5, w)  # 2m-1 = 9 is not below R(4,3) = 9
    with pytest.raises(PreconditionError):
        ramsey_join_witness(3, 1, 5, w)  # m < k+3
    with pytest.raises(PreconditionError):
        ramsey_join_witness(3, 0, 1, w)  # r < m-1
    with pytest.raises(PreconditionError):
        ramsey_join_witness(3, 0, 3, RamseyWitness(complete(5), 3))


def test_conditional_certificate_flag():
    # P is a (10,3)-graph on 41 vertices; only the 41-vertex claim needs R(10,3) > 41
    w = mine(MinerConfig(n=5, p=3))
    cert = ramsey_join_witness(3, 0, 4, w)
    assert not cert.conditional
    d = cert.to_dict()
    assert d["graph6"] and d["verified"] and d["context"]["m"] == 3
