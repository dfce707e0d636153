import pytest

from lexsearch.endvertex import (
    decide_end_vertex_atfree_bigraph,
    decide_end_vertex_oracle,
    end_vertex_set_atfree_bigraph,
    necessary_conditions_report,
)
from lexsearch.errors import AsteroidalTripleError, DisconnectedGraphError, NotBipartiteError
from lexsearch.generators import complete_bipartite, cycle_graph, path_graph
from lexsearch.graph import build_graph
from lexsearch.lbfs import end_vertex_set_oracle, lbfs, verify_lbfs_ordering

from helpers import fixture, small_atfree_bigraphs, small_atfree_graphs


def test_path_ends():
    assert end_vertex_set_atfree_bigraph(path_graph(6)) == {0, 5}
    v = decide_end_vertex_atfree_bigraph(path_graph(6), 2)
    assert not v.decision and v.witness_w is None


def test_k22_all_end_vertices():
    assert end_vertex_set_atfree_bigraph(complete_bipartite(2, 2)) == {0, 1, 2, 3}


def test_verdict_json_shape():
    v = decide_end_vertex_atfree_bigraph(path_graph(4), 3)
    assert v.to_json() == {"vertex": 3, "end_vertex": True, "witness_w": 0, "admissible": True,
                           "ecc": 3, "diam": 3, "method": "characterization"}


def test_witness_certifies_neighbourhood_containment():
    from lexsearch.graph import bfs_layers

    for g in small_atfree_bigraphs():
        for v in g.vertices:
            verdict = decide_end_vertex_atfree_bigraph(g, v)
            if verdict.decision:
                ecc = bfs_layers(g, verdict.witness_w).eccentric_vertices
                assert all(g.neighbors(v) <= g.neighbors(u) for u in ecc)


def test_oracle_witness_is_least_start():
    g = path_graph(4)
    assert decide_end_vertex_oracle(g, 3).witness_w == 0
    # from 1 every ordering ends at 3; 2, 1, 3, 0 is the first ending at 0
    assert decide_end_vertex_oracle(g, 0).witness_w == 2
    assert decide_end_vertex_oracle(g, 1).decision is False


def test_refuses_non_bipartite():
    with pytest.raises(NotBipartiteError) as info:
        decide_end_vertex_atfree_bigraph(cycle_graph(5), 0)
    assert len(info.value.odd_cycle) % 2 == 1


def test_refuses_asteroidal_triple():
    with pytest.raises(AsteroidalTripleError) as info:
        decide_end_vertex_atfree_bigraph(cycle_graph(6), 0)
    assert info.value.witness.triple == (0, 2, 4)


def test_refuses_disconnected():
    with pytest.raises(DisconnectedGraphError):
        end_vertex_set_atfree_bigraph(build_graph(4, [(0, 1), (2, 3)]))


def test_characterization_matches_oracle_small():
    for g in small_atfree_bigraphs():
        assert end_vertex_set_atfree_bigraph(g) == end_vertex_set_oracle(g)


def test_necessary_conditions_hold_for_end_vertices():
    for g in small_atfree_graphs():
        for v in end_vertex_set_oracle(g):
            assert necessary_conditions_report(g, v).holds


def test_necessary_conditions_refuse_triple():
    with pytest.raises(AsteroidalTripleError):
        necessary_conditions_report(cycle_graph(6), 0)


def test_conditions_not_sufficient_example():
    g = fixture("nonend_left")
    v = g.vertex("v")
    nc = necessary_conditions_report(g, v)
    assert nc.admissible and (nc.eccentricity, nc.diameter) == (4, 5)
    assert not decide_end_vertex_atfree_bigraph(g, v).decision
    assert not decide_end_vertex_oracle(g, v).decision


def test_conditions_not_sufficient_second_example():
    g = fixture("nonend_right")
    v = g.vertex("v")
    assert necessary_conditions_report(g, v).holds
    assert v not in end_vertex_set_oracle(g)
    assert v not in end_vertex_set_atfree_bigraph(g)


def test_positive_example_numbering_is_lbfs():
    g = fixture("end_numbered")
    v = g.vertex("v")
    order = [g.vertex(str(i)) for i in range(1, 8)] + [v]
    assert verify_lbfs_ordering(g, order)
    assert decide_end_vertex_atfree_bigraph(g, v).decision
    nc = necessary_conditions_report(g, v)
    assert nc.admissible and (nc.eccentricity, nc.diameter) == (3, 4)


def test_lbfs_end_is_always_in_set():
    for g in small_atfree_bigraphs():
        ends = end_vertex_set_atfree_bigraph(g)
        for s in g.vertices:
            assert lbfs(g, s).end_vertex in ends
