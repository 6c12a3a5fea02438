import itertools

import numpy as np
import pytest

from fanbundle.core import Graph, connectivity_level
from fanbundle.drawing import validate
from fanbundle.recognizers import (outer3_characterization_graph, recognize_outer_triconnected,
                                   recognize_twolayer_biconnected, recognize_twolayer_maximal,
                                   snake_chains)
from conftest import complete_bipartite, complete_graph, snake_graph


def assert_witness(res, g, sides, variant):
    d = res.witness
    rep = validate(d, sides, variant)
    assert rep.valid, rep.violations[:3]
    assert d.graph.same_as(g)
    return d


# triconnected outer drawings

def test_k4_accepted_with_witness(k4):
    res = recognize_outer_triconnected(k4)
    assert res.accepted
    assert_witness(res, k4, 1, "outer")


def test_k5_rejected_by_edge_count(k5):
    res = recognize_outer_triconnected(k5)
    assert not res.accepted
    assert res.reason == "edge count exceeds characterization"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tiny_graphs_rejected(n):
    res = recognize_outer_triconnected(complete_graph(n))
    assert res.reason == "n too small"


def test_four_vertices_need_k4():
    g = Graph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    assert recognize_outer_triconnected(g).reason == "n = 4 requires K4"


def test_nine_vertices_both_optional_edges():
    g = outer3_characterization_graph(9, 5, with_vk=True, with_v1vn=True)
    assert g.m == 17
    degs = sorted((g.degree(v) for v in g.vertices), reverse=True)
    assert sum(d > 4 for d in degs) == 2
    res = recognize_outer_triconnected(g)
    assert res.accepted
    d = assert_witness(res, g, 1, "outer")
    assert len(d.crossings) == 1


@pytest.mark.parametrize("n", [5, 6, 7, 9, 12, 20, 33])
def test_characterization_graphs_accepted_when_triconnected(n):
    hits = 0
    for k in range(2, n + 1):
        for vk, ends in itertools.product((False, True), repeat=2):
            g = outer3_characterization_graph(n, k, vk, ends, seed=n * 100 + k)
            res = recognize_outer_triconnected(g)
            assert res.accepted == (connectivity_level(g) == 3), (n, k, vk, ends, res.reason)
            if res.accepted:
                hits += 1
                lab = res.certificate
                assert len(lab.order) == n and 2 <= lab.k <= n
    assert hits


@pytest.mark.parametrize("n", [10, 25])
def test_witnesses_validate(n):
    for k in (2, 4, n - 1, n):
        for vk in (False, True):
            g = outer3_characterization_graph(n, k, with_vk=vk, seed=k)
            res = recognize_outer_triconnected(g)
            if res.accepted:
                assert_witness(res, g, 1, "outer")


def test_extra_edge_breaks_acceptance():
    g = outer3_characterization_graph(12, 6)
    present = g.edge_set
    extra = next(e for e in itertools.combinations(g.vertices, 2) if e not in present)
    h = Graph(g.vertices, list(g.edges) + [extra])
    assert not recognize_outer_triconnected(h).accepted


def test_degree_filters_name_the_problem():
    wheel_hubs = Graph(range(10), [(i, (i + 1) % 6) for i in range(6)]
                       + [(h, i) for h in (6, 7, 8, 9) for i in range(6)])
    res = recognize_outer_triconnected(wheel_hubs)
    assert not res.accepted and res.reason


def test_large_instance_is_linear_enough():
    g = outer3_characterization_graph(200_000, 77_000)
    assert recognize_outer_triconnected(g).accepted


# two-layer biconnected

def test_k23_accepted_k24_rejected():
    res = recognize_twolayer_biconnected(complete_bipartite(2, 3))
    assert res.accepted
    assert_witness(res, complete_bipartite(2, 3), 1, "twolayer")
    res = recognize_twolayer_biconnected(complete_bipartite(2, 4))
    assert not res.accepted
    assert res.reason == "not a spanning subgraph of a baby snake"


def test_preconditions():
    g = complete_bipartite(2, 3)
    assert recognize_twolayer_biconnected(Graph(g.vertices, g.edges)).reason == \
        "precondition: layers missing"
    path = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")], {"a": 0, "b": 1, "c": 0})
    assert recognize_twolayer_biconnected(path).reason == "precondition: graph is not biconnected"


def test_eight_cycle_is_a_snake():
    vs = list(range(8))
    g = Graph(vs, [(i, (i + 1) % 8) for i in vs], {v: v % 2 for v in vs})
    res = recognize_twolayer_biconnected(g)
    assert res.accepted
    assert_witness(res, g, 1, "twolayer")


def test_chain_k23_k22_k23():
    g = snake_graph([([(1, 2), (1, 1), (1, 2)], 0)])
    assert g.n == 10
    res = recognize_twolayer_biconnected(g)
    assert res.accepted
    assert [b.kind for b in res.certificate.blocks] in (["K23", "K22", "K23"],)
    assert_witness(res, g, 1, "twolayer")


def test_snake_chains_finds_every_decomposition_once():
    g = snake_graph([([(1, 1), (1, 1)], 0)])
    chains = snake_chains(g, exact=True, limit=64)
    keys = {tuple(b.kind for b in c.blocks) for c in chains}
    assert keys == {("K22", "K22")}


# two-layer maximal (stegosaurus with legs)

@pytest.mark.parametrize("snakes, legs, tag", [
    ([([(1, 2)], 0), ([(1, 2)], 0)], [], None),
    ([([(1, 2)], 0), ([(1, 2)], 0)], [("L", "s0t1")], "cutvertex"),
    ([([(1, 2), (1, 2)], 0)], [("L", "s0t1")], "shared-pole"),
    ([([(1, 2), (1, 2)], 0)], [("M", "s0b4")], "end-pole"),
])
def test_maximal_accepts(snakes, legs, tag):
    g = snake_graph(snakes, legs)
    res = recognize_twolayer_maximal(g)
    assert res.accepted, res.reason
    assert_witness(res, g, 1, "twolayer")
    if tag:
        assert {t for _, _, t in res.certificate.legs} == {tag}


@pytest.mark.parametrize("snakes, legs, reason", [
    ([([(1, 2), (1, 1)], 0), ([(1, 2)], 0)], [("L", "s0t2")], "leg at s0t2 is not a big leg"),
    ([([(1, 2), (1, 1), (1, 2)], 0)], [("L", "s0t1")], "leg at s0t1 is not a big leg"),
    ([([(1, 3)], 0)], [], "snake 1 is not a baby snake"),
])
def test_maximal_rejects(snakes, legs, reason):
    res = recognize_twolayer_maximal(snake_graph(snakes, legs))
    assert not res.accepted
    assert res.reason == reason


def test_maximal_rejects_bridges_and_isolated_edges():
    g = Graph(["a", "b"], [("a", "b")], {"a": 0, "b": 1})
    res = recognize_twolayer_maximal(g)
    assert not res.accepted and res.reason
