import pytest

from fanbundle.core import (Graph, GraphError, ParseError, RotationSystem, connectivity_level,
                            edge_key, load_graph, load_rotation, parse_edge_str, save_graph,
                            save_rotation)
from conftest import complete_graph


def test_round_trip_keeps_layers_and_edges():
    g = Graph(["a", "b", 3], [("a", "b"), ("b", 3)], {"a": 0, "b": 1, 3: 0})
    h = load_graph(save_graph(g))
    assert h == g
    assert h.layer("b") == 1


def test_comments_and_blank_lines_are_ignored():
    text = "# hello\n\np 3 2  # header\ne 1 2\ne 2 3\n"
    g = load_graph(text)
    assert (g.n, g.m) == (3, 2)


def test_header_pads_unnamed_vertices():
    g = load_graph("p 4 1\ne 1 2\n")
    assert set(g.vertices) == {1, 2, 3, 4}


@pytest.mark.parametrize("text, needle", [
    ("e 1 2\n", "edge before header"),
    ("p 2 1\ne 1 1\n", "self-loop"),
    ("p 2 2\ne 1 2\ne 2 1\n", "duplicate edge"),
    ("p 2 2\ne 1 2\n", "declares 2 edges"),
    ("p 2 1\nl 1 0\nl 2 0\ne 1 2\n", "layer 0"),
    ("p 2 1\nq 1 2\n", "unknown line type"),
    ("p 1 0\np 1 0\n", "second header"),
])
def test_parse_errors_name_the_problem(text, needle):
    with pytest.raises(ParseError, match=needle):
        load_graph(text)


def test_graph_rejects_loops_and_repeats():
    with pytest.raises(GraphError, match="self-loop"):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(GraphError, match="duplicate"):
        Graph([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(GraphError, match="unknown vertex"):
        Graph([1], [(1, 2)])


def test_from_arrays_runs_the_same_checks():
    with pytest.raises(GraphError, match="duplicate"):
        Graph.from_arrays([0, 1], [0, 1], [1, 0])


def test_edge_helpers_are_canonical():
    assert edge_key(5, 2) == (2, 5)
    assert edge_key("b", 1) == (1, "b")
    assert parse_edge_str("-3-4") == (-3, 4)


def test_rotation_round_trip_and_check():
    g = complete_graph(4)
    rot = RotationSystem({v: tuple(u for u in g.vertices if u != v) for v in g.vertices})
    assert rot.check(g) == []
    assert load_rotation(save_rotation(rot, g), g).order_at == rot.order_at
    bad = RotationSystem({**rot.order_at, 1: (2, 3)})
    assert bad.check(g)


@pytest.mark.parametrize("g, level", [
    (complete_graph(5), 3),
    (complete_graph(3), 2),
    (Graph([1, 2, 3], [(1, 2), (2, 3)]), 1),
    (Graph([1, 2, 3], [(1, 2)]), 0),
    (Graph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)]), 2),
])
def test_connectivity_level(g, level):
    assert connectivity_level(g) == level
