import time

import pytest

from fanbundle.core import load_rotation, save_graph, save_rotation, load_graph
from fanbundle.reduction import (ReductionError, ThreePartitionInstance,
                                 copy_consecutiveness_problems, reduce, solve_3partition)

FIG_A = (2, 2, 2, 3, 3, 3, 4, 5, 6)


@pytest.fixture(scope="module")
def small():
    return reduce(ThreePartitionInstance(FIG_A, 10), K=4)


def test_instance_validation():
    with pytest.raises(ReductionError, match="sum"):
        ThreePartitionInstance((1, 1, 1, 1, 1, 1), 10)
    with pytest.raises(ReductionError, match="3m"):
        ThreePartitionInstance((1, 2), 3)
    with pytest.raises(ReductionError, match="positive"):
        ThreePartitionInstance((0, 5, 5), 10)


def test_window_is_reported_not_fatal():
    inst = ThreePartitionInstance(FIG_A, 10)
    assert sorted(set(inst.out_of_window())) == [2, 5, 6]


def test_solver_lexicographic():
    sol = solve_3partition(ThreePartitionInstance((2, 3, 5, 2, 3, 5, 3, 3, 4), 10))
    assert sol == ((2, 3, 5), (2, 3, 5), (3, 3, 4))


def test_solver_equal_thirds_and_no():
    assert solve_3partition(ThreePartitionInstance((4,) * 6, 12)) == ((4, 4, 4),) * 2
    assert solve_3partition(ThreePartitionInstance((1, 1, 1, 5, 5, 5), 9)) is None
    with pytest.raises(ReductionError):
        solve_3partition(ThreePartitionInstance((3,) * 18, 9))


def test_closed_forms_small(small):
    s = small.stats
    assert s["beamVertices"] == 151
    assert s["wallVertices"] == 11
    assert s["obstacleVertices"] == 4 * 3 + 3
    assert s["obstacleCount"] == 9 * 4
    assert s["columnCount"] == 9
    assert s["transversalPathLength"] == 34
    assert s["centralCellEdges"][8] == 6
    assert s["otherCellEdges"] == 4
    assert (s["vertices"], s["edges"]) == (s["closedFormVertices"], s["closedFormEdges"])
    assert small.expected_yes is True


def test_barrier_copy_shape(small):
    for es in small.copies:
        verts = {v for e in es for v in e}
        assert len(verts) == 7 and len(es) == 16


def test_rotation_valid_and_copies_consecutive(small):
    assert small.rotation.check(small.graph) == []
    assert copy_consecutiveness_problems(small) == []


def test_destination_reverses_origin(small):
    g, rot = small.graph, small.rotation
    o, d = small.stats["origin"], small.stats["destination"]

    def path_id(v):
        return v.split("_")[0] if isinstance(v, str) and v.startswith("P") else None

    at_o = [path_id(u) for u in rot.order_at[o] if path_id(u)]
    at_d = [path_id(u) for u in rot.order_at[d] if path_id(u)]
    rev = at_o[::-1]
    assert len(at_o) == 3
    assert any(at_d == rev[i:] + rev[:i] for i in range(3))
    assert not any(at_d == at_o[i:] + at_o[:i] for i in range(3))


def test_two_sided_doubles_cells():
    r = reduce(ThreePartitionInstance(FIG_A, 10), K=4, model=2)
    assert r.stats["otherCellEdges"] == 8
    assert r.stats["centralCellEdges"] == [2 * a for a in FIG_A]
    assert r.stats["edges"] == r.stats["closedFormEdges"]
    assert r.crossed_pairs
    for e, f in r.crossed_pairs:
        assert not set(e) & set(f)


def test_single_triple():
    r = reduce(ThreePartitionInstance((3, 3, 4), 10), K=3)
    assert r.stats["obstacleCount"] == 0
    assert r.stats["transversalPathLength"] == 10
    assert r.stats["vertices"] == r.stats["closedFormVertices"]


def test_warnings_and_default_k():
    r = reduce(ThreePartitionInstance((3, 3, 4), 10))
    assert r.K == 100 and not any("B^2" in w for w in r.warnings)
    r4 = reduce(ThreePartitionInstance((3, 3, 4), 10), K=4)
    assert any("B^2" in w for w in r4.warnings)


def test_files_round_trip(small):
    g = load_graph(save_graph(small.graph))
    rot = load_rotation(save_rotation(small.rotation, g), g)
    assert rot.order_at == small.rotation.order_at


def test_large_scale_is_fast():
    t = time.perf_counter()
    r = reduce(ThreePartitionInstance(FIG_A, 10), K=100)
    assert time.perf_counter() - t < 10
    assert r.stats["beamVertices"] == 4 * (9 * 100 + 1) + 3
    assert r.stats["transversalPathLength"] == 6 * 100 + 10
