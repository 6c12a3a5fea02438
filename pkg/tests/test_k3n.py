from fractions import Fraction

import pytest

from fanbundle.k3n import (GeometricDrawing, GeometryError, build_k3_2kp1, build_k3_4kp2,
                           count_crossings, rotation_at, segment_intersection, to_svg, to_text)

# crossing-pair totals measured by the intersection oracle, then frozen
HALF_PAIRS = {0: 0, 1: 3, 2: 10, 3: 21, 4: 36, 5: 55, 6: 78}


@pytest.mark.parametrize("k", range(7))
def test_half_drawing_totals(k):
    d = build_k3_2kp1(k)
    assert len(d.curves) == 3 * (2 * k + 1)
    cc = count_crossings(d)
    assert cc.total == HALF_PAIRS[k] == 2 * k * k + k
    assert cc.max_per_edge == k


@pytest.mark.parametrize("k", range(7))
def test_mirrored_drawing_doubles(k):
    d = build_k3_4kp2(k)
    assert len(d.curves) == 3 * (4 * k + 2)
    cc = count_crossings(d)
    assert cc.total == 2 * HALF_PAIRS[k]
    assert cc.max_per_edge == k


def test_vertex_positions():
    d = build_k3_2kp1(2)
    F = Fraction
    assert d.points["u"] == (F(-1), F(0)) and d.points["w"] == (F(1), F(0))
    assert d.points["a2"] == (F(-1), F(1)) and d.points["b1"] == (F(1, 2), F(1))


def test_named_crossings():
    cc = count_crossings(build_k3_2kp1(1))
    assert cc.per_edge[("a1", "w")] == 1
    assert (("a1", "w"), ("b1", "u")) in cc.pairs
    cc3 = count_crossings(build_k3_2kp1(3))
    assert cc3.per_edge[("a0", "w")] == 3


def test_crossing_free_edges():
    for k in (1, 3):
        per = count_crossings(build_k3_2kp1(k)).per_edge
        assert per[(f"a{k}", "u")] == 0
        assert per[("a0", "v")] == 0
        assert per[(f"b{k}", "w")] == 0


def test_segment_oracle_basics():
    F = Fraction
    assert segment_intersection((F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))) is None
    hit = segment_intersection((F(0), F(0)), (F(2), F(2)), (F(0), F(2)), (F(2), F(0)))
    assert hit == (F(1), F(1))


def test_adjacent_edges_meeting_is_an_error():
    F = Fraction
    pts = {"x": (F(0), F(0)), "y": (F(2), F(0)), "z": (F(2), F(2))}
    curves = {("x", "y"): (pts["x"], (F(1), F(1)), pts["y"]),
              ("x", "z"): (pts["x"], (F(2), F(0)), pts["z"])}
    with pytest.raises(GeometryError):
        count_crossings(GeometricDrawing(pts, curves, "upper"))


def test_rotation_and_output_formats():
    d = build_k3_2kp1(2)
    assert sorted(rotation_at(d, "v")) == ["a0", "a1", "a2", "b1", "b2"]
    text = to_text(d)
    assert text.count("\npt ") + text.startswith("pt ") == len(d.points)
    assert to_svg(d).startswith("<svg")
