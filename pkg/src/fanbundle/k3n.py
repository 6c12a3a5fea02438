"""k-planar drawings of K_{3,2k+1} and K_{3,4k+2} with exact crossing counts.

Upper half: u, v, w at (-1,0), (0,0), (1,0); a_i at (-i/k, 1) for i = 0..k and
b_j at (j/k, 1) for j = 1..k. Every edge is straight except (w, a_i) for i >= 1,
which climbs over the b's and comes into w from the right, and (u, b_j), which
climbs over the a's and comes into u from the left. The lower copy mirrors the
upper one in the x-axis and shares u, v, w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from itertools import combinations

from .core import edge_key, edge_str


class GeometryError(ValueError):
    """Degenerate geometry: overlapping segments or touching adjacent edges."""


@dataclass(frozen=True)
class GeometricDrawing:
    points: dict      # vertex -> (Fraction, Fraction)
    curves: dict      # edge key -> tuple of points, from edge[0] to edge[1]
    halfplane: str    # "upper" or "both"

    @property
    def edges(self):
        return tuple(self.curves)


@dataclass(frozen=True)
class CrossingCount:
    per_edge: dict    # edge -> number of crossings
    pairs: tuple      # (edge, edge) pairs that cross, each listed once

    @property
    def max_per_edge(self) -> int:
        return max(self.per_edge.values(), default=0)

    @property
    def total(self) -> int:
        return len(self.pairs)


def _half(k: int, suffix: str = "", sign: int = 1) -> tuple[dict, dict]:
    pts = {"u": (F(-1), F(0)), "v": (F(0), F(0)), "w": (F(1), F(0))}
    a = [f"a{i}{suffix}" for i in range(k + 1)]
    b = [f"b{j}{suffix}" for j in range(1, k + 1)]
    step = F(1, k) if k else F(0)
    for i, name in enumerate(a):
        pts[name] = (-i * step, F(sign))
    for j, name in enumerate(b, start=1):
        pts[name] = (j * step, F(sign))
    lift = F(1, 2 * (k + 1) ** 2)  # height at which the long curves turn towards u or w
    curves = {}

    def put(x, y, path):
        e = edge_key(x, y)
        if e[0] != x:
            path = list(reversed(path))
        curves[e] = tuple(path)

    def p(x, y):
        return (x, sign * y)

    for name in a:
        put("v", name, [pts["v"], pts[name]])
        put("u", name, [pts["u"], pts[name]])
    for name in b:
        put("v", name, [pts["v"], pts[name]])
        put("w", name, [pts["w"], pts[name]])
    put("w", a[0], [pts["w"], pts[a[0]]])
    for i in range(1, k + 1):
        x0 = -i * step
        top = 1 + F(i, k + 1)
        right = 1 + F(i, k + 1)
        put(a[i], "w", [pts[a[i]], p(x0, top), p(right, top), p(right, lift), pts["w"]])
    for j in range(1, k + 1):
        x0 = j * step
        top = 1 + F(j, (k + 1) ** 2)
        left = -1 - F(j, k + 1)
        put(b[j - 1], "u", [pts[b[j - 1]], p(x0, top), p(left, top), p(left, lift), pts["u"]])
    return pts, curves


def build_k3_2kp1(k: int) -> GeometricDrawing:
    """K_{3,2k+1} drawn in the upper half plane with at most k crossings per edge."""
    if k < 0:
        raise ValueError("k must be non-negative")
    pts, curves = _half(k)
    return GeometricDrawing(pts, curves, "upper")


def build_k3_4kp2(k: int) -> GeometricDrawing:
    """Two mirrored copies of the K_{3,2k+1} drawing glued at u, v, w."""
    if k < 0:
        raise ValueError("k must be non-negative")
    pts, curves = _half(k)
    pts2, curves2 = _half(k, suffix="'", sign=-1)
    pts.update(pts2)
    curves.update(curves2)
    return GeometricDrawing(pts, curves, "both")


# exact intersection oracle

def _orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r):
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segment_intersection(p1, p2, q1, q2):
    """Intersection point of two closed segments, None if disjoint.

    Raises GeometryError when the segments overlap along a stretch.
    """
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    if d1 == d2 == d3 == d4 == 0:
        pts = [x for x in (p1, p2) if _on_segment(q1, q2, x)] + \
              [x for x in (q1, q2) if _on_segment(p1, p2, x)]
        pts = set(pts)
        if not pts:
            return None
        if len(pts) == 1:
            return pts.pop()
        raise GeometryError(f"collinear overlap between {p1}-{p2} and {q1}-{q2}")
    if d1 * d2 > 0 or d3 * d4 > 0:
        return None
    if d1 == 0 and not _on_segment(q1, q2, p1) or d2 == 0 and not _on_segment(q1, q2, p2):
        return None
    if d3 == 0 and not _on_segment(p1, p2, q1) or d4 == 0 and not _on_segment(p1, p2, q2):
        return None
    # solve p1 + t (p2 - p1) on the line through q1, q2
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    den = rx * sy - ry * sx
    t = ((q1[0] - p1[0]) * sy - (q1[1] - p1[1]) * sx) / den
    return (p1[0] + t * rx, p1[1] + t * ry)


def _polyline_points(c1, c2) -> set:
    hits = set()
    for i in range(len(c1) - 1):
        for j in range(len(c2) - 1):
            x = segment_intersection(c1[i], c1[i + 1], c2[j], c2[j + 1])
            if x is not None:
                hits.add(x)
    return hits


def count_crossings(d: GeometricDrawing) -> CrossingCount:
    """Exact crossing count per edge; edges sharing an endpoint must not meet elsewhere."""
    per = {e: 0 for e in d.curves}
    pairs = []
    for e, f in combinations(sorted(d.curves, key=edge_str), 2):
        hits = _polyline_points(d.curves[e], d.curves[f])
        shared = set(e) & set(f)
        if shared:
            ends = {d.points[v] for v in shared}
            if hits - ends:
                raise GeometryError(f"adjacent edges {edge_str(e)} and {edge_str(f)} cross")
            continue
        if hits:
            per[e] += len(hits)
            per[f] += len(hits)
            pairs.extend([(e, f)] * len(hits))
    return CrossingCount(per, tuple(pairs))


def expected_pairs(k: int) -> int:
    """Crossing pairs of the half drawing: k(k+1)/2 + k(k+1)/2 + k^2."""
    return 2 * k * k + k


def rotation_at(d: GeometricDrawing, vertex) -> list:
    """Neighbours of ``vertex`` in clockwise order, read off the curve directions."""
    import math

    px, py = d.points[vertex]
    out = []
    for e, c in d.curves.items():
        if vertex not in e:
            continue
        seq = c if e[0] == vertex else tuple(reversed(c))
        qx, qy = seq[1]
        other = e[1] if e[0] == vertex else e[0]
        out.append((-math.atan2(float(qy - py), float(qx - px)), other))
    out.sort()
    return [o for _, o in out]


def to_text(d: GeometricDrawing) -> str:
    """Line format: ``pt <v> <x> <y>`` and ``curve <u>-<v> <x1> <y1> ...`` with rationals."""
    lines = [f"# halfplane {d.halfplane}"]
    for v in sorted(d.points, key=str):
        x, y = d.points[v]
        lines.append(f"pt {v} {x} {y}")
    for e in sorted(d.curves, key=edge_str):
        coords = " ".join(f"{x} {y}" for x, y in d.curves[e])
        lines.append(f"curve {edge_str(e)} {coords}")
    return "\n".join(lines) + "\n"


def to_svg(d: GeometricDrawing, size: int = 480) -> str:
    xs = [float(x) for c in d.curves.values() for x, _ in c] + [float(p[0]) for p in d.points.values()]
    ys = [float(y) for c in d.curves.values() for _, y in c] + [float(p[1]) for p in d.points.values()]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    pad = 20
    scale = (size - 2 * pad) / span

    def tr(x, y):
        return f"{pad + (float(x) - lo_x) * scale:.3f},{pad + (hi_y - float(y)) * scale:.3f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    for e in sorted(d.curves, key=edge_str):
        pts = " ".join(tr(x, y) for x, y in d.curves[e])
        out.append(f'<polyline class="edge" points="{pts}" fill="none" stroke="black"/>')
    for v in sorted(d.points, key=str):
        cx, cy = tr(*d.points[v]).split(",")
        out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
