"""SVG rendering of bundled drawings.

Positions come from the planarization: some nodes are pinned (outer face on a
circle, or vertices on two lines, or vertices on a circle) and every other
node sits at the average of its neighbours. The averaging fixed point is
solved directly rather than iterated.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .drawing import (BundledDrawing, DrawingError, planarize, trace_faces, _outer_witness,
                      vnode)

LAYOUTS = ("twolayer", "circular", "barycentric")


class LayoutError(DrawingError):
    """The requested layout cannot be computed for this drawing."""


def _pinned(d: BundledDrawing, layout: str, p, faces) -> dict:
    g = d.graph
    if layout == "twolayer":
        if g.layers is None:
            raise LayoutError("twolayer layout needs layer labels")
        w = _outer_witness(d, faces, "twolayer") if faces else None
        if w is not None:
            top, bottom = w[1]
            bottom = list(reversed(bottom))  # the face walks the second layer backwards
        else:
            top = [v for v in g.vertices if g.layer(v) == 0]
            bottom = [v for v in g.vertices if g.layer(v) == 1]
        pos = {}
        for row, y in ((top, 0.0), (bottom, 1.0)):
            k = len(row)
            for i, v in enumerate(row):
                pos[vnode(v)] = ((i + 0.5) / k if k else 0.5, y)
        return pos
    if layout == "circular":
        order = list(g.vertices)
        w = _outer_witness(d, faces, "outer") if faces else None
        if w is not None:
            order = list(dict.fromkeys(x for x in w[0].nodes if x.startswith("v:")))
            order = [o[2:] for o in order]
            by_str = {str(v): v for v in g.vertices}
            order = [by_str[o] for o in order]
        return _on_circle([vnode(v) for v in order])
    if layout == "barycentric":
        if not faces:
            raise LayoutError("no faces to choose an outer face from")
        outer = None
        if d.outer_face is not None:
            outer = next((f for f in faces if f.id == d.outer_face), None)
        if outer is None:
            outer = max(faces, key=lambda f: (len(set(f.nodes)), f.id))
        ring = list(dict.fromkeys(outer.nodes))
        if len(ring) < 3:
            raise LayoutError("outer face has fewer than three distinct nodes")
        return _on_circle(ring)
    raise LayoutError(f"unknown layout {layout!r}; choose from {', '.join(LAYOUTS)}")


def _on_circle(nodes):
    k = len(nodes)
    return {v: (0.5 + 0.45 * math.cos(math.pi / 2 - 2 * math.pi * i / k),
                0.5 - 0.45 * math.sin(math.pi / 2 - 2 * math.pi * i / k))
            for i, v in enumerate(nodes)}


def layout_positions(d: BundledDrawing, layout: str = "barycentric") -> dict:
    """Node key -> (x, y) in the unit box (y grows downwards)."""
    p = planarize(d)
    faces = trace_faces(p) if p.arcs else []
    pinned = _pinned(d, layout, p, faces)
    nodes = list(p.nodes)
    free = [v for v in nodes if v not in pinned]
    if not free:
        return dict(pinned)
    fidx = {v: i for i, v in enumerate(free)}
    size = len(free)
    lap = np.zeros((size, size))
    rhs = np.zeros((size, 2))
    for a, (s, t) in p.arcs.items():
        for x, y in ((s, t), (t, s)):
            if x not in fidx or x == y:
                continue
            i = fidx[x]
            lap[i, i] += 1
            if y in fidx:
                lap[i, fidx[y]] -= 1
            else:
                rhs[i] += pinned[y]
    try:
        sol = np.linalg.solve(lap, rhs)
    except np.linalg.LinAlgError:
        raise LayoutError("some nodes are not tied to the pinned ones") from None
    if not np.all(np.isfinite(sol)):
        raise LayoutError("layout produced non-finite coordinates")
    pos = dict(pinned)
    for v, i in fidx.items():
        pos[v] = (float(sol[i, 0]), float(sol[i, 1]))
    return pos


def render_svg(d: BundledDrawing, layout: str = "barycentric", size: int = 480) -> str:
    pos = layout_positions(d, layout)
    p = planarize(d)
    pad = 20

    def xy(v):
        x, y = pos[v]
        return f"{pad + x * (size - 2 * pad):.3f}", f"{pad + y * (size - 2 * pad):.3f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">']
    for a in sorted(p.arcs):
        s, t = p.arcs[a]
        (x1, y1), (x2, y2) = xy(s), xy(t)
        cls = "bundle" if a.startswith("trunk:") else "edge"
        width = 3 if cls == "bundle" else 1
        out.append(f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   f'stroke="black" stroke-width="{width}"/>')
    for v in p.nodes:
        x, y = xy(v)
        if v.startswith("x:"):
            out.append(f'<circle class="crossing" cx="{x}" cy="{y}" r="2" fill="red"/>')
        elif v.startswith("t:"):
            out.append(f'<circle class="terminal" cx="{x}" cy="{y}" r="1.5" fill="gray"/>')
    for v in d.graph.vertices:
        x, y = xy(vnode(v))
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="4" fill="white" stroke="black"/>')
        out.append(f'<text x="{x}" y="{float(y) - 6:.3f}" font-size="9" '
                   f'text-anchor="middle">{escape(str(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
