"""Helpers that turn a construction into a BundledDrawing.

Two routes: place planarization nodes in the plane and sort arcs by angle
(``GeoBuilder``), or grow a rotation system by inserting star-shaped pieces
into faces (``Embedder``).
"""

from __future__ import annotations

import math

from .core import Graph, edge_key
from .drawing import (BundledDrawing, Face, assemble, mid, skeleton, tnode, trunk,
                      vnode, xnode, Bundle)


class GeoBuilder:
    def __init__(self, graph: Graph, variant: str, sides: int):
        self.graph = graph
        self.variant = variant
        self.sides = sides
        self.pos: dict = {}
        self.bundles: dict = {}
        self.attach: dict = {}
        self.crossings: list = []
        self.direction: dict = {}  # (arc, node) -> vector leaving node along arc

    def vertex(self, v, xy):
        self.pos[vnode(v)] = xy

    def bundle(self, bid, anchor, edges, terminal_xy):
        bid = str(bid)
        edges = [edge_key(*e) for e in edges]
        self.bundles[bid] = (anchor, edges)
        for e in edges:
            fa, sa = self.attach.get(e, (None, None))
            if e[0] == anchor:
                fa = bid
            else:
                sa = bid
            self.attach[e] = (fa, sa)
        self.pos[tnode(bid)] = terminal_xy
        return bid

    def cross(self, b1, b2, xy):
        self.crossings.append((str(b1), str(b2)))
        self.pos[xnode(b1, b2)] = xy

    def build(self, outer_face=None) -> BundledDrawing:
        blist = [Bundle(b, a, tuple(es)) for b, (a, es) in self.bundles.items()]
        nodes, arcs = skeleton(self.graph, blist, self.attach, self.crossings)
        inc = {v: [] for v in nodes}
        for a, (s, t) in arcs.items():
            inc[s].append(a)
            inc[t].append(a)
        emb = {}
        for v in nodes:
            px, py = self.pos[v]

            def ang(a, v=v, px=px, py=py):
                d = self.direction.get((a, v))
                if d is None:
                    s, t = arcs[a]
                    qx, qy = self.pos[t if s == v else s]
                    d = (qx - px, qy - py)
                return -math.atan2(d[1], d[0])  # clockwise

            emb[v] = tuple(sorted(inc[v], key=ang))
        return assemble(self.graph, self.bundles, self.attach, self.crossings, emb,
                        self.variant, self.sides, outer_face)


class Embedder:
    """Rotation system on planarization nodes that grows by face insertions."""

    def __init__(self):
        self.rot: dict = {}
        self.arcs: dict = {}

    def add_node(self, v):
        self.rot.setdefault(v, [])

    def cycle(self, nodes, arc_names):
        """Start from a simple cycle through ``nodes``."""
        k = len(nodes)
        for v in nodes:
            self.add_node(v)
        for i in range(k):
            a, b = nodes[i], nodes[(i + 1) % k]
            arc = arc_names[i]
            self.arcs[arc] = (a, b)
            self.rot[a].append(arc)
            self.rot[b].append(arc)

    def faces(self) -> list[Face]:
        pos = {v: {a: i for i, a in enumerate(r)} for v, r in self.rot.items()}
        used = set()
        out = []
        for a in self.arcs:
            for d in (0, 1):
                if (a, d) in used:
                    continue
                darts, nodes = [], []
                cur = (a, d)
                while cur not in used:
                    used.add(cur)
                    darts.append(cur)
                    s, t = self.arcs[cur[0]]
                    tail, head = (s, t) if cur[1] == 0 else (t, s)
                    nodes.append(tail)
                    r = self.rot[head]
                    nxt = r[(pos[head][cur[0]] + 1) % len(r)]
                    ns, _ = self.arcs[nxt]
                    cur = (nxt, 0 if ns == head else 1)
                out.append(Face(tuple(darts), tuple(nodes)))
        return out

    def find_face(self, *members) -> Face:
        for f in self.faces():
            if all(m in f.nodes for m in members):
                return f
        raise ValueError(f"no face contains {members}")

    def insert_star(self, face: Face, center, corners, arc_names):
        """Put ``center`` inside ``face`` joined to the given corner nodes.

        Each corner must occur exactly once on the face; ``arc_names[i]`` joins
        ``corners[i]`` to the center.
        """
        self.add_node(center)
        pairs = []
        for c, arc in zip(corners, arc_names):
            hits = [i for i, x in enumerate(face.nodes) if x == c]
            if len(hits) != 1:
                raise ValueError(f"corner {c} occurs {len(hits)} times on the face")
            pairs.append((hits[0], c, arc))
        pairs.sort()
        k = len(face.nodes)
        for i, c, arc in pairs:
            incoming = face.darts[(i - 1) % k][0]
            r = self.rot[c]
            r.insert(r.index(incoming) + 1, arc)
            self.arcs[arc] = (c, center)
        self.rot[center] = [arc for _, _, arc in reversed(pairs)]

    def embedding(self) -> dict:
        return {v: tuple(r) for v, r in self.rot.items()}
