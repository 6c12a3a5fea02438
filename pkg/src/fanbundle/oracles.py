"""Slow reference answers for small graphs.

Nothing here calls into the recognizers; the two sides are compared in the
tests and must agree everywhere.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .core import Graph, connectivity_level


class OracleRangeError(ValueError):
    """Input is outside the size range an oracle is willing to enumerate."""


def enumerate_labeled_graphs(n: int):
    """All 2^(n choose 2) graphs on vertices 0..n-1, by edge bitmask."""
    if n < 0 or n > 7:
        raise OracleRangeError("enumerate_labeled_graphs supports 0 <= n <= 7")
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Graph(range(n), [slots[i] for i in range(len(slots)) if mask >> i & 1])


# outer drawings of triconnected graphs

def _template(n: int, k: int, extra_vk: bool, extra_ends: bool) -> frozenset:
    """Edge set (0-based positions) described by a labeling with split k."""
    e = set()
    for i in range(1, n):
        e.add((i, i + 1))
    e.add((1, n - 1))
    e.add((2, n))
    for i in range(3, k):
        e.add((i, n))
    for j in range(k, n - 1):
        e.add((1, j))
    if k in (2, n - 1) or extra_ends:
        e.add((1, n))
    if extra_vk:
        e.add((k, n))
    return frozenset((a - 1, b - 1) for a, b in (sorted(p) for p in e) if a != b)


_TEMPLATES: dict = {}


def _templates(n: int) -> list:
    """Distinct templates for n with (edge count, sorted degrees) for quick screening."""
    if n not in _TEMPLATES:
        out = set()
        for k in range(2, n + 1):
            for a in (False, True):
                for b in (False, True):
                    out.add(_template(n, k, a, b))
        rows = []
        for t in sorted(out, key=sorted):
            deg = [0] * n
            for a, b in t:
                deg[a] += 1
                deg[b] += 1
            rows.append((t, len(t), tuple(sorted(deg))))
        _TEMPLATES[n] = rows
    return _TEMPLATES[n]


def _embeds_exactly(g: Graph, tmpl: frozenset) -> bool:
    """Is there a bijection positions -> vertices carrying tmpl onto g's edge set?"""
    n = g.n
    if len(tmpl) != g.m:
        return False
    tadj = [set() for _ in range(n)]
    for a, b in tmpl:
        tadj[a].add(b)
        tadj[b].add(a)
    verts = list(g.vertices)
    gadj = {v: set(g.adj[v]) for v in verts}
    if sorted(len(s) for s in tadj) != sorted(len(gadj[v]) for v in verts):
        return False
    image = [None] * n
    used = set()

    def place(p):
        if p == n:
            return True
        for v in verts:
            if v in used or len(gadj[v]) != len(tadj[p]):
                continue
            ok = True
            for q in range(p):
                if (q in tadj[p]) != (image[q] in gadj[v]):
                    ok = False
                    break
            if ok:
                image[p] = v
                used.add(v)
                if place(p + 1):
                    return True
                used.discard(v)
        return False

    return place(0)


def outer3_oracle(g: Graph) -> bool:
    """Triconnected, and some labeling with some split k gives exactly g's edges."""
    if not 5 <= g.n <= 8:
        raise OracleRangeError("outer3_oracle needs 5 <= n <= 8")
    degs = tuple(sorted(len(g.adj[v]) for v in g.vertices))
    hits = [t for t, m, d in _templates(g.n) if m == g.m and d == degs]
    if not hits or connectivity_level(g) < 3:
        return False
    return any(_embeds_exactly(g, t) for t in hits)


# two-layer snakes

def _shapes(top: int, bottom: int):
    """Block sequences with `top`/`bottom` slots; a block is (top span, bottom span)."""
    def rec(t, b):
        if t == 1 and b == 1:
            yield ()
            return
        for dt, db in ((1, 1), (1, 2), (2, 1)):
            if t - dt >= 1 and b - db >= 1:
                for rest in rec(t - dt, b - db):
                    yield ((dt, db),) + rest
    if top < 2 or bottom < 2:
        return
    yield from (s for s in rec(top, bottom) if s)


def _slot_edges(shape) -> set:
    edges = set()
    x = y = 0
    for dt, db in shape:
        for i in range(x, x + dt + 1):
            for j in range(y, y + db + 1):
                edges.add((i, j))
        x += dt
        y += db
    return edges


def babysnake_oracle(g: Graph) -> bool:
    """Is g (with its layers) a spanning subgraph of some chain of K22/K23 blocks?"""
    if g.n > 8:
        raise OracleRangeError("babysnake_oracle needs n <= 8")
    if g.layers is None:
        raise OracleRangeError("babysnake_oracle needs layer labels")
    tops = [v for v in g.vertices if g.layer(v) == 0]
    bots = [v for v in g.vertices if g.layer(v) == 1]
    edges = [(u, v) if g.layer(u) == 0 else (v, u) for u, v in g.edges]
    ti = {v: i for i, v in enumerate(tops)}
    bi = {v: i for i, v in enumerate(bots)}
    pairs = [(ti[a], bi[b]) for a, b in edges]
    for shape in _shapes(len(tops), len(bots)):
        slots = _slot_edges(shape)
        if len(slots) < len(pairs):
            continue
        for pt in permutations(range(len(tops))):
            for pb in permutations(range(len(bots))):
                if all((pt[a], pb[b]) in slots for a, b in pairs):
                    return True
    return False
