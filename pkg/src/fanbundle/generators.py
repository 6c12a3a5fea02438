"""Generators for the density-extremal families and the D12 graph.

Every generator returns a ``FamilyInstance`` whose edge count is checked
against its closed form before it is handed back.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .core import Graph, edge_key
from .drawing import BundledDrawing, assemble, mid, outer_face_of, tnode, trunk, vnode, xnode
from ._build import Embedder, GeoBuilder

FAMILIES = ("onesidedGeneral", "onesidedOuter", "bn", "waterlily", "doubleWaterlily",
            "layeredLily", "d12")

# (sides, variant) each family's drawing is validated against
FAMILY_MODEL = {
    "onesidedGeneral": (1, "general"),
    "onesidedOuter": (1, "outer"),
    "bn": (1, "twolayer"),
    "waterlily": (2, "outer"),
    "doubleWaterlily": (2, "general"),
    "layeredLily": (2, "twolayer"),
}


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    parameters: dict
    graph: Graph
    drawing: BundledDrawing | None
    expected_edges: int
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.graph.m != self.expected_edges:
            raise AssertionError(f"{self.family} {self.parameters}: built {self.graph.m} edges, "
                                 f"closed form says {self.expected_edges}")


# pentagon faces with four diagonals

def _diagonals(face):
    return [frozenset((face[i], face[(i + 2) % 5])) for i in range(5)]


def _choose_omitted(faces, base_edges):
    """Pick one diagonal to leave out per pentagon so the other four are new and distinct."""
    order = sorted(range(len(faces)), key=lambda i: -sum(
        d in base_edges for d in _diagonals(faces[i])))
    used: set = set()
    omit: dict = {}

    def place(j):
        if j == len(order):
            return True
        fi = order[j]
        ds = _diagonals(faces[fi])
        for om in ds:
            chosen = [d for d in ds if d != om]
            if any(d in base_edges or d in used for d in chosen):
                continue
            used.update(chosen)
            if place(j + 1):
                omit[fi] = om
                return True
            used.difference_update(chosen)
        return False

    if not place(0):
        raise ValueError("no consistent choice of diagonals for this pentagon family")
    return omit


def _add_k5_minus_e(emb: Embedder, face_nodes, omitted, bundles, attach, crossings, edges, tag):
    """Fill one pentagon with four diagonals: two bundles, one crossing, one diagonal left out."""
    cyc = list(face_nodes)
    for r in range(5):
        v = cyc[r:] + cyc[:r]
        if frozenset((v[2], v[4])) == omitted:
            break
    else:
        raise ValueError("omitted diagonal is not a diagonal of the face")
    v1, v2, v3, v4, v5 = (_vid(x[2:]) for x in v)
    b1, b2 = f"{tag}a", f"{tag}b"
    e13, e14 = edge_key(v1, v3), edge_key(v1, v4)
    e24, e25 = edge_key(v2, v4), edge_key(v2, v5)
    x = xnode(b1, b2)
    f = next(f for f in emb.faces() if set(f.nodes) == set(cyc) and len(f) == 5)
    emb.insert_star(f, x, [vnode(v1), vnode(v2)], [trunk(b1, 0), trunk(b2, 0)])
    f = emb.find_face(x, vnode(v3), vnode(v4))
    emb.insert_star(f, tnode(b1), [x, vnode(v3), vnode(v4)], [trunk(b1, 1), mid(e13), mid(e14)])
    f = emb.find_face(x, vnode(v4), vnode(v5))
    emb.insert_star(f, tnode(b2), [x, vnode(v4), vnode(v5)], [trunk(b2, 1), mid(e24), mid(e25)])
    bundles[b1] = (v1, [e13, e14])
    bundles[b2] = (v2, [e24, e25])
    for e, anchor, bid in ((e13, v1, b1), (e14, v1, b1), (e24, v2, b2), (e25, v2, b2)):
        attach[e] = (bid, None) if e[0] == anchor else (None, bid)
        edges.append(e)
    crossings.append((b1, b2))


def _vid(tok: str):
    return int(tok) if tok.isdigit() else tok


def gen_onesided_general(k: int) -> FamilyInstance:
    """Pentagonal planar base on 5+3k vertices with four diagonals in every face.

    k=0 would need 13 edges on 5 vertices, more than K5 has, so it is refused.
    """
    if k < 1:
        raise ValueError("onesidedGeneral needs k >= 1: five vertices cannot carry 13 simple edges")
    n = 5 + 3 * k
    emb = Embedder()
    base = [edge_key(i, i % 5 + 1) for i in range(1, 6)]
    emb.cycle([vnode(i) for i in range(1, 6)], [mid(e) for e in base])
    newest = None
    nxt = 6
    for _ in range(k):
        if newest is None:
            f = emb.faces()[0]
            x = list(f.nodes)
        else:
            c, a = newest
            f = next(f for f in emb.faces() if len(f) == 5 and c in f.nodes and a in f.nodes)
            x = list(f.nodes)
            i = x.index(c)
            x = x[i:] + x[:i]
            if x[1] != a:
                x = [x[0]] + x[:0:-1]
        x1, x2, x3, x4, x5 = x
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        new = [edge_key(_vid(x1[2:]), a), edge_key(a, b), edge_key(b, _vid(x3[2:])),
               edge_key(a, c), edge_key(c, _vid(x4[2:]))]
        base += new
        emb.insert_star(f, vnode(a), [x1], [mid(new[0])])
        f = emb.find_face(vnode(a), x3, x2)
        emb.insert_star(f, vnode(b), [vnode(a), x3], [mid(new[1]), mid(new[2])])
        f = next(f for f in emb.faces() if len(f) == 6 and vnode(a) in f.nodes and x4 in f.nodes)
        emb.insert_star(f, vnode(c), [vnode(a), x4], [mid(new[3]), mid(new[4])])
        newest = (vnode(c), vnode(a))
    faces = emb.faces()
    if any(len(f) != 5 for f in faces) or len(faces) != 2 * k + 2:
        raise AssertionError("pentagonal base construction went wrong")
    return _fill_pentagons("onesidedGeneral", {"k": k}, n, base, emb, faces,
                           (13 * n - 26) // 3, variant="general")


def _fill_pentagons(family, params, n, base, emb, faces, expected, variant, skip=None):
    verts = list(range(1, n + 1))
    pent = [f for f in faces if f is not skip]
    base_set = {frozenset(e) for e in base}
    vsets = [tuple(_vid(x[2:]) for x in f.nodes) for f in pent]
    omit = _choose_omitted(vsets, base_set)
    bundles, attach, crossings, edges = {}, {}, [], list(base)
    for i, f in enumerate(pent):
        om = frozenset(vnode(v) for v in omit[i])
        _add_k5_minus_e(emb, f.nodes, om, bundles, attach, crossings, edges, f"f{i + 1}")
    g = Graph(verts, edges)
    d = assemble(g, bundles, attach, crossings, emb.embedding(), variant, 1)
    if variant == "outer":
        d = d.replace(outer_face=outer_face_of(d).id)
    return FamilyInstance(family, params, g, d, expected)


def gen_onesided_outer(q: int) -> FamilyInstance:
    """Chain of q pentagons glued along edges, each carrying four diagonals."""
    if q < 1:
        raise ValueError("onesidedOuter needs q >= 1")
    n = 3 * q + 2
    emb = Embedder()
    base = [edge_key(i, i % 5 + 1) for i in range(1, 6)]
    emb.cycle([vnode(i) for i in range(1, 6)], [mid(e) for e in base])
    outer_nodes = set(emb.faces()[1].nodes)
    u, w = 4, 5
    nxt = 6
    for _ in range(q - 1):
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        new = [edge_key(u, a), edge_key(a, b), edge_key(b, c), edge_key(c, w)]
        base += new
        f = _outer(emb, outer_nodes)
        emb.insert_star(f, vnode(a), [vnode(u)], [mid(new[0])])
        outer_nodes.add(vnode(a))
        f = _outer(emb, outer_nodes)
        emb.insert_star(f, vnode(b), [vnode(a)], [mid(new[1])])
        outer_nodes.add(vnode(b))
        f = _outer(emb, outer_nodes)
        emb.insert_star(f, vnode(c), [vnode(b), vnode(w)], [mid(new[2]), mid(new[3])])
        outer_nodes.add(vnode(c))
        u, w = b, c
    outer = _outer(emb, outer_nodes)
    inner = [f for f in emb.faces() if f.id != outer.id]
    if any(len(f) != 5 for f in inner) or len(inner) != q:
        raise AssertionError("pentagon chain construction went wrong")
    return _fill_pentagons("onesidedOuter", {"q": q}, n, base, emb, inner,
                           (8 * n - 13) // 3, variant="outer")


def _outer(emb: Embedder, outer_nodes: set):
    """The face of a growing outerplanar chain that touches every vertex placed so far."""
    best = None
    for f in emb.faces():
        if outer_nodes <= set(f.nodes) and (best is None or len(f) > len(best)):
            best = f
    return best


# B_n: chained K_{2,3}

def gen_bn(k: int) -> FamilyInstance:
    """k copies of K_{2,3}; consecutive copies share one pole-rung edge."""
    if k < 1:
        raise ValueError("bn needs k >= 1")
    tops = [f"t{j}" for j in range(1, k + 2)]
    bots = [f"r{i}" for i in range(1, 2 * k + 2)]
    edges = set()
    for j in range(1, k + 1):
        for p in (f"t{j}", f"t{j + 1}"):
            for r in (2 * j - 1, 2 * j, 2 * j + 1):
                edges.add(edge_key(p, f"r{r}"))
    layers = {v: 0 for v in tops} | {v: 1 for v in bots}
    g = Graph(tops + bots, sorted(edges, key=lambda e: (str(e[0]), str(e[1]))), layers)
    b = GeoBuilder(g, "twolayer", 1)
    for j, t in enumerate(tops):
        b.vertex(t, (2 * j, 1.0))
    for i, r in enumerate(bots):
        b.vertex(r, (i, 0.0))
    for j in range(1, k + 1):
        s = 2 * j - 2
        left, right = f"t{j}", f"t{j + 1}"
        p1 = b.bundle(f"P{j}", left, [(left, f"r{2 * j}"), (left, f"r{2 * j + 1}")], (s + 1.3, 0.4))
        p2 = b.bundle(f"Q{j}", right, [(right, f"r{2 * j - 1}"), (right, f"r{2 * j}")],
                      (s + 0.7, 0.4))
        b.cross(p1, p2, (s + 1, 0.7))
    d = b.build()
    return FamilyInstance("bn", {"k": k}, g, d, 5 * k + 1)


# water lilies

def _port_anchor(p: int, n: int) -> int:
    """Anchor index of terminal position p; even positions are left bundles."""
    p %= 2 * n
    return (p // 2 + 1) % n if p % 2 == 0 else (p - 1) // 2


def _port_bundle(p: int, n: int, prefix: str = "") -> str:
    p %= 2 * n
    if p % 2 == 0:
        return f"{prefix}L{(p // 2 + 1) % n + 1}"
    return f"{prefix}R{(p - 1) // 2 + 1}"


def _lily_sizes(n: int) -> list:
    tot = 2 * n + 3
    base = tot // 3
    if base % 2 == 0:
        base -= 1
    s = [base] * 3
    rest = tot - 3 * base
    i = 0
    while rest:
        s[i] += 2
        rest -= 2
        i += 1
    return s


def _zigzag(n, start, size, used):
    """Chords inside one terminal set: near/far alternation with two quadrilaterals."""
    for last in ("Q", "q"):
        moves = "H" + ("LLHH" * size)[:size - 7] + last
        lo, hi = 0, size - 1
        out, local = [], set()
        ok = True
        for mv in moves:
            if mv == "L":
                lo += 1
            elif mv == "H":
                hi -= 1
            elif mv == "Q":
                lo += 2
            else:
                hi -= 2
            e = frozenset((_port_anchor(start + lo, n), _port_anchor(start + hi, n)))
            if len(e) < 2 or e in used or e in local:
                ok = False
                break
            local.add(e)
            out.append((start + lo, start + hi))
        if ok and hi - lo == 3:
            used |= local
            return out
    return None


def _lily_chords(n: int, first: int, used: set):
    """Chord list (terminal position pairs) of one lily, or None if it would repeat an edge."""
    sizes = _lily_sizes(n)
    shared = [first, first + sizes[0] - 1, first + sizes[0] + sizes[1] - 2]
    chords = []
    used = set(used)
    for j in range(3):
        a, b = shared[j], shared[(j + 1) % 3]
        e = frozenset((_port_anchor(a, n), _port_anchor(b, n)))
        if len(e) < 2 or e in used:
            return None, None
        used.add(e)
        chords.append((a, b))
    for j in range(3):
        z = _zigzag(n, shared[j], sizes[j], used)
        if z is None:
            return None, None
        chords += z
    return chords, used


def _lily_base(n: int):
    """Consecutive-terminal edges: (v_i, v_i+1) and (v_i, v_i+2)."""
    return [(p, p + 1) for p in range(2 * n)]


def _lily_layout(n):
    theta = [math.pi / 2 - 2 * math.pi * i / n for i in range(n)]
    half = math.pi / n
    delta = half * 0.35

    def port(p, r_term=0.6):
        i = (p % (2 * n)) // 2  # the crossing between v_i and v_i+1
        if p % 2:  # right bundle of v_i, closer to v_i+1
            ang = theta[i] - half - delta
        else:  # left bundle of v_i+1, closer to v_i
            ang = theta[i] - half + delta
        return cmath.rect(r_term, ang)

    def crossing(i, r=0.8):
        return cmath.rect(r, theta[i] - half)

    return theta, port, crossing


def _place_lily(b: GeoBuilder, n, pairs, prefix, invert):
    """Add one lily's bundles and crossings; returns the terminal position of each port."""
    theta, port, crossing = _lily_layout(n)
    vid = list(range(1, n + 1))
    tips = {}
    for p, q in pairs:
        u, v = vid[_port_anchor(p, n)], vid[_port_anchor(q, n)]
        tips.setdefault(p % (2 * n), []).append(edge_key(u, v))
        tips.setdefault(q % (2 * n), []).append(edge_key(u, v))
    live = {}
    for p, es in sorted(tips.items()):
        z = port(p)
        if invert:
            z = 1 / z.conjugate()
        bid = _port_bundle(p, n, prefix)
        b.bundle(bid, vid[_port_anchor(p, n)], es, (z.real, z.imag))
        live[p] = z
    for i in range(n):
        r, l = 2 * i + 1, 2 * i
        if r in live and l in live:
            z = crossing(i)
            if invert:
                z = 1 / z.conjugate()
            b.cross(_port_bundle(r, n, prefix), _port_bundle(l, n, prefix), (z.real, z.imag))
    if invert:
        # inner chords are straight; their images bend, so give the builder the true tangents
        for p, q in pairs:
            for s, t in ((p, q), (q, p)):
                P, Q = port(s), port(t)
                tan = -(Q - P).conjugate() / (P.conjugate() ** 2)
                e = edge_key(vid[_port_anchor(p, n)], vid[_port_anchor(q, n)])
                b.direction[(mid(e), tnode(_port_bundle(s, n, prefix)))] = (tan.real, tan.imag)
    return live


def gen_waterlily(n: int) -> FamilyInstance:
    """Flower drawing on n vertices whose terminal graph is a zigzag-filled triangle."""
    if n < 9:
        raise ValueError("waterlily needs n >= 9")
    base = _lily_base(n)
    used = {frozenset((_port_anchor(p, n), _port_anchor(q, n))) for p, q in base}
    chords, _ = _lily_chords(n, 1, used)
    if chords is None:
        raise AssertionError(f"no water lily zigzag for n={n}")
    pairs = base + chords
    g = Graph(list(range(1, n + 1)), [edge_key(_port_anchor(p, n) + 1, _port_anchor(q, n) + 1)
                                      for p, q in pairs])
    b = GeoBuilder(g, "outer", 2)
    theta, _, _ = _lily_layout(n)
    for i in range(n):
        b.vertex(i + 1, (math.cos(theta[i]), math.sin(theta[i])))
    _place_lily(b, n, pairs, "", invert=False)
    d = b.build()
    d = d.replace(outer_face=outer_face_of(d).id)
    return FamilyInstance("waterlily", {"n": n}, g, d, 4 * n - 9)


def _double_offset(n: int):
    base = _lily_base(n)
    used = {frozenset((_port_anchor(p, n), _port_anchor(q, n))) for p, q in base}
    inner, used = _lily_chords(n, 1, used)
    if inner is None:
        return None
    for first in [5] + [q for q in range(1, 2 * n, 2) if q != 5]:
        outer, _ = _lily_chords(n, first, used)
        if outer is not None:
            return base + inner, outer, first
    return None


def gen_double_waterlily(n: int) -> FamilyInstance:
    """Two water lilies on one vertex circle, one inside and one outside.

    The outer copy drops its consecutive-terminal edges (the inner copy already
    has them) and is rotated so its chords avoid the inner ones. Sizes 9..11 have
    no such rotation and are refused.
    """
    if n < 9:
        raise ValueError("doubleWaterlily needs n >= 9")
    found = _double_offset(n)
    if found is None:
        raise ValueError(f"doubleWaterlily: no edge-disjoint outer copy exists for n={n} "
                         "(supported for n >= 12)")
    inner, outer, first = found
    edges = [edge_key(_port_anchor(p, n) + 1, _port_anchor(q, n) + 1) for p, q in inner + outer]
    g = Graph(list(range(1, n + 1)), edges)
    b = GeoBuilder(g, "general", 2)
    theta, _, _ = _lily_layout(n)
    for i in range(n):
        b.vertex(i + 1, (math.cos(theta[i]), math.sin(theta[i])))
    _place_lily(b, n, inner, "", invert=False)
    _place_lily(b, n, outer, "o", invert=True)
    d = b.build()
    return FamilyInstance("doubleWaterlily", {"n": n}, g, d, 6 * n - 18,
                          {"outerOffset": first})


# layered lily

def _row_ports(count: int, prefix: str):
    """(anchor, bundle id or None) for one layer, left to right."""
    out = [(f"{prefix}1", None)]
    for i in range(1, count):
        out.append((f"{prefix}{i + 1}", f"{prefix}L{i + 1}"))
        out.append((f"{prefix}{i}", f"{prefix}R{i}"))
    out.append((f"{prefix}{count}", None))
    return out


def _layered_moves(n: int) -> str:
    if n % 2 == 0:
        return "TTBTBTBB" + "TTBB" * ((n - 6) // 2) + "TB"
    return "TTBBBTBTBB" + "TTBB" * ((n - 7) // 2) + "TB"


def gen_layered_lily(n: int) -> FamilyInstance:
    """Two-layer drawing with 2n-4 edges.

    Each layer is a row of vertices whose right bundle crosses the next vertex's
    left bundle; a monotone staircase joins the two rows of terminals. Staircase
    steps that would repeat an edge are skipped.
    """
    if n < 10:
        raise ValueError("layeredLily needs n >= 10")
    p = n // 2
    q = n - p
    top, bot = _row_ports(p, "t"), _row_ports(q, "b")
    j = k = 0
    steps = []
    for mv in [None] + list(_layered_moves(n)):
        if mv == "T":
            j += 1
        elif mv == "B":
            k += 1
        steps.append((j, k))
    if (j, k) != (len(top) - 1, len(bot) - 1):
        raise AssertionError("staircase does not end at the last ports")
    seen = set()
    links = []
    for j, k in steps:
        e = edge_key(top[j][0], bot[k][0])
        if e not in seen:
            seen.add(e)
            links.append((j, k, e))
    tops = [f"t{i}" for i in range(1, p + 1)]
    bots = [f"b{i}" for i in range(1, q + 1)]
    layers = {v: 0 for v in tops} | {v: 1 for v in bots}
    g = Graph(tops + bots, [e for _, _, e in links], layers)
    width = 2.0 * max(p, q)
    b = GeoBuilder(g, "twolayer", 2)

    def xs(count):
        gap = width / (count - 1)
        return [i * gap for i in range(count)], gap

    tx, tgap = xs(p)
    bx, bgap = xs(q)
    for i, v in enumerate(tops):
        b.vertex(v, (tx[i], 1.0))
    for i, v in enumerate(bots):
        b.vertex(v, (bx[i], 0.0))

    def port_xy(row, idx, xcoord, gap, y_vertex, y_cross, y_term):
        anchor, bid = row[idx]
        if bid is None:
            return None
        i = (idx + 1) // 2  # crossing between vertices i and i+1 (1-based)
        cx = xcoord[i - 1] + gap / 2
        dx = gap * 0.15
        return (cx - dx if bid[1] == "L" else cx + dx, y_term), (cx, y_cross)

    for row, xcoord, gap, yv, yc, yt in ((top, tx, tgap, 1.0, 0.8, 0.65),
                                         (bot, bx, bgap, 0.0, 0.2, 0.35)):
        members: dict = {}
        for j, k, e in links:
            idx = j if row is top else k
            if row[idx][1] is not None:
                members.setdefault(idx, []).append(e)
        for idx, es in members.items():
            (term, _) = port_xy(row, idx, xcoord, gap, yv, yc, yt)
            b.bundle(row[idx][1], row[idx][0], es, term)
        for idx in range(1, len(row) - 1, 2):
            if idx in members and idx + 1 in members:
                _, cxy = port_xy(row, idx, xcoord, gap, yv, yc, yt)
                b.cross(row[idx][1], row[idx + 1][1], cxy)
    d = b.build()
    degs = sorted(g.degree(v) for v in g.vertices)
    return FamilyInstance("layeredLily", {"n": n}, g, d, 2 * n - 4,
                          {"degree2": degs.count(2), "degree3": degs.count(3)})


# D12

def dodecahedron_faces() -> list:
    """The 12 pentagonal faces of the dodecahedron on vertices 1..20."""
    a = [1 + i for i in range(5)]          # outer ring
    m = [6 + i for i in range(10)]         # middle ring
    c = [16 + i for i in range(5)]         # inner ring
    faces = [tuple(a), tuple(c)]
    for i in range(5):
        faces.append((a[i], a[(i + 1) % 5], m[(2 * i + 2) % 10], m[2 * i + 1], m[2 * i]))
        faces.append((m[2 * i + 1], m[(2 * i + 2) % 10], m[(2 * i + 3) % 10],
                      c[(i + 1) % 5], c[i]))
    return faces


def gen_d12() -> FamilyInstance:
    """Dodecahedron plus a pentagram in each face; 90 edges on 20 vertices."""
    edges = set()
    for f in dodecahedron_faces():
        for i in range(5):
            edges.add(edge_key(f[i], f[(i + 1) % 5]))
            edges.add(edge_key(f[i], f[(i + 2) % 5]))
    g = Graph(list(range(1, 21)), sorted(edges))
    return FamilyInstance("d12", {}, g, None, 5 * 20 - 10)


# dispatch

def family_parameter(family: str) -> str:
    return {"onesidedGeneral": "k", "onesidedOuter": "q", "bn": "k"}.get(family, "n")


def generate(family: str, value: int | None = None) -> FamilyInstance:
    if family == "onesidedGeneral":
        return gen_onesided_general(value)
    if family == "onesidedOuter":
        return gen_onesided_outer(value)
    if family == "bn":
        return gen_bn(value)
    if family == "waterlily":
        return gen_waterlily(value)
    if family == "doubleWaterlily":
        return gen_double_waterlily(value)
    if family == "layeredLily":
        return gen_layered_lily(value)
    if family == "d12":
        return gen_d12()
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def parameter_for_n(family: str, n: int) -> int | None:
    """Family parameter producing exactly n vertices, or None if n is not reachable."""
    if family == "onesidedGeneral":
        return (n - 5) // 3 if n >= 8 and (n - 5) % 3 == 0 else None
    if family in ("onesidedOuter", "bn"):
        return (n - 2) // 3 if n >= 5 and (n - 2) % 3 == 0 else None
    if family == "waterlily":
        return n if n >= 9 else None
    if family == "doubleWaterlily":
        return n if n >= 12 else None
    if family == "layeredLily":
        return n if n >= 10 else None
    if family == "d12":
        return 0 if n == 20 else None
    raise ValueError(f"unknown family {family!r}")


def expected_edges(family: str, n: int) -> int:
    """Closed-form edge count of the family at n vertices."""
    table = {
        "onesidedGeneral": lambda n: (13 * n - 26) // 3,
        "onesidedOuter": lambda n: (8 * n - 13) // 3,
        "bn": lambda n: (5 * n - 7) // 3,
        "waterlily": lambda n: 4 * n - 9,
        "doubleWaterlily": lambda n: 6 * n - 18,
        "layeredLily": lambda n: 2 * n - 4,
        "d12": lambda n: 5 * n - 10,
    }
    return table[family](n)
