"""Combinatorial fan-bundled drawings: planarization, faces, validation, JSON I/O.

Planarization node keys are ``v:<vertex>``, ``t:<bundle>`` (terminal) and
``x:<b1>|<b2>`` (crossing dummy, ids sorted). Arc keys are ``trunk:<bundle>:0``
(from the anchor), ``trunk:<bundle>:1`` (dummy to terminal, crossed bundles
only) and ``mid:<u>-<v>`` (the unbundled middle part of edge u-v).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import Graph, edge_key, edge_str, parse_edge_str, parse_token, token_key

VARIANTS = ("general", "outer", "twolayer")


class DrawingError(ValueError):
    """Raised when a drawing cannot be planarized or traced."""


class EmbeddingError(DrawingError):
    def __init__(self, message: str, genus_defect: float | None = None):
        super().__init__(message)
        self.genus_defect = genus_defect


def vnode(v) -> str:
    return f"v:{v}"


def tnode(bid) -> str:
    return f"t:{bid}"


def xnode(b1, b2) -> str:
    a, b = sorted((str(b1), str(b2)))
    return f"x:{a}|{b}"


def trunk(bid, part: int) -> str:
    return f"trunk:{bid}:{part}"


def mid(e) -> str:
    return f"mid:{edge_str(e)}"


@dataclass(frozen=True)
class Bundle:
    id: str
    anchor: object
    edges: tuple  # canonical edge keys, in the order they leave the terminal

    @property
    def tips(self) -> tuple:
        return tuple(b if a == self.anchor else a for a, b in self.edges)


@dataclass(frozen=True, eq=False)
class BundledDrawing:
    graph: Graph
    bundles: tuple
    attach: Mapping  # edge key -> (bundle id at first endpoint | None, at second | None)
    crossings: tuple  # sorted pairs of bundle ids
    embedding: Mapping  # node key -> tuple of arc keys (clockwise)
    variant: str = "general"
    sides: int = 1
    outer_face: str | None = None

    def bundle(self, bid) -> Bundle:
        return self._bundle_map()[bid]

    def _bundle_map(self) -> dict:
        cache = self.__dict__.get("_bmap")
        if cache is None:
            cache = {b.id: b for b in self.bundles}
            object.__setattr__(self, "_bmap", cache)
        return cache

    def attachments(self, e) -> tuple:
        return self.attach.get(edge_key(*e), (None, None))

    def partner(self, bid):
        for a, b in self.crossings:
            if a == bid:
                return b
            if b == bid:
                return a
        return None

    def replace(self, **kw) -> "BundledDrawing":
        data = dict(graph=self.graph, bundles=self.bundles, attach=self.attach,
                    crossings=self.crossings, embedding=self.embedding,
                    variant=self.variant, sides=self.sides, outer_face=self.outer_face)
        data.update(kw)
        return BundledDrawing(**data)

    def __eq__(self, other):
        if not isinstance(other, BundledDrawing):
            return NotImplemented
        return to_json(self) == to_json(other)

    def __hash__(self):
        return hash(to_json(self))


@dataclass(frozen=True)
class Planarization:
    nodes: tuple
    arcs: Mapping  # arc key -> (tail node, head node)
    rotation: Mapping  # node key -> tuple of arc keys

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class Face:
    darts: tuple  # (arc, direction) with direction 0 meaning tail -> head
    nodes: tuple  # node at the start of each dart

    @property
    def id(self) -> str:
        return min(dart_str(d) for d in self.darts) if self.darts else ""

    def __len__(self):
        return len(self.darts)


def dart_str(d) -> str:
    return f"{d[0]}/{d[1]}"


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    objects: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def rules(self) -> set:
        return {v.rule for v in self.violations}

    def __bool__(self):
        return self.valid


# skeleton

def skeleton(graph: Graph, bundles, attach, crossings) -> tuple[list, dict]:
    """Nodes and arc endpoints implied by the bundle data (no rotation)."""
    bmap = {b.id: b for b in bundles}
    partner = {}
    for a, b in crossings:
        if a not in bmap or b not in bmap:
            raise DrawingError(f"crossing references unknown bundle {a if a not in bmap else b}")
        if a in partner or b in partner:
            raise DrawingError(f"bundle {a if a in partner else b} in two crossings")
        partner[a] = b
        partner[b] = a
    nodes = [vnode(v) for v in graph.vertices]
    arcs = {}
    idx = graph.index
    for b in bundles:
        if b.anchor not in idx:
            raise DrawingError(f"bundle {b.id} anchored at unknown vertex {b.anchor}")
        nodes.append(tnode(b.id))
    for a, b in crossings:
        nodes.append(xnode(a, b))
    for b in bundles:
        if b.id in partner:
            x = xnode(b.id, partner[b.id])
            arcs[trunk(b.id, 0)] = (vnode(b.anchor), x)
            arcs[trunk(b.id, 1)] = (x, tnode(b.id))
        else:
            arcs[trunk(b.id, 0)] = (vnode(b.anchor), tnode(b.id))
    eset = graph.edge_set
    for e, (fa, sa) in attach.items():
        if e not in eset:
            raise DrawingError(f"attachment for unknown edge {edge_str(e)}")
        for bid in (fa, sa):
            if bid is not None and bid not in bmap:
                raise DrawingError(f"edge {edge_str(e)} attached to unknown bundle {bid}")
    for e in graph.edges:
        fa, sa = attach.get(e, (None, None))
        ends = (tnode(fa) if fa is not None else vnode(e[0]),
                tnode(sa) if sa is not None else vnode(e[1]))
        arcs[mid(e)] = ends
    return nodes, arcs


def planarize(d: BundledDrawing) -> Planarization:
    nodes, arcs = skeleton(d.graph, d.bundles, d.attach, d.crossings)
    incident = {v: [] for v in nodes}
    for a, (s, t) in arcs.items():
        incident[s].append(a)
        incident[t].append(a)
    emb = d.embedding
    unknown = set(emb) - set(incident)
    if unknown:
        raise DrawingError(f"embedding names unknown node {sorted(unknown)[0]}")
    rotation = {}
    for v in nodes:
        got = tuple(emb.get(v, ()))
        if sorted(got) != sorted(incident[v]):
            missing = set(incident[v]) - set(got)
            extra = set(got) - set(incident[v])
            what = (f"misses arc {sorted(missing)[0]}" if missing
                    else f"names non-incident arc {sorted(extra)[0]}" if extra
                    else "repeats an arc")
            raise DrawingError(f"rotation at {v} {what}")
        rotation[v] = got
    # connectivity of the skeleton
    if nodes:
        seen = {nodes[0]}
        todo = deque([nodes[0]])
        while todo:
            x = todo.popleft()
            for a in rotation[x]:
                s, t = arcs[a]
                y = t if s == x else s
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != len(nodes):
            lost = next(v for v in nodes if v not in seen)
            raise DrawingError(f"planarization is disconnected ({lost} unreachable)")
    return Planarization(tuple(nodes), arcs, rotation)


def trace_faces(p: Planarization, check_euler: bool = True) -> list[Face]:
    arcs = p.arcs
    pos = {v: {a: i for i, a in enumerate(rot)} for v, rot in p.rotation.items()}
    used = set()
    faces = []
    for a in sorted(arcs):
        for direc in (0, 1):
            if (a, direc) in used:
                continue
            darts, nodes = [], []
            cur = (a, direc)
            while cur not in used:
                used.add(cur)
                darts.append(cur)
                s, t = arcs[cur[0]]
                tail, head = (s, t) if cur[1] == 0 else (t, s)
                nodes.append(tail)
                rot = p.rotation[head]
                nxt = rot[(pos[head][cur[0]] + 1) % len(rot)]
                ns, nt = arcs[nxt]
                cur = (nxt, 0 if ns == head else 1)
            faces.append(Face(tuple(darts), tuple(nodes)))
    if not arcs and p.nodes:
        faces.append(Face((), (p.nodes[0],)))
    if check_euler:
        chi = len(p.nodes) - len(arcs) + len(faces)
        if chi != 2:
            raise EmbeddingError(f"embedding not planar: V-E+F = {chi}, genus defect {(2 - chi) / 2:g}",
                                 (2 - chi) / 2)
    return faces


# validation

def validate(d: BundledDrawing, sides: int | None = None,
             variant: str | None = None) -> ValidationReport:
    sides = d.sides if sides is None else sides
    variant = d.variant if variant is None else variant
    out: list[Violation] = []
    g = d.graph
    bmap = {}
    structural_ok = True

    def bad(rule, msg, *objs):
        out.append(Violation(rule, msg, tuple(str(o) for o in objs)))

    # V1
    if sides not in (1, 2):
        bad("V1", f"sides must be 1 or 2, got {sides}")
    if variant not in VARIANTS:
        bad("V1", f"unknown variant {variant!r}")
    idx = g.index
    eset = g.edge_set
    for b in d.bundles:
        if b.id in bmap:
            bad("V1", f"bundle id {b.id} used twice", b.id)
            structural_ok = False
            continue
        bmap[b.id] = b
        if b.anchor not in idx:
            bad("V1", f"bundle {b.id} anchored at unknown vertex {b.anchor}", b.id)
            structural_ok = False
            continue
        if not b.edges:
            bad("V1", f"bundle {b.id} is empty", b.id)
        if len(b.edges) > g.degree(b.anchor):
            bad("V1", f"bundle {b.id} larger than deg({b.anchor})", b.id)
        if len(set(b.edges)) != len(b.edges):
            bad("V1", f"bundle {b.id} lists an edge twice", b.id)
        for e in b.edges:
            if e not in eset:
                bad("V1", f"bundle {b.id} lists non-edge {edge_str(e)}", b.id)
                structural_ok = False
            elif b.anchor not in e:
                bad("V1", f"edge {edge_str(e)} in bundle {b.id} misses anchor {b.anchor}", b.id)
                structural_ok = False
    listed = {}
    for b in bmap.values():
        for e in b.edges:
            listed[(b.id, e)] = True
    named = set()
    for e, (fa, sa) in d.attach.items():
        if e not in eset:
            bad("V1", f"attachment for unknown edge {edge_str(e)}", edge_str(e))
            structural_ok = False
            continue
        for end, bid in ((e[0], fa), (e[1], sa)):
            if bid is None:
                continue
            b = bmap.get(bid)
            if b is None:
                bad("V1", f"edge {edge_str(e)} attached to unknown bundle {bid}", edge_str(e), bid)
                structural_ok = False
            elif b.anchor != end:
                bad("V1", f"edge {edge_str(e)} attached at {end} to bundle {bid} anchored at {b.anchor}",
                    edge_str(e), bid)
                structural_ok = False
            elif (bid, e) not in listed:
                bad("V1", f"edge {edge_str(e)} names bundle {bid} but is not listed in it",
                    edge_str(e), bid)
                structural_ok = False
            named.add((bid, e))
    for key in listed:
        if key not in named:
            bad("V1", f"bundle {key[0]} lists {edge_str(key[1])} without an attachment",
                key[0], edge_str(key[1]))
            structural_ok = False
    for pair in d.crossings:
        if len(pair) != 2 or pair[0] == pair[1]:
            bad("V1", f"malformed crossing {pair}")
            structural_ok = False
        elif any(b not in bmap for b in pair):
            bad("V1", f"crossing {pair[0]}|{pair[1]} references unknown bundle", *pair)
            structural_ok = False
    if variant == "twolayer" and g.layers is None:
        bad("V6", "two-layer variant needs layer labels")

    # V2
    if sides == 1:
        for e, (fa, sa) in d.attach.items():
            if fa is not None and sa is not None:
                bad("V2", f"edge {edge_str(e)} is bundled at both ends", edge_str(e))

    # V3
    count = {}
    for pair in d.crossings:
        for b in pair:
            count[b] = count.get(b, 0) + 1
    for b, c in sorted(count.items()):
        if c > 1:
            bad("V3", f"bundle {b} appears in {c} crossings", b)
            structural_ok = False

    # V4
    for pair in d.crossings:
        if len(pair) == 2 and all(b in bmap for b in pair):
            if bmap[pair[0]].anchor == bmap[pair[1]].anchor:
                bad("V4", f"bundles {pair[0]} and {pair[1]} share anchor {bmap[pair[0]].anchor}", *pair)

    # V5
    faces = None
    if structural_ok:
        try:
            p = planarize(d)
            _check_local_rotations(d, p, bad)
            faces = trace_faces(p)
        except EmbeddingError as exc:
            bad("V5", str(exc))
        except DrawingError as exc:
            bad("V5", str(exc))
    else:
        bad("V5", "skipped: structural errors prevent planarization")

    # V6
    if faces is not None and variant in ("outer", "twolayer"):
        if variant == "twolayer" and g.layers is None:
            pass
        elif _outer_witness(d, faces, variant) is None:
            what = ("no face is incident to all vertices" if variant == "outer"
                    else "no face shows the two layers as contiguous blocks")
            bad("V6", what)
    return ValidationReport(tuple(out))


def _check_local_rotations(d: BundledDrawing, p: Planarization, bad) -> None:
    for b in d.bundles:
        rot = p.rotation[tnode(b.id)]
        want = [trunk(b.id, 1 if d.partner(b.id) is not None else 0)] + [mid(e) for e in b.edges]
        if not _cyclic_equal(rot, want):
            bad("V5", f"terminal of {b.id} does not show trunk then edges in bundle order", b.id)
    for a, c in d.crossings:
        rot = p.rotation[xnode(a, c)]
        owner = [r.split(":")[1] for r in rot]
        if len(rot) != 4 or owner[0] == owner[1] or owner[0] != owner[2] or owner[1] != owner[3]:
            bad("V5", f"crossing {a}|{c} does not alternate between the two bundles", a, c)


def _cyclic_equal(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(a).index(b[0])
    except ValueError:
        return False
    return all(a[(i + j) % len(a)] == b[j] for j in range(len(b)))


def _outer_witness(d: BundledDrawing, faces, variant):
    """Face (and for two layers, the layer orders) certifying the variant."""
    real = {vnode(v): v for v in d.graph.vertices}
    ordered = list(faces)
    if d.outer_face is not None:
        ordered.sort(key=lambda f: f.id != d.outer_face)
    for f in ordered:
        seq = [real[x] for x in f.nodes if x in real]
        if len(set(seq)) != len(real):
            continue
        if variant == "outer":
            return f, None
        orders = _layer_split(seq, d.graph)
        if orders is not None:
            return f, orders
    return None


def _layer_split(seq: list, g: Graph):
    """Pick one occurrence per vertex so the two layers form cyclic blocks.

    Returns (layer-0 order, layer-1 order) along the face, or None.
    """
    L = len(seq)
    lay = [g.layer(v) for v in seq]
    need0 = {v for v in seq if g.layer(v) == 0}
    need1 = {v for v in seq if g.layer(v) == 1}
    if not need0 or not need1:
        return [v for v in dict.fromkeys(seq) if g.layer(v) == 0], \
               [v for v in dict.fromkeys(seq) if g.layer(v) == 1]
    for s in range(L):
        if lay[s] != 0:
            continue
        got = set()
        e = s
        steps = 0
        while len(got) < len(need0) and steps < L:
            if lay[e % L] == 0:
                got.add(seq[e % L])
            e += 1
            steps += 1
        if len(got) < len(need0):
            continue
        rest = [seq[(e + i) % L] for i in range(L - steps)]
        if {v for v in rest if g.layer(v) == 1} == need1:
            first0 = list(dict.fromkeys(seq[(s + i) % L] for i in range(steps)
                                        if lay[(s + i) % L] == 0))
            first1 = list(dict.fromkeys(v for v in rest if g.layer(v) == 1))
            return first0, first1
    return None


def outer_face_of(d: BundledDrawing):
    """The face witnessing the outer / two-layer variant, or None."""
    faces = trace_faces(planarize(d))
    w = _outer_witness(d, faces, "twolayer" if d.variant == "twolayer" else "outer")
    return None if w is None else w[0]


def layer_orders(d: BundledDrawing):
    faces = trace_faces(planarize(d))
    w = _outer_witness(d, faces, "twolayer")
    if w is None:
        raise DrawingError("drawing has no two-layer face")
    return w[1]


# construction helper shared by the builders

def assemble(graph: Graph, bundles: Mapping, attach: Mapping, crossings, embedding: Mapping,
             variant: str, sides: int, outer_face: str | None = None) -> BundledDrawing:
    """Build a drawing; each bundle's edge order is read off its terminal rotation.

    ``bundles`` maps id -> (anchor, iterable of edges).
    """
    crossings = tuple(sorted(tuple(sorted((str(a), str(b)))) for a, b in crossings))
    partner = {}
    for a, b in crossings:
        partner[a] = b
        partner[b] = a
    out = []
    for bid, (anchor, edges) in bundles.items():
        edges = [edge_key(*e) for e in edges]
        rot = list(embedding.get(tnode(bid), ()))
        tr = trunk(bid, 1 if bid in partner else 0)
        if tr in rot:
            i = rot.index(tr)
            rot = rot[i + 1:] + rot[:i]
            by_arc = {mid(e): e for e in edges}
            ordered = [by_arc[a] for a in rot if a in by_arc]
            if len(ordered) == len(edges):
                edges = ordered
        out.append(Bundle(str(bid), anchor, tuple(edges)))
    out.sort(key=lambda b: b.id)
    att = {edge_key(*e): tuple(v) for e, v in attach.items()}
    emb = {k: tuple(v) for k, v in embedding.items()}
    return BundledDrawing(graph, tuple(out), att, crossings, emb, variant, sides, outer_face)


# JSON

def _canon_cycle(seq) -> list:
    seq = list(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def to_dict(d: BundledDrawing) -> dict:
    g = d.graph
    out = {
        "variant": d.variant,
        "sides": d.sides,
        "graph": {
            "vertices": list(g.vertices),
            "edges": [[u, v] for u, v in g.edges],
            "layers": None if g.layers is None else {str(v): g.layer(v) for v in g.vertices},
        },
        "bundles": [{"id": b.id, "anchor": b.anchor, "edges": [edge_str(e) for e in b.edges]}
                    for b in sorted(d.bundles, key=lambda b: b.id)],
        "attachments": {edge_str(e): {"first": fa, "second": sa}
                        for e, (fa, sa) in d.attach.items() if fa is not None or sa is not None},
        "crossings": [list(p) for p in sorted(d.crossings)],
        "embedding": {k: _canon_cycle(v) for k, v in d.embedding.items()},
    }
    if d.outer_face is not None:
        out["outerFace"] = d.outer_face
    return out


def to_json(d: BundledDrawing) -> str:
    return json.dumps(to_dict(d), sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def from_dict(obj: Mapping) -> BundledDrawing:
    try:
        gd = obj["graph"]
        verts = [v if isinstance(v, int) else parse_token(str(v)) for v in gd["vertices"]]
        layers = gd.get("layers")
        if layers is not None:
            layers = {parse_token(k): int(x) for k, x in layers.items()}
        graph = Graph(verts, [tuple(e) for e in gd["edges"]], layers)
        bundles = tuple(Bundle(str(b["id"]), b["anchor"], tuple(parse_edge_str(e) for e in b["edges"]))
                        for b in obj["bundles"])
        attach = {}
        for k, v in obj.get("attachments", {}).items():
            attach[parse_edge_str(k)] = (v.get("first"), v.get("second"))
        crossings = tuple(tuple(sorted((str(a), str(b)))) for a, b in obj.get("crossings", []))
        emb = {k: tuple(v) for k, v in obj["embedding"].items()}
        return BundledDrawing(graph, bundles, attach, crossings, emb,
                              obj.get("variant", "general"), int(obj.get("sides", 1)),
                              obj.get("outerFace"))
    except (KeyError, TypeError) as exc:
        raise DrawingError(f"malformed drawing file: {exc!r}") from None


def from_json(text: str) -> BundledDrawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingError(f"drawing file is not JSON: {exc}") from None
    return from_dict(obj)
