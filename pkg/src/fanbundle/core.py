"""Graphs, rotation systems, connectivity helpers and the text file formats."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

VertexId = Hashable  # int or str in practice
Edge = tuple

_INT_RE = re.compile(r"^-?\d+$")
_FORBIDDEN = set("-|:# \t\r\n")


class GraphError(ValueError):
    """Invariant violation while building a graph."""


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def token_key(v):
    # ints sort before strings, each in natural order
    if isinstance(v, (int, np.integer)):
        return (0, int(v), "")
    return (1, 0, str(v))


def edge_key(u, v) -> Edge:
    """Canonical unordered pair, independent of any vertex order."""
    return (u, v) if token_key(u) <= token_key(v) else (v, u)


def edge_str(e: Edge) -> str:
    u, v = edge_key(*e)
    return f"{u}-{v}"


def parse_token(tok: str):
    if _INT_RE.match(tok):
        return int(tok)
    if any(ch in _FORBIDDEN for ch in tok):
        raise ValueError(f"vertex token {tok!r} contains a reserved character")
    return tok


def parse_edge_str(s: str) -> Edge:
    # ids never contain '-' except a leading minus on negative ints
    m = re.match(r"^(-?[^-]+)-(-?[^-]+)$", s)
    if not m:
        raise ValueError(f"bad edge token {s!r}")
    return edge_key(parse_token(m.group(1)), parse_token(m.group(2)))


class Graph:
    """Simple undirected graph with optional 0/1 layer labels.

    Edges are stored as two index arrays with ``iu < iv``. The tuple/set views
    are computed on first use, so very large generated instances stay cheap.
    """

    __slots__ = ("_vertices", "_iu", "_iv", "_layers", "_index", "_edges",
                 "_adj", "_eset", "_hash")

    def __init__(self, vertices: Iterable[VertexId], edges: Iterable[Sequence] = (),
                 layers: Mapping[VertexId, int] | None = None):
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            seen = set()
            dup = next(v for v in verts if v in seen or seen.add(v))
            raise GraphError(f"duplicate vertex {dup!r}")
        iu, iv = [], []
        n = len(verts)
        seen = set()
        for e in edges:
            u, v = e
            a, b = index.get(u), index.get(v)
            if a is None or b is None:
                raise GraphError(f"edge {u}-{v} references unknown vertex")
            if a == b:
                raise GraphError(f"self-loop at {u!r} (edge {u}-{v})")
            if a > b:
                a, b = b, a
            code = a * n + b
            if code in seen:
                raise GraphError(f"duplicate edge {verts[a]}-{verts[b]}")
            seen.add(code)
            iu.append(a)
            iv.append(b)
        self._init(verts, index, np.array(iu, dtype=np.int64),
                   np.array(iv, dtype=np.int64), layers, checked=True)

    @classmethod
    def from_arrays(cls, vertices: Sequence[VertexId], iu, iv,
                    layers: Mapping[VertexId, int] | None = None) -> "Graph":
        """Build from endpoint index arrays (no per-edge Python work)."""
        g = cls.__new__(cls)
        verts = tuple(vertices)
        index = None if len(verts) > 50_000 else {v: i for i, v in enumerate(verts)}
        g._init(verts, index, np.asarray(iu, dtype=np.int64),
                np.asarray(iv, dtype=np.int64), layers)
        return g

    def _init(self, verts, index, iu, iv, layers, checked=False):
        n = len(verts)
        if checked:
            # caller already ordered each pair and ruled out loops and repeats
            lo, hi = iu, iv
        else:
            if iu.shape != iv.shape:
                raise GraphError("endpoint arrays differ in length")
            if len(iu) and (iu.min() < 0 or iv.min() < 0 or iu.max() >= n or iv.max() >= n):
                raise GraphError("edge index out of range")
            loops = np.nonzero(iu == iv)[0]
            if len(loops):
                v = verts[iu[loops[0]]]
                raise GraphError(f"self-loop at {v!r} (edge {v}-{v})")
            lo = np.minimum(iu, iv)
            hi = np.maximum(iu, iv)
        if len(lo) and not checked:
            code = lo * n + hi
            uniq, counts = np.unique(code, return_counts=True)
            if len(uniq) != len(code):
                c = uniq[np.argmax(counts > 1)]
                raise GraphError(f"duplicate edge {verts[c // n]}-{verts[c % n]}")
        lay = None
        if layers is not None:
            lay = {v: int(layers[v]) for v in verts if v in layers}
            if len(lay) != n:
                missing = next(v for v in verts if v not in layers)
                raise GraphError(f"vertex {missing!r} has no layer")
            extra = set(layers) - set(verts)
            if extra:
                raise GraphError(f"layer given for unknown vertex {sorted(extra, key=token_key)[0]!r}")
            if any(x not in (0, 1) for x in lay.values()):
                raise GraphError("layers must be 0 or 1")
            if len(lo):
                lv = np.fromiter((lay[v] for v in verts), dtype=np.int8, count=n)
                bad = np.nonzero(lv[lo] == lv[hi])[0]
                if len(bad):
                    a, b = verts[lo[bad[0]]], verts[hi[bad[0]]]
                    raise GraphError(f"edge {a}-{b} joins two vertices of layer {lay[a]}")
        self._vertices = verts
        self._index = index
        self._iu = lo
        self._iv = hi
        self._layers = lay
        self._edges = None
        self._adj = None
        self._eset = None
        self._hash = None

    # basic views
    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._iu)

    @property
    def layers(self) -> dict | None:
        return None if self._layers is None else dict(self._layers)

    def layer(self, v) -> int:
        return self._layers[v]

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self._vertices)}
        return self._index

    def index_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return self._iu, self._iv

    @property
    def edges(self) -> tuple:
        """Edges as canonical token pairs, in storage order."""
        if self._edges is None:
            vs = self._vertices
            self._edges = tuple(edge_key(vs[a], vs[b])
                                for a, b in zip(self._iu.tolist(), self._iv.tolist()))
        return self._edges

    @property
    def edge_set(self) -> frozenset:
        if self._eset is None:
            self._eset = frozenset(self.edges)
        return self._eset

    def has_edge(self, u, v) -> bool:
        return edge_key(u, v) in self.edge_set

    @property
    def adj(self) -> dict:
        if self._adj is None:
            adj = {v: [] for v in self._vertices}
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            self._adj = {v: tuple(ns) for v, ns in adj.items()}
        return self._adj

    def neighbors(self, v) -> tuple:
        return self.adj[v]

    def degree(self, v) -> int:
        return len(self.adj[v])

    def degree_array(self) -> np.ndarray:
        return np.bincount(np.concatenate([self._iu, self._iv]), minlength=self.n)

    def incident_edges(self, v) -> list:
        return [edge_key(v, u) for u in self.adj[v]]

    def with_layers(self, layers: Mapping) -> "Graph":
        return Graph.from_arrays(self._vertices, self._iu, self._iv, layers)

    def subgraph(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        verts = [v for v in self._vertices if v in keep]
        es = [e for e in self.edges if e[0] in keep and e[1] in keep]
        lay = None if self._layers is None else {v: self._layers[v] for v in verts}
        return Graph(verts, es, lay)

    def same_as(self, other: "Graph") -> bool:
        """Same vertex set and edge set (orders ignored, layers ignored)."""
        return (set(self._vertices) == set(other._vertices)
                and self.edge_set == other.edge_set)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.same_as(other) and self._layers == other._layers

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._vertices), self.edge_set))
        return self._hash

    def __repr__(self):
        tag = " layered" if self._layers is not None else ""
        return f"<Graph n={self.n} m={self.m}{tag}>"


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order per vertex (clockwise).

    The graph is simple, so an incident edge is named by its far endpoint.
    """

    order_at: Mapping[VertexId, tuple]

    def edges_at(self, v) -> list:
        return [edge_key(v, u) for u in self.order_at[v]]

    def check(self, g: Graph) -> list[str]:
        problems = []
        for v in g.vertices:
            got = self.order_at.get(v)
            if got is None:
                if g.degree(v):
                    problems.append(f"vertex {v} has no rotation")
                continue
            if len(got) != len(set(got)) or set(got) != set(g.adj[v]):
                problems.append(f"rotation at {v} is not a permutation of its incident edges")
        extra = set(self.order_at) - set(g.vertices)
        if extra:
            problems.append(f"rotation for unknown vertex {sorted(extra, key=token_key)[0]}")
        return problems


# file formats

def load_graph(text: str) -> Graph:
    header = None
    order: dict = {}
    layers: dict = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "p":
                if header is not None:
                    raise ParseError(lineno, "second header line")
                if len(parts) != 3:
                    raise ParseError(lineno, "header must be 'p <n> <m>'")
                header = (int(parts[1]), int(parts[2]))
                if header[0] < 0 or header[1] < 0:
                    raise ParseError(lineno, "negative count in header")
            elif kind == "l":
                if len(parts) != 3 or parts[2] not in ("0", "1"):
                    raise ParseError(lineno, "layer line must be 'l <v> <0|1>'")
                v = parse_token(parts[1])
                if v in layers:
                    raise ParseError(lineno, f"layer of {v} given twice")
                layers[v] = int(parts[2])
                order.setdefault(v, None)
            elif kind == "e":
                if len(parts) != 3:
                    raise ParseError(lineno, "edge line must be 'e <u> <v>'")
                u, v = parse_token(parts[1]), parse_token(parts[2])
                if u == v:
                    raise ParseError(lineno, f"self-loop {u}-{v}")
                if header is None:
                    raise ParseError(lineno, "edge before header")
                order.setdefault(u, None)
                order.setdefault(v, None)
                edges.append((lineno, u, v))
            else:
                raise ParseError(lineno, f"unknown line type {kind!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(lineno, str(exc)) from None
    if header is None:
        raise ParseError(0, "missing header 'p <n> <m>'")
    n, m = header
    verts = list(order)
    if len(verts) < n:
        used = set(verts)
        filler = (i for i in range(1, n + 1) if i not in used)
        for _ in range(n - len(verts)):
            verts.append(next(filler, None))
        if None in verts:
            raise ParseError(0, f"header declares {n} vertices but only {len(order)} named")
    if len(verts) > n:
        raise ParseError(0, f"header declares {n} vertices, file names {len(verts)}")
    if len(edges) != m:
        raise ParseError(0, f"header declares {m} edges, file has {len(edges)}")
    seen = {}
    for lineno, u, v in edges:
        k = edge_key(u, v)
        if k in seen:
            raise ParseError(lineno, f"duplicate edge {u}-{v} (first on line {seen[k]})")
        seen[k] = lineno
        if layers and u in layers and v in layers and layers[u] == layers[v]:
            raise ParseError(lineno, f"edge {u}-{v} joins two vertices of layer {layers[u]}")
    try:
        return Graph(verts, [(u, v) for _, u, v in edges], layers or None)
    except GraphError as exc:
        raise ParseError(0, str(exc)) from None


def save_graph(g: Graph) -> str:
    out = [f"p {g.n} {g.m}"]
    if g.layers is not None:
        out += [f"l {v} {g.layer(v)}" for v in g.vertices]
    out += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def load_rotation(text: str, g: Graph) -> RotationSystem:
    order = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "r" or len(parts) < 2:
            raise ParseError(lineno, "rotation line must be 'r <v> <u-w> ...'")
        try:
            v = parse_token(parts[1])
            nbrs = []
            for tok in parts[2:]:
                a, b = parse_edge_str(tok)
                if v not in (a, b):
                    raise ValueError(f"edge {tok} is not incident to {v}")
                nbrs.append(b if a == v else a)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        if v in order:
            raise ParseError(lineno, f"second rotation for {v}")
        order[v] = tuple(nbrs)
    rot = RotationSystem(order)
    problems = rot.check(g)
    if problems:
        raise GraphError(problems[0])
    return rot


def save_rotation(rot: RotationSystem, g: Graph) -> str:
    lines = []
    for v in g.vertices:
        if v in rot.order_at:
            es = " ".join(edge_str((v, u)) for u in rot.order_at[v])
            lines.append(f"r {v} {es}".rstrip())
    return "\n".join(lines) + "\n"


# connectivity

def _connected_without(g: Graph, removed: set) -> bool:
    rest = [v for v in g.vertices if v not in removed]
    if len(rest) <= 1:
        return True
    adj = g.adj
    seen = {rest[0]}
    todo = deque([rest[0]])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(rest)


def connectivity_level(g: Graph) -> int:
    """min(3, vertex connectivity); K_n counts as n-1. 0 for disconnected or n <= 1."""
    n = g.n
    if n <= 1 or not _connected_without(g, set()):
        return 0
    for k in (1, 2):
        if n - k < 2:
            return min(3, n - 1)
        for cut in combinations(g.vertices, k):
            if not _connected_without(g, set(cut)):
                return k
    return min(3, n - 1)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and _connected_without(g, set())


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple
    above3: tuple
    above4: tuple

    @property
    def total(self) -> int:
        return sum(self.degrees)


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degree_array().tolist()
    vs = g.vertices
    return DegreeProfile(
        degrees=tuple(sorted(deg)),
        above3=tuple(vs[i] for i, d in enumerate(deg) if d > 3),
        above4=tuple(vs[i] for i, d in enumerate(deg) if d > 4),
    )
