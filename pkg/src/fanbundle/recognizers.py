"""Recognition with witness drawings.

* ``recognize_outer_triconnected``: 1-sided outer drawings of triconnected
  graphs. Such a graph has a Hamiltonian path v1..vn, the chords (v1, vn-1)
  and (vn, v2), a fan from vn to v3..vk-1 and a fan from v1 to vk..vn-2, with
  (v1, vn) forced when k is 2 or n-1 and the edges (vn, vk), (v1, vn)
  optional otherwise. Labelings are found by brute force up to n = 8 and by
  a degree case split above that.
* ``recognize_twolayer_biconnected``: spanning subgraphs of a chain of
  K_{2,2} / K_{2,3} blocks (a baby snake).
* ``recognize_twolayer_maximal``: chains of baby snakes glued at cutvertices
  plus degree-1 legs in the allowed positions.

Witness drawings are built only when ``RecognitionResult.witness`` is read, so
recognising a million-vertex graph does not pay for its drawing.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import Graph, edge_key
from ._build import GeoBuilder
from .kernels import build_csr, edge_profile, first_fan, strip_path

log = logging.getLogger(__name__)


@dataclass
class RecognitionResult:
    accepted: bool
    reason: str | None = None
    certificate: object = None
    _draw: Callable | None = field(default=None, repr=False, compare=False)
    _witness: object = field(default=None, repr=False, compare=False)

    @property
    def witness(self):
        if self._witness is None and self._draw is not None:
            self._witness = self._draw()
        return self._witness

    def summary(self) -> dict:
        out = {"accepted": self.accepted}
        if self.reason is not None:
            out["reason"] = self.reason
        cert = self.certificate
        if cert is not None and hasattr(cert, "to_dict"):
            out["certificate"] = cert.to_dict()
        return out


def _reject(reason: str, certificate=None) -> RecognitionResult:
    return RecognitionResult(False, reason, certificate)


# ---------------------------------------------------------------------------
# triconnected outer drawings

@dataclass(frozen=True)
class OuterLabeling:
    """Vertex order v1..vn and the split index k (1-based)."""
    order: tuple
    k: int

    def to_dict(self) -> dict:
        return {"order": [str(v) for v in self.order], "k": self.k}


def _required_count(n: int, k: int) -> dict:
    """Edges each condition contributes once overlaps with the path are removed."""
    return {
        "path": n - 1,
        "chords": 2,
        "fan at v_n": max(0, min(k - 1, n - 2) - 2),
        "fan at v_1": max(0, n - 2 - max(k, 3) + 1),
        "edge v_1-v_n": 1 if k in (2, n - 1) else 0,
    }


def _classify(lo, hi, n: int, k: int):
    """Boolean masks per condition for edges given as 1-based position pairs lo < hi."""
    path = hi == lo + 1
    c2 = ((lo == 1) & (hi == n - 1)) | ((lo == 2) & (hi == n))
    c3n = (hi == n) & (lo >= 3) & (lo <= k - 1) & ~path
    c31 = (lo == 1) & (hi >= k) & (hi <= n - 2) & ~path
    c4 = (lo == 1) & (hi == n) & (k in (2, n - 1))
    opt = ((lo == 1) & (hi == n)) | ((hi == n) & (lo == k))
    return {"path": path, "chords": c2, "fan at v_n": c3n, "fan at v_1": c31, "edge v_1-v_n": c4}, opt


def _missing_reason(cond: str, have: set, n: int, k: int) -> str:
    if cond == "path":
        cand = [(i, i + 1) for i in range(1, n)]
    elif cond == "chords":
        cand = [(1, n - 1), (2, n)]
    elif cond == "fan at v_n":
        cand = [(i, n) for i in range(3, k)]
    elif cond == "fan at v_1":
        cand = [(1, j) for j in range(max(k, 3), n - 1)]
    else:
        cand = [(1, n)]
    for a, b in cand:
        if (a, b) not in have:
            return f"{cond}: missing edge {_pos_name(a, n)}-{_pos_name(b, n)}"
    return f"{cond}: incomplete"


def _pos_name(p: int, n: int) -> str:
    return "v_n" if p == n else f"v_{p}"


_KINDS = ("path", "chords", "fan at v_n", "fan at v_1", "edge v_1-v_n")


def _check_positions(iu, iv, pos: np.ndarray, n: int, k: int) -> str | None:
    """None if the edges under labeling ``pos`` are exactly a characterization graph for k."""
    counts, stray = edge_profile(iu, iv, pos, n, k)
    if stray >= 0:
        a, b = sorted((int(pos[iu[stray]]), int(pos[iv[stray]])))
        return f"unexpected edge {_pos_name(a, n)}-{_pos_name(b, n)}"
    want = _required_count(n, k)
    for cond, got in zip(_KINDS, counts.tolist()):
        if got != want[cond]:
            p, q = pos[iu], pos[iv]
            have = set(zip(np.minimum(p, q).tolist(), np.maximum(p, q).tolist()))
            return _missing_reason(cond, have, n, k)
    return None


def _split_candidates(iu, iv, pos: np.ndarray, n: int) -> list:
    """The few values of k worth testing for a fixed labeling."""
    fan = first_fan(iu, iv, pos, n)
    return sorted({2, fan} if fan else {2, n - 1, n})


def _verify_order(iu, iv, order_idx: np.ndarray, n: int):
    """(k, None) for the first k that works, else (None, reason)."""
    pos = np.empty(n, dtype=np.int64)
    pos[order_idx] = np.arange(1, n + 1)
    reason = None
    for k in _split_candidates(iu, iv, pos, n):
        r = _check_positions(iu, iv, pos, n, k)
        if r is None:
            return k, None
        reason = reason or r
    return None, reason


def outer3_characterization_graph(n: int, k: int, with_vk: bool = False,
                                  with_v1vn: bool = False, seed: int | None = None) -> Graph:
    """Graph built from a labeling v1..vn and split k; vertices are 0..n-1.

    Without a seed, vertex i-1 plays v_i. With a seed the labels are shuffled.
    """
    if n < 5 or not 2 <= k <= n:
        raise ValueError("need n >= 5 and 2 <= k <= n")
    pos = np.arange(1, n + 1, dtype=np.int64)
    parts = [np.stack([pos[:-1], pos[1:]]),
             np.array([[1, 2], [n - 1, n]]),
             np.stack([np.arange(3, k, dtype=np.int64), np.full(max(0, k - 3), n)]),
             np.stack([np.ones(max(0, n - 1 - k), dtype=np.int64),
                       np.arange(k, n - 1, dtype=np.int64)])]
    extra = []
    if k in (2, n - 1) or with_v1vn:
        extra.append((1, n))
    if with_vk and k < n:
        extra.append((k, n))
    if extra:
        parts.append(np.array(extra, dtype=np.int64).T)
    pairs = np.concatenate(parts, axis=1)
    lo, hi = np.minimum(pairs[0], pairs[1]), np.maximum(pairs[0], pairs[1])
    keep = lo != hi
    code = np.unique(lo[keep] * (n + 1) + hi[keep])
    lo, hi = code // (n + 1) - 1, code % (n + 1) - 1
    label = np.arange(n)
    if seed is not None:
        label = np.random.default_rng(seed).permutation(n)
    return Graph.from_arrays(range(n), label[lo], label[hi])


def _k4_drawing(g: Graph):
    a, b, c, d = g.vertices
    bld = GeoBuilder(g, "outer", 1)
    pts = {}
    for i, v in enumerate((a, b, c, d)):
        t = math.pi / 2 - i * math.pi / 2
        pts[v] = (math.cos(t), math.sin(t))
        bld.vertex(v, pts[v])
    ba = bld.bundle("Ba", a, [(a, c)], (0.5 * pts[c][0], 0.5 * pts[c][1]))
    bb = bld.bundle("Bb", b, [(b, d)], (0.5 * pts[d][0], 0.5 * pts[d][1]))
    bld.cross(ba, bb, (0.0, 0.0))
    return bld.build()


def outer3_drawing(g: Graph, order, k: int):
    """Vertices on a circle in the given order; one bundle at each of v1, vn, crossing once."""
    order = list(order)
    n = len(order)
    v1, vn = order[0], order[-1]
    bld = GeoBuilder(g, "outer", 1)
    pts = {}
    for i, v in enumerate(order):
        t = math.pi / 2 - 2 * math.pi * i / n
        pts[v] = (math.cos(t), math.sin(t))
        bld.vertex(v, pts[v])
    has = g.has_edge
    tips_n = [order[i] for i in range(1, min(k, n - 2)) if has(vn, order[i])]
    tips_1 = [order[j] for j in range(max(k - 1, 2), n - 1) if has(v1, order[j])]
    mid_t = math.pi / 2 + math.pi / n
    r = 0.8 * math.cos(math.pi / n)  # inside the chord v1-vn
    cross = (r * math.cos(mid_t), r * math.sin(mid_t))

    def terminal(tips):
        cx = sum(pts[t][0] for t in tips) / len(tips)
        cy = sum(pts[t][1] for t in tips) / len(tips)
        return (cross[0] + 0.5 * (cx - cross[0]), cross[1] + 0.5 * (cy - cross[1]))

    bn = bld.bundle("Bn", vn, [(vn, t) for t in tips_n], terminal(tips_n))
    b1 = bld.bundle("B1", v1, [(v1, t) for t in tips_1], terminal(tips_1))
    bld.cross(bn, b1, cross)
    return bld.build()


_SMALL_N = 8


def _small_search(g: Graph):
    """Every Hamiltonian path is a candidate labeling; (order, k) or (None, reason)."""
    n = g.n
    adj = [set() for _ in range(n)]
    iu, iv = g.index_arrays()
    for a, b in zip(iu.tolist(), iv.tolist()):
        adj[a].add(b)
        adj[b].add(a)
    edges = list(zip(iu.tolist(), iv.tolist()))
    tables = _small_tables(n)
    first_path = None
    path = []
    used = [False] * n

    def dfs():
        nonlocal first_path
        if len(path) == n:
            if first_path is None:
                first_path = list(path)
            pos = [0] * n
            for i, v in enumerate(path, start=1):
                pos[v] = i
            have = set()
            for a, b in edges:
                p, q = pos[a], pos[b]
                have.add((p, q) if p < q else (q, p))
            for k, (req, allowed) in enumerate(tables, start=2):
                if req <= have and have <= allowed:
                    return (tuple(path), k)
            return None
        last = len(path) == n - 1
        for y in sorted(adj[path[-1]]):
            # v_{n-1} sees v_1 and v_n sees v_2
            if len(path) == n - 2 and path[0] not in adj[y] or last and path[1] not in adj[y]:
                continue
            if not used[y]:
                used[y] = True
                path.append(y)
                hit = dfs()
                path.pop()
                used[y] = False
                if hit:
                    return hit
        return None

    for s in range(n):
        used[s] = True
        path.append(s)
        hit = dfs()
        path.pop()
        used[s] = False
        if hit:
            return hit
    if first_path is None:
        return None, "no Hamiltonian path closing with the two chords"
    _, reason = _verify_order(iu, iv, np.asarray(first_path), n)
    return None, reason or "no labeling fits the characterization"


_TABLES: dict = {}


def _small_tables(n: int) -> list:
    """Per k = 2..n: (required position pairs, required plus optional pairs)."""
    if n not in _TABLES:
        rows = []
        for k in range(2, n + 1):
            lo, hi = np.array([(a, b) for a in range(1, n + 1)
                               for b in range(a + 1, n + 1)]).T
            masks, opt = _classify(lo, hi, n, k)
            req = np.zeros(len(lo), dtype=bool)
            for mk in masks.values():
                req |= mk
            r = frozenset(zip(lo[req].tolist(), hi[req].tolist()))
            o = frozenset(zip(lo[req | opt].tolist(), hi[req | opt].tolist()))
            rows.append((r, o))
        _TABLES[n] = rows
    return _TABLES[n]


def _endpoint_candidates(deg: np.ndarray, indptr, indices, n: int):
    """Ordered (v1, vn) pairs from the degree case split, or a rejection reason."""
    hi = np.nonzero(deg > 4)[0]
    if len(hi) > 2:
        return None, "more than two vertices of degree above 4"
    if int((deg > 3).sum()) > 3:
        return None, "more than three vertices of degree above 3"
    top = np.nonzero(deg > 3)[0].tolist()
    threes = np.nonzero(deg == 3)[0]
    pool = top + threes[:1].tolist()
    sums = [int(deg[a] + deg[b]) for i, a in enumerate(pool) for b in pool[i + 1:]]
    if not any(n <= s <= n + 3 for s in sums):
        return None, "no two degrees sum into [n, n+3]"
    if len(hi) == 2:  # two high vertices
        a, b = int(hi[0]), int(hi[1])
        return [(a, b), (b, a)], None
    if len(hi) == 0:
        return None, "no vertex of degree above 4"
    vn = int(hi[0])
    d = int(deg[vn])
    fours = np.nonzero(deg == 4)[0].tolist()
    nbr = np.zeros(n, dtype=bool)
    nbr[indices[indptr[vn]:indptr[vn + 1]]] = True
    nbr[vn] = True
    strangers = np.nonzero(~nbr)[0].tolist()
    if not fours:  # one high vertex, no degree 4
        if d == n - 1:
            other = 0 if vn != 0 else 1
            return [(other, vn)], None
        if d == n - 2:
            log.warning("lone high vertex of degree n-2 reached although the degree sum is odd")
            return None, "lone high vertex of degree n-2 with all others 3"
        if d == n - 3:
            return [(s, vn) for s in strangers], None
        return None, f"lone high vertex has degree {d}, outside [n-3, n-1]"
    if len(fours) == 1:  # one high vertex, one degree 4
        f = fours[0]
        if d in (n - 1, n - 3):
            log.warning("high vertex next to a single degree-4 vertex reached although the degree sum is odd")
            return None, f"high vertex of degree {d} with one vertex of degree 4"
        if d == n - 2:
            return [(f, vn)] + [(s, vn) for s in strangers if s != f], None
        if d == n - 4:
            return [(f, vn)], None
        return None, f"high vertex of degree {d} with one degree-4 vertex, outside [n-4, n-2]"
    if len(fours) == 2:  # one high vertex, two of degree 4
        if d < n - 4:
            return None, f"high vertex of degree {d} with two degree-4 vertices, below n-4"
        away = [f for f in fours if not nbr[f]]
        if away:
            return [(away[0], vn)], None
        return [(f, vn) for f in fours], None
    return None, "more than three vertices of degree above 3"


def recognize_outer_triconnected(g: Graph) -> RecognitionResult:
    n, m = g.n, g.m
    if n <= 3:
        return _reject("n too small")
    if n == 4:
        if m == 6:
            return RecognitionResult(True, certificate=None, _draw=lambda: _k4_drawing(g))
        return _reject("n = 4 requires K4")
    if m > 2 * n - 1:
        return _reject("edge count exceeds characterization")
    if n > _SMALL_N:
        iu, iv = g.index_arrays()
        indptr, indices = build_csr(iu, iv, n)
        deg = np.diff(indptr)
    else:
        deg = g.degree_array()
    if int(deg.min()) < 3:
        return _reject("min degree below 3")
    # interior vertices other than v_k have degree exactly 3, at every n >= 5
    if int((deg > 3).sum()) > 3:
        return _reject("more than three vertices of degree above 3")
    if int((deg > 4).sum()) > 2:
        return _reject("more than two vertices of degree above 4")
    verts = g.vertices
    if n <= _SMALL_N:
        order, k = _small_search(g)
        if order is None:
            return _reject(k)
    else:
        pairs, reason = _endpoint_candidates(deg, indptr, indices, n)
        if pairs is None:
            return _reject(reason)
        order = None
        for v1, vn in pairs:
            if not n <= int(deg[v1] + deg[vn]) <= n + 3:
                reason = reason or "degree sum of v_1 and v_n outside [n, n+3]"
                continue
            mid = strip_path(indptr, indices, v1, vn)
            if len(mid) == 0:
                reason = reason or "removing v_1 and v_n does not leave a path"
                continue
            for inner in (mid, mid[::-1]):
                cand = np.concatenate([[v1], inner, [vn]])
                kk, r = _verify_order(iu, iv, cand, n)
                if kk is not None:
                    order, k = cand, kk
                    break
                reason = reason or r
            if order is not None:
                break
        if order is None:
            return _reject(reason or "no labeling fits the characterization")
    idx = np.asarray(order)
    labeling = _LazyLabeling(verts, idx, k)
    return RecognitionResult(True, certificate=labeling,
                             _draw=lambda: outer3_drawing(g, labeling.order, k))


class _LazyLabeling(OuterLabeling):
    """OuterLabeling whose vertex tuple is materialised on first use."""

    def __init__(self, verts, idx, k):
        object.__setattr__(self, "_verts", verts)
        object.__setattr__(self, "_idx", idx)
        object.__setattr__(self, "k", k)

    @property
    def order(self):
        verts = self._verts
        return tuple(verts[i] for i in self._idx.tolist())


# ---------------------------------------------------------------------------
# two-layer snakes

@dataclass(frozen=True)
class SnakeBlock:
    """One K_{2,2} or K_{2,3} of a chain.

    ``left``/``right`` are the (layer-0, layer-1) vertex pairs shared with the
    neighbouring blocks; ``middle`` is the extra rung of a K_{2,3}.
    """
    kind: str
    poles: tuple
    rungs: tuple
    left: tuple
    right: tuple
    middle: object = None

    @property
    def vertices(self) -> tuple:
        out = list(self.left) + list(self.right)
        if self.middle is not None:
            out.append(self.middle)
        return tuple(out)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "poles": [str(v) for v in self.poles],
                "rungs": [str(v) for v in self.rungs]}


@dataclass(frozen=True)
class BabySnakeDecomposition:
    blocks: tuple

    @property
    def shared_pairs(self) -> tuple:
        return tuple(b.right for b in self.blocks[:-1])

    @property
    def first_pair(self) -> tuple:
        return self.blocks[0].left

    @property
    def last_pair(self) -> tuple:
        return self.blocks[-1].right

    def reversed(self) -> "BabySnakeDecomposition":
        out = []
        for b in reversed(self.blocks):
            out.append(SnakeBlock(b.kind, tuple(reversed(b.poles)), tuple(reversed(b.rungs)),
                                  b.right, b.left, b.middle))
        return BabySnakeDecomposition(tuple(out))

    def to_dict(self) -> dict:
        return {"blocks": [b.to_dict() for b in self.blocks],
                "shared_pairs": [[str(x) for x in p] for p in self.shared_pairs]}


@dataclass(frozen=True)
class StegosaurusDecomposition:
    snakes: tuple
    common_cutvertices: tuple
    legs: tuple   # (leg, attachment, case tag)

    def to_dict(self) -> dict:
        return {"snakes": [s.to_dict() for s in self.snakes],
                "common_cutvertices": [str(c) for c in self.common_cutvertices],
                "legs": [[str(a), str(b), t] for a, b, t in self.legs]}


def _make_block(kind, t, b, t2, b2, mid, pole_layer) -> SnakeBlock:
    if pole_layer == 0:
        rungs = (b, mid, b2) if mid is not None else (b, b2)
        return SnakeBlock(kind, (t, t2), rungs, (t, b), (t2, b2), mid)
    rungs = (t, mid, t2) if mid is not None else (t, t2)
    return SnakeBlock(kind, (b, b2), rungs, (t, b), (t2, b2), mid)


def _steps(adj, layer, t, b, rest, exact):
    """Blocks that can follow the pair (t, b) given the unplaced set ``rest``."""
    nt = adj[t] & rest          # layer-1 vertices still to place next to t
    nb = adj[b] & rest          # layer-0 vertices still to place next to b
    if not nt or not nb:
        return
    full = None
    if exact:
        def full(tops, bots):
            return all(y in adj[x] for x in tops for y in bots)
    if len(nt) == 1 and len(nb) == 1:
        (t2,), (b2,) = nb, nt
        if not exact or full((t, t2), (b, b2)):
            yield _make_block("K22", t, b, t2, b2, None, 0), t2, b2
    if len(nb) == 1:  # poles on layer 0, three rungs on layer 1
        (t2,) = nb
        for mid in sorted(nt & adj[t2], key=str):
            if not adj[mid] <= {t, t2}:
                continue
            for b2 in sorted(((nt | (adj[t2] & rest)) - {mid}), key=str):
                if layer[b2] != 1 or not nt <= {mid, b2}:
                    continue
                if exact and not full((t, t2), (b, mid, b2)):
                    continue
                yield _make_block("K23", t, b, t2, b2, mid, 0), t2, b2
    if len(nt) == 1:  # poles on layer 1, three rungs on layer 0
        (b2,) = nt
        for mid in sorted(nb & adj[b2], key=str):
            if not adj[mid] <= {b, b2}:
                continue
            for t2 in sorted(((nb | (adj[b2] & rest)) - {mid}), key=str):
                if layer[t2] != 0 or not nb <= {mid, t2}:
                    continue
                if exact and not full((t, mid, t2), (b, b2)):
                    continue
                yield _make_block("K23", t, b, t2, b2, mid, 1), t2, b2


def snake_chains(g: Graph, exact: bool = False, first=None, last=None,
                 limit: int | None = 1) -> list:
    """Chains of blocks covering ``g``.

    ``exact`` asks for every block to be complete (the graph *is* a baby snake)
    rather than merely containing the graph's edges there. ``first``/``last``
    name vertices that must sit in the first/last shared pair. At most
    ``limit`` chains are returned (None for all).
    """
    verts = g.vertices
    layer = {v: g.layer(v) for v in verts}
    adj = {v: set(g.adj[v]) for v in verts}
    everything = frozenset(verts)
    tops = [v for v in verts if layer[v] == 0]
    bots = [v for v in verts if layer[v] == 1]
    found = []
    dead = set()

    def explore(t0, b0):
        # iterative depth-first search over chain states
        start_rest = everything - {t0, b0}
        stack = [(t0, b0, start_rest, [], _steps(adj, layer, t0, b0, start_rest, exact),
                  len(found))]
        while stack:
            t, b, rest, chain, it, before = stack[-1]
            if not rest:
                stack.pop()
                if chain and (last is None or last in (t, b)):
                    found.append(BabySnakeDecomposition(tuple(chain)))
                    if limit is not None and len(found) >= limit:
                        return True
                continue
            step = next(it, None)
            if step is None:
                stack.pop()
                if len(found) == before:
                    dead.add((t, b, rest))
                continue
            blk, t2, b2 = step
            new_rest = rest - set(blk.vertices)
            if (t2, b2, new_rest) in dead:
                continue
            stack.append((t2, b2, new_rest, chain + [blk],
                          _steps(adj, layer, t2, b2, new_rest, exact), len(found)))
        return False

    for t0 in tops:
        if len(adj[t0]) > 3:
            continue
        for b0 in bots:
            if len(adj[b0]) > 3 or (first is not None and first not in (t0, b0)):
                continue
            if explore(t0, b0):
                return found
    return found


def _blocks_of(g: Graph):
    """Biconnected components (as vertex sets) and cutvertices, iteratively."""
    adj = g.adj
    index, low = {}, {}
    blocks, cuts = [], set()
    estack = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        children = 0
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= index[parent]:
                        if stack[-1][1] is not None:
                            cuts.add(parent)
                        comp = set()
                        while True:
                            e = estack.pop()
                            comp.update(e)
                            if e == (parent, v):
                                break
                        blocks.append(comp)
                continue
            if w == parent:
                continue
            if w not in index:
                if parent is None:
                    children += 1
                index[w] = low[w] = counter
                counter += 1
                estack.append((v, w))
                stack.append((w, v, iter(adj[w])))
            elif index[w] < index[v]:
                low[v] = min(low[v], index[w])
                estack.append((v, w))
        if children > 1:
            cuts.add(root)
    return blocks, cuts


def _is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return False
    blocks, _ = _blocks_of(g)
    return len(blocks) == 1 and len(blocks[0]) == g.n


def _leg_spots(j: int, count: int, lo: float, hi: float) -> float:
    return lo + (hi - lo) * (j + 1) / (count + 1)


def snake_drawing(g: Graph, snakes, legs=()):
    """Two-layer witness: blocks left to right, every K_{2,3} (and the two
    diagonals of each K_{2,2}) drawn as a pair of crossing pole bundles.

    ``legs`` is a list of (leg, attachment, placement) where placement is
    ("bundle", block ref, side), ("between", cutvertex) or ("end", side).
    """
    ys = {0: 1.0, 1: 0.0}
    x = {}
    s = 0.0
    frames = []    # (block, left x)
    for si, snake in enumerate(snakes):
        if si > 0:
            c = snake.first_pair[0] if snake.first_pair[0] in x else snake.first_pair[1]
            other_prev = next(v for v in snakes[si - 1].last_pair if v != c)
            x[other_prev] = x[other_prev] - 0.25
            s = x[c]
            other_next = next(v for v in snake.first_pair if v != c)
            x[other_next] = s + 0.25
        for blk in snake.blocks:
            for v in blk.left:
                x.setdefault(v, s)
            w = 2.0 if blk.kind == "K23" else 1.0
            if blk.middle is not None:
                x[blk.middle] = s + 1.0
            for v in blk.right:
                x[v] = s + w
            frames.append((blk, s))
            s += w
    bld = GeoBuilder(g, "twolayer", 1)
    extra = {}   # bundle anchor key -> list of leg edges to add
    lay = g.layer
    ends = {}
    for leg, a, place in legs:
        kind = place[0]
        if kind == "bundle":
            extra.setdefault((place[1], place[2]), []).append((a, leg))
        elif kind == "between":
            extra.setdefault(("between", a), []).append(leg)
        else:
            ends.setdefault((place[1], a), []).append(leg)
    for (side, a), ls in ends.items():
        base = min(x.values()) if side == "left" else max(x.values())
        for j, leg in enumerate(ls):
            x[leg] = base - 1 - 0.5 * j if side == "left" else base + 1 + 0.5 * j
    for key, ls in extra.items():
        if key[0] == "between":
            for j, leg in enumerate(ls):
                x[leg] = x[key[1]] + _leg_spots(j, len(ls), -0.2, 0.2)
    for v in g.vertices:
        if v in x:
            bld.vertex(v, (x[v], ys[lay(v)]))
    for bi, (blk, s0) in enumerate(frames):
        pl = lay(blk.poles[0])
        yp, yr = ys[pl], ys[1 - pl]
        hp = lambda f: yr + (yp - yr) * f   # height at fraction f from the rung line
        left_pole, right_pole = blk.poles
        if blk.kind == "K23":
            rl, rm, rr = blk.rungs
            tips_l, tips_r = [rm, rr], [rl, rm]
            mid_x = s0 + 1.0
        else:
            rl, rr = blk.rungs
            tips_l, tips_r = [rr], [rl]
            mid_x = s0 + 0.5
        out_l = [(left_pole, t) for t in tips_l if g.has_edge(left_pole, t)]
        out_r = [(right_pole, t) for t in tips_r if g.has_edge(right_pole, t)]
        legs_l = extra.get((bi, "left"), [])
        legs_r = extra.get((bi, "right"), [])
        span = 0.7 if blk.kind == "K23" else 0.35
        for j, (a, leg) in enumerate(legs_l):
            x[leg] = _leg_spots(j, len(legs_l), mid_x, mid_x + span)
            bld.vertex(leg, (x[leg], yr))
            out_l.append((a, leg))
        for j, (a, leg) in enumerate(legs_r):
            x[leg] = _leg_spots(j, len(legs_r), mid_x - span, mid_x)
            bld.vertex(leg, (x[leg], yr))
            out_r.append((a, leg))
        off = 0.3 if blk.kind == "K23" else 0.2
        ids = []
        if out_l:
            ids.append(bld.bundle(f"S{bi}L", left_pole, out_l, (mid_x + off, hp(0.4))))
        if out_r:
            ids.append(bld.bundle(f"S{bi}R", right_pole, out_r, (mid_x - off, hp(0.4))))
        if len(ids) == 2:
            bld.cross(ids[0], ids[1], (mid_x, hp(0.7)))
    return bld.build()


def recognize_twolayer_biconnected(g: Graph) -> RecognitionResult:
    if g.layers is None:
        return _reject("precondition: layers missing")
    if not _is_biconnected(g):
        return _reject("precondition: graph is not biconnected")
    chains = snake_chains(g)
    if not chains:
        return _reject("not a spanning subgraph of a baby snake")
    dec = chains[0]
    return RecognitionResult(True, certificate=dec, _draw=lambda: snake_drawing(g, [dec]))


def _end_block(snake, v):
    """The end block containing v, with 'left'/'right', or (None, None)."""
    if v in snake.first_pair:
        return snake.blocks[0], "left"
    if v in snake.last_pair:
        return snake.blocks[-1], "right"
    return None, None


def _pole_spot(snake, offset, v):
    """(global block index, side) of a K_{2,3} in which v is a pole, or None."""
    for i, blk in enumerate(snake.blocks):
        if blk.kind == "K23" and v in blk.poles:
            return offset + i, "left" if blk.poles[0] == v else "right"
    return None


def _interior_case(snake, v) -> bool:
    """v joins two consecutive K_{2,3} blocks and is a pole of both."""
    for a, b in zip(snake.blocks, snake.blocks[1:]):
        if v in a.right and a.kind == b.kind == "K23" and v in a.poles and v in b.poles:
            return True
    return False


_MAX_DECOMPOSITIONS = 64


def recognize_twolayer_maximal(g: Graph) -> RecognitionResult:
    if g.layers is None:
        return _reject("precondition: layers missing")
    deg = {v: len(g.adj[v]) for v in g.vertices}
    legs = [v for v in g.vertices if deg[v] == 1]
    leg_set = set(legs)
    attach = {v: g.adj[v][0] for v in legs}
    if any(a in leg_set for a in attach.values()):
        return _reject("isolated edge")
    if any(d == 0 for d in deg.values()):
        return _reject("isolated vertex")
    body = g.subgraph([v for v in g.vertices if v not in leg_set])
    if body.n == 0:
        return _reject("no snake after removing legs")
    blocks, cuts = _blocks_of(body)
    if len(blocks) == 0 or sum(len(b) for b in blocks) - len(blocks) + 1 != body.n:
        return _reject("body is disconnected")
    for b in blocks:
        if len(b) < 4:
            return _reject("body has a bridge")
    where = {}
    for i, b in enumerate(blocks):
        for v in b & cuts:
            where.setdefault(v, []).append(i)
    for v, bs in where.items():
        if len(bs) != 2:
            return _reject(f"cutvertex {v} lies in {len(bs)} snakes")
    # blocks must form a path
    nbrs = {i: [] for i in range(len(blocks))}
    for v, (i, j) in where.items():
        nbrs[i].append((j, v))
        nbrs[j].append((i, v))
    if any(len(x) > 2 for x in nbrs.values()):
        return _reject("snakes do not form a chain")
    start = next((i for i, x in nbrs.items() if len(x) <= 1), None)
    if start is None:
        return _reject("snakes do not form a chain")
    seq, joints = [start], []
    prev = None
    while True:
        nxt = [(j, v) for j, v in nbrs[seq[-1]] if j != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0][0])
        joints.append(nxt[0][1])
    if len(seq) != len(blocks):
        return _reject("snakes do not form a chain")
    # per-snake decompositions honouring the cutvertex positions
    options = []
    for si, bi in enumerate(seq):
        sub = body.subgraph(blocks[bi])
        first = joints[si - 1] if si > 0 else None
        last = joints[si] if si < len(joints) else None
        decs = snake_chains(sub, exact=True, first=first, last=last, limit=_MAX_DECOMPOSITIONS)
        if not decs:
            return _reject(f"snake {si + 1} is not a baby snake")
        options.append(decs)
    cutset = set(joints)
    legs_at = {}
    for leg in legs:
        legs_at.setdefault(attach[leg], []).append(leg)
    # choose one decomposition per snake, left to right
    chosen = _choose(options, joints, legs_at, cutset)
    if chosen is None:
        bad = _first_bad_leg(options, joints, legs_at, cutset)
        return _reject(f"leg at {bad} is not a big leg")
    snakes, tags = chosen
    offsets = []
    total = 0
    for s in snakes:
        offsets.append(total)
        total += len(s.blocks)
    placements = []
    leg_rows = []
    for a, ls in legs_at.items():
        tag = tags[a]
        si = next(i for i, s in enumerate(snakes) if a in {v for b in s.blocks for v in b.vertices})
        spot = None
        for sj in ([si, si + 1] if a in cutset else [si]):
            spot = _pole_spot(snakes[sj], offsets[sj], a)
            if spot is not None:
                break
        for leg in ls:
            leg_rows.append((leg, a, tag))
            if spot is not None:
                placements.append((leg, a, ("bundle",) + spot))
            elif a in cutset:
                placements.append((leg, a, ("between",)))
            else:
                side = "left" if a in snakes[0].first_pair else "right"
                placements.append((leg, a, ("end", side)))
    dec = StegosaurusDecomposition(tuple(snakes), tuple(joints), tuple(sorted(leg_rows, key=str)))
    return RecognitionResult(True, certificate=dec,
                             _draw=lambda: snake_drawing(g, list(snakes), placements))


def _leg_case(snakes_here, v, cutset, is_first, is_last):
    """Big-leg tag for attachment v in a fixed decomposition, or None."""
    if v in cutset:
        left, right = snakes_here
        a, _ = _end_block(left, v)
        b, _ = _end_block(right, v)
        if a is not None and b is not None and a.kind == b.kind == "K23":
            return "cutvertex"
        return None
    (snake,) = snakes_here
    if _interior_case(snake, v):
        return "shared-pole"
    blk, side = _end_block(snake, v)
    if blk is not None and blk.kind == "K23":
        outer_end = is_first if side == "left" else is_last
        if v in blk.poles or outer_end:
            return "end-pole"
    return None


def _choose(options, joints, legs_at, cutset):
    """Depth-first choice of decompositions so every leg gets a tag."""
    r = len(options)
    members = []
    for decs in options:
        members.append({v for b in decs[0].blocks for v in b.vertices})

    def tags_for(si, dec, prev_dec):
        tags = {}
        for v in legs_at:
            if v in members[si] and v not in cutset:
                t = _leg_case((dec,), v, cutset, si == 0, si == r - 1)
                if t is None:
                    return None
                tags[v] = t
        if si > 0 and joints[si - 1] in legs_at:
            t = _leg_case((prev_dec, dec), joints[si - 1], cutset, False, False)
            if t is None:
                return None
            tags[joints[si - 1]] = t
        return tags

    def rec(si, prev_dec, acc, tags):
        if si == r:
            return acc, tags
        for dec in options[si]:
            t = tags_for(si, dec, prev_dec)
            if t is None:
                continue
            hit = rec(si + 1, dec, acc + [dec], {**tags, **t})
            if hit is not None:
                return hit
        return None

    return rec(0, None, [], {})


def _first_bad_leg(options, joints, legs_at, cutset):
    for v in sorted(legs_at, key=str):
        ok = False
        for si, decs in enumerate(options):
            for dec in decs:
                members = {x for b in dec.blocks for x in b.vertices}
                if v not in members:
                    continue
                if v in cutset:
                    ok = True   # judged jointly; report only if nothing else fails
                elif _leg_case((dec,), v, cutset, si == 0, si == len(options) - 1):
                    ok = True
        if not ok:
            return v
    return sorted(legs_at, key=str)[0]
