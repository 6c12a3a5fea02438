"""3-Partition hardness instances: a graph plus a fixed rotation system.

Layout, all coordinates only used to derive the rotation system:

* two horizontal beams (top and bottom) and two vertical walls form a closed
  frame; each is a chain of barrier copies, and neighbouring members share a
  single corner vertex;
* between the beams sit 3m columns; column j owns the K slots at x = 1+jK+s;
* a column is cut into 2m-1 cells by 2m-2 obstacles (barrier chains of K-1
  copies); the central cell of column i carries a_i vertical edges, the
  others K; the 2-sided model doubles every cell;
* m transversal paths run from the middle inner vertex of the left wall to
  the middle inner vertex of the right wall.

A barrier copy with left side (a, f, e), right side (b, c, d) and centre g
has the 6-cycle a-b-c-d-e-f, the edges c-g, f-g and {c, f, g} x {a, b, d, e}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .core import Graph, GraphError, RotationSystem, edge_key

CONVENTIONS = (
    "frame corners: wall inner end vertices are the beams' interior-side end vertices; "
    "column j anchors at beam slots 1+jK..(j+1)K; origin and destination are the middle "
    "inner vertices of the left and right wall; cells needing more than K edges "
    "(1-sided) or 2K edges (2-sided) share slots"
)


class ReductionError(ValueError):
    """The 3-Partition instance or the scale parameter is unusable."""


@dataclass(frozen=True)
class ThreePartitionInstance:
    A: tuple
    B: int
    m: int = 0

    def __post_init__(self):
        A = tuple(int(a) for a in self.A)
        object.__setattr__(self, "A", A)
        m = self.m or len(A) // 3
        object.__setattr__(self, "m", m)
        if self.B <= 0:
            raise ReductionError("B must be positive")
        if not A or len(A) != 3 * m:
            raise ReductionError(f"|A| = {len(A)} is not 3m for m = {m}")
        if any(a <= 0 for a in A):
            raise ReductionError("elements of A must be positive")
        if sum(A) != m * self.B:
            raise ReductionError(f"sum of A is {sum(A)}, expected mB = {m * self.B}")

    def out_of_window(self) -> list:
        """Elements outside the open interval (B/4, B/2)."""
        return [a for a in self.A if not (self.B < 4 * a < 2 * self.B)]


def solve_3partition(inst: ThreePartitionInstance):
    """First partition in lexicographic triple order, or None. Needs m <= 5."""
    if inst.m > 5:
        raise ReductionError("solve_3partition supports m <= 5")
    vals = sorted(inst.A)

    def rec(rest):
        if not rest:
            return []
        head, tail = rest[0], rest[1:]
        seen = set()
        for i, j in combinations(range(len(tail)), 2):
            trip = (head, tail[i], tail[j])
            if trip in seen or sum(trip) != inst.B:
                continue
            seen.add(trip)
            left = [x for k, x in enumerate(tail) if k not in (i, j)]
            sub = rec(left)
            if sub is not None:
                return [trip] + sub
        return None

    found = rec(vals)
    return None if found is None else tuple(found)


@dataclass
class ReductionInstance:
    graph: Graph
    rotation: RotationSystem
    K: int
    stats: dict
    model: int
    expected_yes: bool | None
    warnings: list = field(default_factory=list)
    copies: list = field(default_factory=list, repr=False)
    crossed_pairs: list = field(default_factory=list, repr=False)

    def stats_json(self) -> dict:
        out = dict(self.stats)
        out["model"] = f"{self.model}-sided"
        out["K"] = self.K
        out["expectedYes"] = self.expected_yes
        out["warnings"] = list(self.warnings)
        out["conventions"] = CONVENTIONS
        return out


class _Builder:
    def __init__(self):
        self.pos: dict = {}
        self.edges: set = set()
        self.copies: list = []

    def vertex(self, name, x, y):
        if name not in self.pos:
            self.pos[name] = (float(x), float(y))
        return name

    def edge(self, u, v):
        e = edge_key(u, v)
        self.edges.add(e)
        return e

    def chain(self, tops, mids, bots, centres):
        """Glue len(centres) barrier copies over side triples i and i+1."""
        for i, g in enumerate(centres):
            a, f, e = tops[i], mids[i], bots[i]
            b, c, d = tops[i + 1], mids[i + 1], bots[i + 1]
            es = [self.edge(a, b), self.edge(b, c), self.edge(c, d),
                  self.edge(d, e), self.edge(e, f), self.edge(f, a),
                  self.edge(c, g), self.edge(f, g)]
            es += [self.edge(x, y) for x in (c, f, g) for y in (a, b, d, e)]
            self.copies.append(frozenset(es))

    def hchain(self, tag, x0, count, y_top, y_bot):
        """Horizontal chain of `count` copies; returns (top row, bottom row)."""
        xs = [x0 + i for i in range(count + 1)]
        ym = (y_top + y_bot) / 2
        top = [self.vertex(f"{tag}u{i}", x, y_top) for i, x in enumerate(xs)]
        mid = [self.vertex(f"{tag}m{i}", x, ym) for i, x in enumerate(xs)]
        bot = [self.vertex(f"{tag}d{i}", x, y_bot) for i, x in enumerate(xs)]
        cen = [self.vertex(f"{tag}g{i}", x0 + i + 0.5, ym) for i in range(count)]
        self.chain(top, mid, bot, cen)
        return top, bot


def _cell_pairs(count: int, K: int, crossed: bool):
    """Slot pairs (upper, lower) for a cell, plus which consecutive pairs cross."""
    xs = [q for d in range(1, K) for j in range(K - d) for q in ((j, j + d), (j + d, j))]
    straight = [(i, i) for i in range(K)]
    pool = xs + straight if crossed else straight + xs
    if count > len(pool):
        raise ReductionError(f"a cell needs {count} edges but only {K * K} slot pairs exist")
    chosen = pool[:count]
    pairs_crossing = []
    if crossed:
        for t in range(0, min(count, len(xs)) - 1, 2):
            pairs_crossing.append((chosen[t], chosen[t + 1]))
    return chosen, pairs_crossing


def reduce(inst: ThreePartitionInstance, K: int | None = None, model: int = 1) -> ReductionInstance:
    """Build the graph and rotation system for `inst` at scale K (default B^2)."""
    if model not in (1, 2):
        raise ReductionError("model must be 1 or 2")
    m, B = inst.m, inst.B
    K = B * B if K is None else int(K)
    if K < 2:
        raise ReductionError("K must be at least 2")
    warnings = []
    if K < B * B:
        warnings.append(f"K = {K} < B^2 = {B * B}: hardness argument's parameter not met")
    bad = inst.out_of_window()
    if bad:
        warnings.append(f"elements {sorted(set(bad))} lie outside (B/4, B/2)")

    bld = _Builder()
    ncols = 3 * m
    p = ncols * K + 1
    ncells = 2 * m - 1
    y_top = float(4 * m - 3)      # interior side of the top beam
    # beams
    top_u, top_d = bld.hchain("T", 0, p, y_top + 1, y_top)
    bot_u, bot_d = bld.hchain("B", 0, p, 0.0, -1.0)

    # walls: three levels (outer, mid, inner), the inner end levels are beam corners
    def wall(tag, sign, corner_top, corner_bot):
        xe = 0.0 if sign < 0 else float(p)
        levels = []
        for lvl, (y, shift) in enumerate(((0.0, 0.0), (y_top / 2, 0.6), (y_top, 0.0))):
            xi = xe + sign * shift
            inner = corner_bot if lvl == 0 else corner_top if lvl == 2 else bld.vertex(f"{tag}i{lvl}", xi, y)
            mid = bld.vertex(f"{tag}m{lvl}", xi + sign * 0.5, y)
            outer = bld.vertex(f"{tag}o{lvl}", xi + sign * 1.0, y)
            levels.append((outer, mid, inner))
        cen = []
        for lvl in range(2):
            pts = [bld.pos[v] for v in levels[lvl] + levels[lvl + 1]]
            cx = sum(q[0] for q in pts) / 6
            cy = sum(q[1] for q in pts) / 6
            cen.append(bld.vertex(f"{tag}g{lvl}", cx, cy))
        bld.chain([lv[0] for lv in levels], [lv[1] for lv in levels], [lv[2] for lv in levels], cen)
        return levels[1][2]

    origin = wall("L", -1, top_d[0], bot_u[0])
    dest = wall("R", 1, top_d[p], bot_u[p])
    n_copies_frame = len(bld.copies)

    # columns
    central = m - 1
    cell_sizes = {}
    crossed_pairs = []
    obstacle_vertices = 4 * (K - 1) + 3
    crowded = 0
    for j in range(ncols):
        x0 = 1 + j * K
        above = top_d[x0:x0 + K]
        for c in range(ncells):
            if c < ncells - 1:
                y_hi = y_top - 1 - 2 * c
                o_top, o_bot = bld.hchain(f"O{j}_{c}_", x0, K - 1, y_hi, y_hi - 1)
                below = o_top
            else:
                o_bot = None
                below = bot_u[x0:x0 + K]
            want = inst.A[j] if c == central and j < len(inst.A) else K
            want *= model
            chosen, crossing = _cell_pairs(want, K, model == 2)
            if want > K * model:
                crowded += 1
            cell_sizes[(j, c)] = len(chosen)
            for s, t in chosen:
                bld.edge(above[s], below[t])
            crossed_pairs += [tuple(edge_key(above[s], below[t]) for s, t in pr) for pr in crossing]
            if o_bot is not None:
                above = o_bot
    if crowded:
        warnings.append(f"{crowded} cells share slots because they need more than {K * model} edges")

    # transversal paths
    L = (ncols - 3) * K + B
    oy = bld.pos[origin][1]
    ox, dx = bld.pos[origin][0], bld.pos[dest][0]
    for i in range(m):
        y = oy + 0.4 * ((m - 1) / 2 - i) / max(m, 1)
        prev = origin
        for s in range(1, L):
            v = bld.vertex(f"P{i}_{s}", ox + (dx - ox) * s / L, y)
            bld.edge(prev, v)
            prev = v
        bld.edge(prev, dest)

    verts = list(bld.pos)
    try:
        g = Graph(verts, sorted(bld.edges, key=lambda e: (str(e[0]), str(e[1]))))
    except GraphError as exc:
        raise ReductionError(str(exc)) from None
    rot = _rotation_from_positions(g, bld.pos)

    beam_vertices = 4 * p + 3
    n_obstacles = ncols * (ncells - 1)
    closed_n = 2 * beam_vertices + 2 * 11 - 4 + n_obstacles * obstacle_vertices + m * (L - 1)
    closed_m = (2 * (14 * p + 2) + 2 * 30 + n_obstacles * (14 * (K - 1) + 2)
                + sum(cell_sizes.values()) + m * L)
    centrals = [cell_sizes[(j, central)] for j in range(ncols)]
    stats = {
        "m": m, "B": B, "A": list(inst.A),
        "beamVertices": beam_vertices,
        "wallVertices": 11,
        "obstacleVertices": obstacle_vertices if n_obstacles else 0,
        "obstacleCount": n_obstacles,
        "columnCount": ncols,
        "cellsPerColumn": ncells,
        "transversalPathLength": L,
        "transversalPaths": m,
        "centralCellEdges": centrals,
        "otherCellEdges": K * model,
        "barrierCopies": len(bld.copies),
        "frameCopies": n_copies_frame,
        "vertices": g.n, "edges": g.m,
        "closedFormVertices": closed_n, "closedFormEdges": closed_m,
        "origin": origin, "destination": dest,
    }
    part = solve_3partition(inst) if m <= 5 else None
    expected = None if m > 5 else part is not None
    return ReductionInstance(g, rot, K, stats, model, expected, warnings,
                             bld.copies, crossed_pairs)


def _rotation_from_positions(g: Graph, pos: dict) -> RotationSystem:
    """Clockwise order of neighbours by direction angle."""
    order = {}
    for v in g.vertices:
        x, y = pos[v]
        nb = list(g.adj[v])
        nb.sort(key=lambda u: -math.atan2(pos[u][1] - y, pos[u][0] - x))
        order[v] = tuple(nb)
    return RotationSystem(order)


def copy_consecutiveness_problems(inst: ReductionInstance, limit: int = 10) -> list:
    """Vertices where some barrier copy's edges are not a contiguous block."""
    problems = []
    by_vertex: dict = {}
    for idx, es in enumerate(inst.copies):
        for u, v in es:
            by_vertex.setdefault(u, set()).add(idx)
            by_vertex.setdefault(v, set()).add(idx)
    for v, idxs in by_vertex.items():
        ring = inst.rotation.order_at[v]
        d = len(ring)
        for idx in idxs:
            mark = [edge_key(v, u) in inst.copies[idx] for u in ring]
            runs = sum(1 for i in range(d) if mark[i] and not mark[i - 1])
            if runs > 1 or (runs == 0 and not all(mark)):
                problems.append(f"copy {idx} is split around {v}")
                if len(problems) >= limit:
                    return problems
    return problems
