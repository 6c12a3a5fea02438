import itertools

import pytest

from fanbundle.core import Graph

# criterion number -> (passed, detail); filled by test_acceptance.py
CRITERIA: dict = {}


def complete_graph(n, start=1):
    vs = list(range(start, start + n))
    return Graph(vs, list(itertools.combinations(vs, 2)))


def complete_bipartite(p, q):
    tops = [f"t{i}" for i in range(p)]
    bots = [f"b{j}" for j in range(q)]
    lay = {**{v: 0 for v in tops}, **{v: 1 for v in bots}}
    return Graph(tops + bots, [(a, b) for a in tops for b in bots], lay)


def snake_graph(snakes, legs=()):
    """Layered chain of snakes.

    Each snake is (shape, join_layer); a shape lists blocks as (top span,
    bottom span), (1, 1) for K22, (1, 2) or (2, 1) for K23. Consecutive
    snakes share the last vertex of the earlier one on `join_layer` of the
    later one. Legs are (name, attachment) pairs.
    """
    edges, lay = set(), {}
    prev_last = None
    for si, (shape, join_layer) in enumerate(snakes):
        tops, bots = {}, {}

        def tv(i, si=si, tops=tops):
            return tops.setdefault(i, f"s{si}t{i}")

        def bv(j, si=si, bots=bots):
            return bots.setdefault(j, f"s{si}b{j}")

        if prev_last is not None:
            (tops if join_layer == 0 else bots)[0] = prev_last
        x = y = 0
        for dt, db in shape:
            for i in range(x, x + dt + 1):
                for j in range(y, y + db + 1):
                    edges.add((tv(i), bv(j)))
            x += dt
            y += db
        for v in tops.values():
            lay[v] = 0
        for v in bots.values():
            lay[v] = 1
        nxt = snakes[si + 1][1] if si + 1 < len(snakes) else 0
        prev_last = tops[x] if nxt == 0 else bots[y]
    for name, at in legs:
        edges.add((at, name))
        lay[name] = 1 - lay[at]
    return Graph(sorted(lay), sorted(edges), lay)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, detail = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def k4():
    return complete_graph(4)
