"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import itertools
import statistics
import time

import numpy as np

from fanbundle.bounds import density_violation
from fanbundle.core import Graph
from fanbundle.drawing import validate
from fanbundle.generators import (FAMILIES, FAMILY_MODEL, expected_edges, gen_d12, generate,
                                  parameter_for_n)
from fanbundle.k3n import build_k3_2kp1, build_k3_4kp2, count_crossings
from fanbundle.oracles import babysnake_oracle, enumerate_labeled_graphs, outer3_oracle
from fanbundle.recognizers import (_is_biconnected, outer3_characterization_graph,
                                   recognize_outer_triconnected, recognize_twolayer_biconnected,
                                   recognize_twolayer_maximal)
from fanbundle.reduction import ThreePartitionInstance, copy_consecutiveness_problems, reduce
from conftest import CRITERIA, complete_bipartite, complete_graph, snake_graph

MAX_N = 100


def record(num, ok, detail):
    CRITERIA[num] = (ok, detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def family_parameters(family):
    """Every parameter value the family's contract admits with n up to MAX_N."""
    if family == "d12":
        return [None]
    if family == "onesidedGeneral":
        return list(range(0, (MAX_N - 5) // 3 + 1))
    if family in ("onesidedOuter", "bn"):
        return list(range(1, (MAX_N - 2) // 3 + 1))
    if family in ("waterlily", "doubleWaterlily"):
        return list(range(9, MAX_N + 1))
    return [n for n in range(10, MAX_N + 1) if parameter_for_n(family, n) is not None]


def vertex_count(family, value):
    return {"onesidedGeneral": lambda k: 5 + 3 * k, "onesidedOuter": lambda q: 3 * q + 2,
            "bn": lambda k: 3 * k + 2, "d12": lambda _: 20}.get(family, lambda n: n)(value)


# 1

def test_criterion_1_density_table():
    checked, failures, slow = 0, [], []
    for family in FAMILIES:
        if family == "d12":
            continue
        sides, variant = FAMILY_MODEL[family]
        for value in family_parameters(family):
            n = vertex_count(family, value)
            t = time.perf_counter()
            try:
                inst = generate(family, value)
            except ValueError as exc:
                failures.append(f"{family}({value}): {exc}")
                continue
            ok = (inst.graph.n == n and inst.graph.m == expected_edges(family, n)
                  and validate(inst.drawing, sides, variant).valid)
            if time.perf_counter() - t > 1.0:
                slow.append(f"{family}({value})")
            checked += 1
            if not ok:
                failures.append(f"{family}({value}) wrong count or invalid drawing")
    detail = f"{checked} instances exact and valid"
    if failures:
        detail += f"; unsupported: {'; '.join(failures)}"
    if slow:
        detail += f"; over 1 s: {', '.join(slow)}"
    record(1, not failures and not slow, detail)


# 2

def test_criterion_2_d12():
    g = gen_d12().graph
    simple = len(g.edge_set) == g.m and all(u != v for u, v in g.edges)
    record(2, g.m == 90 == 5 * 20 - 10 and g.n == 20 and simple,
           f"n={g.n}, m={g.m}, simple={simple}")


# 3

FROZEN_PAIRS = {0: 0, 1: 3, 2: 10, 3: 21, 4: 36, 5: 55, 6: 78}


def test_criterion_3_k3n_crossings():
    t = time.perf_counter()
    bad = []
    for k in range(7):
        for build, factor in ((build_k3_2kp1, 1), (build_k3_4kp2, 2)):
            cc = count_crossings(build(k))
            max_ok = cc.max_per_edge == k
            total_ok = cc.total == factor * FROZEN_PAIRS[k] == factor * (2 * k * k + k)
            if not (max_ok and total_ok):
                bad.append(f"{build.__name__}({k}): max {cc.max_per_edge}, total {cc.total}")
    elapsed = time.perf_counter() - t
    record(3, not bad and elapsed < 5,
           f"k=0..6 both constructions, {elapsed:.2f} s" + (f"; {bad}" if bad else ""))


# 4

def layered_biconnected(n):
    for p in range(2, n - 1):
        q = n - p
        slots = [(i, p + j) for i in range(p) for j in range(q)]
        lay = {v: 0 if v < p else 1 for v in range(n)}
        for mask in range(1 << len(slots)):
            if bin(mask).count("1") < n:
                continue
            g = Graph(range(n), [slots[i] for i in range(len(slots)) if mask >> i & 1], lay)
            if _is_biconnected(g):
                yield g


def random_graphs(n, count, seed):
    rng = np.random.default_rng(seed)
    slots = list(itertools.combinations(range(n), 2))
    for _ in range(count):
        p = rng.uniform(0.25, 0.65)
        keep = rng.random(len(slots)) < p
        yield Graph(range(n), [s for s, kp in zip(slots, keep) if kp])


def test_criterion_4_oracle_agreement():
    parts, disagreements = [], 0
    t = time.perf_counter()
    for n in (5, 6, 7):
        total = acc = 0
        for g in enumerate_labeled_graphs(n):
            a = recognize_outer_triconnected(g).accepted
            o = outer3_oracle(g)
            total += 1
            acc += o
            disagreements += a != o
        parts.append(f"outer n={n}: {total} graphs, {acc} accepted")
    total = acc = 0
    for g in random_graphs(8, 10_000, seed=8):
        a = recognize_outer_triconnected(g).accepted
        o = outer3_oracle(g)
        total += 1
        acc += o
        disagreements += a != o
    parts.append(f"outer n=8 random: {total} graphs, {acc} accepted")
    total = acc = 0
    for n in range(4, 9):
        for g in layered_biconnected(n):
            a = recognize_twolayer_biconnected(g).accepted
            o = babysnake_oracle(g)
            total += 1
            acc += o
            disagreements += a != o
    parts.append(f"snake n<=8: {total} graphs, {acc} accepted")
    record(4, disagreements == 0,
           f"{disagreements} disagreements; {'; '.join(parts)}; {time.perf_counter() - t:.0f} s")


# 5

def witness_corpus():
    """(graph, result, sides, variant) for every accepted graph in the test corpora."""
    for n in (5, 6):
        for g in enumerate_labeled_graphs(n):
            res = recognize_outer_triconnected(g)
            if res.accepted:
                yield g, res, 1, "outer"
    yield complete_graph(4), recognize_outer_triconnected(complete_graph(4)), 1, "outer"
    for n in (9, 10, 17, 40):
        for k in range(2, n + 1):
            for vk, ends in itertools.product((False, True), repeat=2):
                g = outer3_characterization_graph(n, k, vk, ends, seed=k)
                res = recognize_outer_triconnected(g)
                if res.accepted:
                    yield g, res, 1, "outer"
    for n in range(4, 8):
        for g in layered_biconnected(n):
            res = recognize_twolayer_biconnected(g)
            if res.accepted:
                yield g, res, 1, "twolayer"
    shapes = [[(1, 2)], [(2, 1)], [(1, 1)], [(1, 2), (1, 1), (1, 2)], [(1, 2), (2, 1), (1, 1)]]
    for shape in shapes:
        g = snake_graph([(shape, 0)])
        yield g, recognize_twolayer_biconnected(g), 1, "twolayer"
    maximal = [
        ([([(1, 2)], 0), ([(1, 2)], 0)], []),
        ([([(1, 2)], 0), ([(1, 2)], 0)], [("L", "s0t1")]),
        ([([(1, 2), (1, 2)], 0)], [("L", "s0t1")]),
        ([([(1, 2), (1, 2)], 0)], [("L", "s0t0"), ("M", "s0b0")]),
        ([([(1, 2), (1, 2)], 0)], [("M", "s0b4")]),
        ([([(2, 1)], 0), ([(2, 1)], 0)], [("L", "s0t2"), ("L2", "s0t2")]),
        ([([(1, 2), (1, 1)], 0), ([(2, 1)], 1), ([(1, 2)], 0)], []),
    ]
    for snakes, legs in maximal:
        g = snake_graph(snakes, legs)
        res = recognize_twolayer_maximal(g)
        if res.accepted:
            yield g, res, 1, "twolayer"


def test_criterion_5_witness_soundness():
    total, bad = 0, []
    for g, res, sides, variant in witness_corpus():
        total += 1
        d = res.witness
        ok = validate(d, sides, variant).valid and d.graph.same_as(g)
        if not ok:
            bad.append(str(g.edges)[:80])
    record(5, total > 0 and not bad, f"{total - len(bad)}/{total} witnesses valid and equal to input")


# 6

def test_criterion_6_small_cases():
    got = {
        "K23": recognize_twolayer_biconnected(complete_bipartite(2, 3)).accepted,
        "K24": recognize_twolayer_biconnected(complete_bipartite(2, 4)).accepted,
        "K4": recognize_outer_triconnected(complete_graph(4)).accepted,
        "K5": recognize_outer_triconnected(complete_graph(5)).accepted,
    }
    want = {"K23": True, "K24": False, "K4": True, "K5": False}
    record(6, got == want, ", ".join(f"{k} {'accepted' if v else 'rejected'}" for k, v in got.items()))


# 7

def test_criterion_7_upper_bounds():
    checked, bad = 0, []
    for family in FAMILIES:
        if family == "d12":
            continue
        for value in family_parameters(family):
            try:
                d = generate(family, value).drawing
            except ValueError:
                continue
            if validate(d).valid:
                checked += 1
                msg = density_violation(d)
                if msg:
                    bad.append(msg)
    for g, res, sides, variant in witness_corpus():
        d = res.witness
        if validate(d, sides, variant).valid:
            checked += 1
            msg = density_violation(d)
            if msg:
                bad.append(msg)
    record(7, not bad, f"{checked} valid drawings, {len(bad)} above their class bound")


# 8

def test_criterion_8_reduction():
    A, B = (2, 2, 2, 3, 3, 3, 4, 5, 6), 10
    inst = ThreePartitionInstance(A, B)
    m = 3
    problems, times = [], {}
    for K in (4, 100):
        for model in (1, 2):
            t = time.perf_counter()
            r = reduce(inst, K=K, model=model)
            times[(K, model)] = time.perf_counter() - t
            s = r.stats
            want = {
                "beamVertices": 4 * (3 * m * K + 1) + 3,
                "wallVertices": 11,
                "obstacleVertices": 4 * (K - 1) + 3,
                "obstacleCount": 3 * m * (2 * m - 2),
                "columnCount": 3 * m,
                "transversalPathLength": (3 * m - 3) * K + B,
                "centralCellEdges": [model * a for a in A],
                "otherCellEdges": model * K,
            }
            for key, val in want.items():
                if s[key] != val:
                    problems.append(f"K={K} model={model} {key}: {s[key]} != {val}")
            if (s["vertices"], s["edges"]) != (s["closedFormVertices"], s["closedFormEdges"]):
                problems.append(f"K={K} model={model}: totals differ from closed form")
            if r.rotation.check(r.graph):
                problems.append(f"K={K} model={model}: invalid rotation")
            if copy_consecutiveness_problems(r, limit=1):
                problems.append(f"K={K} model={model}: barrier copy split around a vertex")
    slow = max(times[(100, 1)], times[(100, 2)])
    if slow >= 10:
        problems.append(f"K=100 took {slow:.1f} s")
    record(8, not problems,
           f"K=4 and K=100, both models; K=100 built in {slow:.2f} s" + (f"; {problems}" if problems else ""))


# 9

def median_time(g, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        res = recognize_outer_triconnected(g)
        runs.append(time.perf_counter() - t)
        assert res.accepted
    return statistics.median(runs)


def test_criterion_9_performance():
    small = outer3_characterization_graph(10 ** 5, 10 ** 5 // 3)
    large = outer3_characterization_graph(10 ** 6, 10 ** 6 // 3)
    t_small = median_time(small, 5)
    t_large = median_time(large, 3)
    ratio = t_large / t_small
    record(9, t_large < 2 and ratio <= 15,
           f"n=1e6 {t_large:.3f} s, n=1e5 {t_small:.4f} s, ratio {ratio:.1f}")
