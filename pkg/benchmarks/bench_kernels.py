"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [n ...]
"""

import statistics
import sys
import time

import numpy as np

from fanbundle import _kernels_py as py_k
from fanbundle.recognizers import outer3_characterization_graph

try:
    from fanbundle import _kernels as cy_k
except ImportError:
    cy_k = None


def edge_arrays(n):
    g = outer3_characterization_graph(n, n // 2)
    idx = g.index
    iu = np.fromiter((idx[u] for u, _ in g.edges), dtype=np.int64, count=g.m)
    iv = np.fromiter((idx[v] for _, v in g.edges), dtype=np.int64, count=g.m)
    return iu, iv, g.n


def timed(fn, *args, repeat=5):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        runs.append(time.perf_counter() - t)
    return statistics.median(runs), out


def bench(mod, iu, iv, n):
    t_csr, (indptr, indices) = timed(mod.build_csr, iu, iv, n)
    # strip the two hub vertices of the characterization graph: positions 0 and n-1
    t_strip, path = timed(mod.strip_path, indptr, indices, 0, n - 1)
    return t_csr, t_strip, path


def main(sizes):
    print(f"{'n':>9} {'kernel':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in sizes:
        iu, iv, n = edge_arrays(n)
        py = bench(py_k, iu, iv, n)
        cy = bench(cy_k, iu, iv, n) if cy_k else None
        if cy is not None and not np.array_equal(py[2], cy[2]):
            sys.exit(f"backends disagree at n={n}")
        for name, i in (("build_csr", 0), ("strip_path", 1)):
            c = f"{cy[i]:10.4f}" if cy else f"{'n/a':>10}"
            s = f"{py[i] / cy[i]:8.1f}" if cy and cy[i] > 0 else f"{'n/a':>8}"
            print(f"{n:>9} {name:>10} {py[i]:10.4f} {c} {s}")


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [10**4, 10**5, 10**6])
