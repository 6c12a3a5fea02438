"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Both modules expose the same functions with the same results; ``kernels``
picks the compiled one when it is importable.
"""

from __future__ import annotations

import numpy as np


def build_csr(iu, iv, n: int):
    """Adjacency in compressed form: neighbours of x are indices[indptr[x]:indptr[x+1]]."""
    iu = np.asarray(iu, dtype=np.int64)
    iv = np.asarray(iv, dtype=np.int64)
    src = np.concatenate([iu, iv])
    dst = np.concatenate([iv, iu])
    order = np.argsort(src, kind="stable")
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order]


def strip_path(indptr, indices, a: int, b: int):
    """Vertices of G - {a, b} in path order, or an empty array if that graph is not a path.

    The path is read from the end with the smaller index.
    """
    n = len(indptr) - 1
    if n < 3:
        return np.empty(0, dtype=np.int64)
    ptr = indptr.tolist()
    nb = indices.tolist()
    start = -1
    ends = 0
    for x in range(n):
        if x == a or x == b:
            continue
        d = 0
        for j in range(ptr[x], ptr[x + 1]):
            y = nb[j]
            if y != a and y != b:
                d += 1
        if d > 2 or d == 0 and n > 3:
            return np.empty(0, dtype=np.int64)
        if d <= 1:
            ends += 1
            if start < 0:
                start = x
    if n == 3:
        return np.array([start], dtype=np.int64)
    if ends != 2:
        return np.empty(0, dtype=np.int64)
    out = [start]
    prev, cur = -1, start
    while True:
        nxt = -1
        for j in range(ptr[cur], ptr[cur + 1]):
            y = nb[j]
            if y != a and y != b and y != prev:
                nxt = y
                break
        if nxt < 0:
            break
        out.append(nxt)
        prev, cur = cur, nxt
    if len(out) != n - 2:
        return np.empty(0, dtype=np.int64)
    return np.asarray(out, dtype=np.int64)


def _positions(iu, iv, pos):
    p, q = pos[iu], pos[iv]
    return np.minimum(p, q), np.maximum(p, q)


def edge_profile(iu, iv, pos, n: int, k: int):
    """Counts of the five required edge kinds under labeling ``pos`` and split k.

    Kinds: path, closing chords, fan at v_n, fan at v_1, edge v_1-v_n when
    forced. Returns (counts, index of the first edge that fits no kind or -1).
    """
    lo, hi = _positions(iu, iv, pos)
    path = hi == lo + 1
    chords = ((lo == 1) & (hi == n - 1)) | ((lo == 2) & (hi == n))
    fan_n = (hi == n) & (lo >= 3) & (lo <= k - 1) & ~path
    fan_1 = (lo == 1) & (hi >= k) & (hi <= n - 2) & ~path
    ends = (lo == 1) & (hi == n)
    forced = ends & (k in (2, n - 1))
    optional = ends | ((hi == n) & (lo == k))
    counts = np.array([path.sum(), chords.sum(), fan_n.sum(), fan_1.sum(), forced.sum()],
                      dtype=np.int64)
    stray = np.nonzero(~(path | chords | fan_n | fan_1 | forced | optional))[0]
    return counts, int(stray[0]) if len(stray) else -1


def first_fan(iu, iv, pos, n: int) -> int:
    """Smallest position j in [3, n-2] with an edge v_1-v_j, or 0 if none."""
    lo, hi = _positions(iu, iv, pos)
    fan = hi[(lo == 1) & (hi >= 3) & (hi <= n - 2)]
    return int(fan.min()) if len(fan) else 0
