# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels; see ``_kernels_py`` for the reference versions."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def build_csr(iu, iv, Py_ssize_t n):
    cdef cnp.int64_t[:] a = np.ascontiguousarray(iu, dtype=np.int64)
    cdef cnp.int64_t[:] b = np.ascontiguousarray(iv, dtype=np.int64)
    cdef Py_ssize_t m = a.shape[0], i, x
    indptr_arr = np.zeros(n + 1, dtype=np.int64)
    indices_arr = np.empty(2 * m, dtype=np.int64)
    cdef cnp.int64_t[:] indptr = indptr_arr
    cdef cnp.int64_t[:] indices = indices_arr
    cdef cnp.int64_t[:] fill
    for i in range(m):
        indptr[a[i] + 1] += 1
        indptr[b[i] + 1] += 1
    for x in range(n):
        indptr[x + 1] += indptr[x]
    fill_arr = np.array(indptr_arr[:n], dtype=np.int64)
    fill = fill_arr
    # two passes keep neighbour order identical to the stable sort of the fallback
    for i in range(m):
        indices[fill[a[i]]] = b[i]
        fill[a[i]] += 1
    for i in range(m):
        indices[fill[b[i]]] = a[i]
        fill[b[i]] += 1
    return indptr_arr, indices_arr


def strip_path(indptr_in, indices_in, cnp.int64_t a, cnp.int64_t b):
    cdef cnp.int64_t[:] ptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef cnp.int64_t[:] nb = np.ascontiguousarray(indices_in, dtype=np.int64)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef Py_ssize_t x, j, d, ends = 0, count
    cdef cnp.int64_t y, start = -1, prev, cur, nxt
    empty = np.empty(0, dtype=np.int64)
    if n < 3:
        return empty
    for x in range(n):
        if x == a or x == b:
            continue
        d = 0
        for j in range(ptr[x], ptr[x + 1]):
            y = nb[j]
            if y != a and y != b:
                d += 1
        if d > 2 or (d == 0 and n > 3):
            return empty
        if d <= 1:
            ends += 1
            if start < 0:
                start = x
    if n == 3:
        return np.array([start], dtype=np.int64)
    if ends != 2:
        return empty
    out_arr = np.empty(n - 2, dtype=np.int64)
    cdef cnp.int64_t[:] out = out_arr
    out[0] = start
    count = 1
    prev = -1
    cur = start
    while True:
        nxt = -1
        for j in range(ptr[cur], ptr[cur + 1]):
            y = nb[j]
            if y != a and y != b and y != prev:
                nxt = y
                break
        if nxt < 0:
            break
        if count >= n - 2:
            return empty
        out[count] = nxt
        count += 1
        prev = cur
        cur = nxt
    if count != n - 2:
        return empty
    return out_arr


def edge_profile(iu, iv, pos, Py_ssize_t n, Py_ssize_t k):
    cdef cnp.int64_t[:] a = np.ascontiguousarray(iu, dtype=np.int64)
    cdef cnp.int64_t[:] b = np.ascontiguousarray(iv, dtype=np.int64)
    cdef cnp.int64_t[:] ps = np.ascontiguousarray(pos, dtype=np.int64)
    cdef Py_ssize_t m = a.shape[0], i, stray = -1
    cdef cnp.int64_t lo, hi
    cdef cnp.int64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0
    cdef bint forced_ends = k == 2 or k == n - 1
    for i in range(m):
        lo = ps[a[i]]
        hi = ps[b[i]]
        if lo > hi:
            lo, hi = hi, lo
        if hi == lo + 1:
            c0 += 1
        elif (lo == 1 and hi == n - 1) or (lo == 2 and hi == n):
            c1 += 1
        elif hi == n and 3 <= lo <= k - 1:
            c2 += 1
        elif lo == 1 and k <= hi <= n - 2:
            c3 += 1
        elif lo == 1 and hi == n:
            if forced_ends:
                c4 += 1
        elif hi == n and lo == k:
            pass
        elif stray < 0:
            stray = i
    return np.array([c0, c1, c2, c3, c4], dtype=np.int64), stray


def first_fan(iu, iv, pos, Py_ssize_t n):
    cdef cnp.int64_t[:] a = np.ascontiguousarray(iu, dtype=np.int64)
    cdef cnp.int64_t[:] b = np.ascontiguousarray(iv, dtype=np.int64)
    cdef cnp.int64_t[:] ps = np.ascontiguousarray(pos, dtype=np.int64)
    cdef Py_ssize_t m = a.shape[0], i
    cdef cnp.int64_t lo, hi, best = 0
    for i in range(m):
        lo = ps[a[i]]
        hi = ps[b[i]]
        if lo > hi:
            lo, hi = hi, lo
        if lo == 1 and 3 <= hi <= n - 2 and (best == 0 or hi < best):
            best = hi
    return best
