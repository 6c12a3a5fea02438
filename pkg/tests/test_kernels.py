import importlib
import os
import subprocess
import sys

import numpy as np
import pytest

from fanbundle import _kernels_py, kernels

backends = [_kernels_py]
try:
    backends.append(importlib.import_module("fanbundle._kernels"))
except ImportError:
    pass


def arrays(edges, n):
    iu = np.array([a for a, _ in edges], dtype=np.int64)
    iv = np.array([b for _, b in edges], dtype=np.int64)
    return iu, iv, n


def fan(n):
    # hubs 0 and n-1 joined to a path 1..n-2
    edges = [(i, i + 1) for i in range(1, n - 2)]
    edges += [(0, i) for i in range(1, n - 1)] + [(n - 1, i) for i in range(1, n - 1)]
    return arrays(edges, n)


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_csr_lists_every_neighbour(mod):
    iu, iv, n = fan(8)
    indptr, indices = mod.build_csr(iu, iv, n)
    assert indptr[-1] == 2 * len(iu)
    for x in range(n):
        got = sorted(indices[indptr[x]:indptr[x + 1]].tolist())
        want = sorted([b for a, b in zip(iu, iv) if a == x] + [a for a, b in zip(iu, iv) if b == x])
        assert got == want


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_strip_path(mod):
    iu, iv, n = fan(9)
    indptr, indices = mod.build_csr(iu, iv, n)
    assert mod.strip_path(indptr, indices, 0, n - 1).tolist() == list(range(1, n - 1))
    # removing the wrong pair leaves something that is not a path
    assert len(mod.strip_path(indptr, indices, 1, 2)) == 0


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_strip_path_rejects_cycles_and_branches(mod):
    cyc = [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (7, 3)]
    iu, iv, n = arrays(cyc, 8)
    indptr, indices = mod.build_csr(iu, iv, n)
    assert len(mod.strip_path(indptr, indices, 6, 7)) == 0
    star = [(0, 1), (0, 2), (0, 3), (4, 0), (5, 1)]
    iu, iv, n = arrays(star, 6)
    indptr, indices = mod.build_csr(iu, iv, n)
    assert len(mod.strip_path(indptr, indices, 4, 5)) == 0


def test_backends_agree_on_random_input():
    rng = np.random.default_rng(7)
    n = 300
    perm = rng.permutation(n - 2) + 1
    edges = [(int(perm[i]), int(perm[i + 1])) for i in range(n - 3)]
    edges += [(0, int(x)) for x in perm] + [(n - 1, int(x)) for x in perm[::3]]
    iu, iv, n = arrays(edges, n)
    outs = []
    for mod in backends:
        indptr, indices = mod.build_csr(iu, iv, n)
        outs.append((indptr.tolist(), indices.tolist(),
                     mod.strip_path(indptr, indices, 0, n - 1).tolist()))
    assert all(o == outs[0] for o in outs)
    assert sorted(outs[0][2]) == list(range(1, n - 1))


def test_env_switch_forces_fallback():
    env = dict(os.environ, FANBUNDLE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from fanbundle import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
