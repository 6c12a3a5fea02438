"""Kernel selection: the compiled extension if it was built, else the Python fallback."""

from __future__ import annotations

import os

if os.environ.get("FANBUNDLE_PURE_PYTHON"):
    from ._kernels_py import build_csr, edge_profile, first_fan, strip_path
    BACKEND = "python"
else:
    try:
        from ._kernels import build_csr, edge_profile, first_fan, strip_path
        BACKEND = "cython"
    except ImportError:  # extension not compiled
        from ._kernels_py import build_csr, edge_profile, first_fan, strip_path
        BACKEND = "python"

__all__ = ["BACKEND", "build_csr", "edge_profile", "first_fan", "strip_path"]
