"""Kernel selection: the compiled extension when built, else pure Python.

Set ``TGA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from tga import _pykernels

BACKEND = "python"
edge_sum_closure = _pykernels.edge_sum_closure
indecomposable = _pykernels.indecomposable
cover_flow = _pykernels.cover_flow

if not os.environ.get("TGA_PURE_PYTHON"):
    try:
        from tga import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        edge_sum_closure = _kernels.edge_sum_closure
        indecomposable = _kernels.indecomposable
        cover_flow = _kernels.cover_flow

__all__ = ["BACKEND", "cover_flow", "edge_sum_closure", "indecomposable"]
