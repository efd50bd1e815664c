import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tga import _pykernels, kernels

compiled = pytest.importorskip("tga._kernels")


def test_backend_selected():
    assert kernels.BACKEND == "cython"


@given(st.integers(1, 4), st.data())
def test_closure_matches(n, data):
    slots = [(a, b) for a in range(n) for b in range(a, n)]
    edges = data.draw(st.lists(st.sampled_from(slots), unique=True))
    cap = data.draw(st.integers(1, 4))
    assert bytes(compiled.edge_sum_closure(n, edges, cap)) == \
        bytes(_pykernels.edge_sum_closure(n, edges, cap))


@given(st.integers(1, 4), st.integers(1, 3), st.randoms(use_true_random=False))
def test_indecomposable_matches(n, cap, rng):
    size = (cap + 1) ** n
    member = bytearray(rng.random() < 0.4 for _ in range(size))
    member[0] = 1
    assert bytes(compiled.indecomposable(bytes(member), n, cap)) == \
        bytes(_pykernels.indecomposable(bytes(member), n, cap))


def test_pure_python_fallback_env(monkeypatch):
    import importlib

    monkeypatch.setenv("TGA_PURE_PYTHON", "1")
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "python"
    finally:
        monkeypatch.delenv("TGA_PURE_PYTHON")
        importlib.reload(kernels)


@given(st.integers(1, 6), st.data())
def test_cover_flow_matches(n, data):
    slots = [(a, b) for a in range(n) for b in range(a, n)]
    edges = data.draw(st.lists(st.sampled_from(slots), unique=True))
    adj = [sorted({b for a, b in edges if a == u} | {a for a, b in edges if b == u})
           for u in range(n)]
    f = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    assert compiled.cover_flow(n, adj, f) == _pykernels.cover_flow(n, adj, f)
