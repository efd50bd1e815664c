from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from tga.graph import Graph, parse_graph

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def load(name: str) -> Graph:
    return parse_graph((GRAPHS / f"{name}.txt").read_text())


@pytest.fixture
def g_loops() -> Graph:
    return load("g_loops")


@pytest.fixture
def g_tri2() -> Graph:
    return load("g_tri2")


@pytest.fixture
def g_bowtie() -> Graph:
    return load("g_bowtie")


@pytest.fixture
def c4() -> Graph:
    return load("c4")


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, connected=False):
    n = draw(st.integers(min_vertices, max_vertices))
    slots = [(a, b) for a in range(n) for b in range(a, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    edges = [s for s, keep in zip(slots, mask) if keep]
    if connected:
        # a spanning path keeps the graph connected
        edges = sorted(set(edges) | {(i, i + 1) for i in range(n - 1)})
    return Graph([f"v{i}" for i in range(n)], edges)
