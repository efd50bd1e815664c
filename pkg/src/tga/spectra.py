"""Admissible subgraphs, their prime ideals, and Laurent free generating sets.

An edge subset ``K`` is admissible when, for every even simple circuit of
the graph, ``K`` contains all edges of one alternating class only if it
contains all edges of the other class as well.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from tga.graph import Edge, Graph, GraphError, enumerate_circuits
from tga.linalg import rank, solve_integer

__all__ = [
    "AdmissibleSubgraph",
    "CapExceededError",
    "PrimeIdealDescriptor",
    "check_laurent",
    "enumerate_admissible",
    "is_admissible",
    "laurent_free_generators",
    "prime_generators",
]

DEFAULT_CAP = 20


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class AdmissibleSubgraph:
    graph: Graph
    edges: frozenset[Edge]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.edges for v in (e.u, e.v)}))

    def to_json(self) -> dict:
        g = self.graph
        return {"edges": [g.edge_name(e) for e in sorted(self.edges)],
                "vertices": [g.names[v] for v in self.vertices]}

    def to_dot(self) -> str:
        g = self.graph
        lines = ["graph K {"]
        lines += [f'  "{name}";' for name in g.names]
        for e in g.edges:
            style = "" if e in self.edges else " [style=dashed]"
            lines.append(f'  "{g.names[e.u]}" -- "{g.names[e.v]}"{style};')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PrimeIdealDescriptor:
    subgraph: AdmissibleSubgraph
    generators: tuple[Edge, ...]

    def to_json(self) -> dict:
        g = self.subgraph.graph
        return {"subgraph": self.subgraph.to_json(),
                "generators": [g.edge_name(e) for e in self.generators]}


def _alternating_classes(g: Graph) -> list[tuple[frozenset[Edge], frozenset[Edge]]]:
    if "alternating_classes" not in g.memo:
        out = []
        for c in enumerate_circuits(g, parity=0):
            edges = c.edges()
            out.append((frozenset(edges[0::2]), frozenset(edges[1::2])))
        g.memo["alternating_classes"] = out
    return g.memo["alternating_classes"]


def is_admissible(k: Iterable[Edge], g: Graph) -> bool:
    k = frozenset(k)
    if not k <= set(g.edges):
        raise GraphError("subgraph edges must be edges of the graph")
    for a, b in _alternating_classes(g):
        if (a <= k) != (b <= k):
            return False
    return True


def enumerate_admissible(g: Graph, cap: int = DEFAULT_CAP) -> list[AdmissibleSubgraph]:
    """All admissible edge subsets, ordered by size then edge order."""
    m = len(g.edges)
    if m > cap:
        raise CapExceededError(
            f"{m} edges exceed the subset cap {cap}; test chosen subsets with is_admissible")
    out = []
    for mask in range(1 << m):
        k = frozenset(g.edges[i] for i in range(m) if mask >> i & 1)
        if is_admissible(k, g):
            out.append(AdmissibleSubgraph(g, k))
    out.sort(key=lambda s: (len(s.edges), sorted(s.edges)))
    return out


def prime_generators(k: AdmissibleSubgraph) -> PrimeIdealDescriptor:
    g = k.graph
    if not is_admissible(k.edges, g):
        raise GraphError("subgraph is not admissible")
    return PrimeIdealDescriptor(k, tuple(e for e in g.edges if e not in k.edges))


def laurent_free_generators(k: AdmissibleSubgraph | Iterable[Edge], g: Graph | None = None
                            ) -> list[Edge]:
    """BFS spanning forest of ``K`` plus one odd-circuit edge per non-bipartite component.

    The forest grows from the least vertex of each component; the extra edge
    is the least edge of the component joining two vertices of equal BFS
    parity (a loop always qualifies).
    """
    if isinstance(k, AdmissibleSubgraph):
        g, edges = k.graph, k.edges
    else:
        edges = frozenset(k)
        if g is None:
            raise ValueError("a graph is needed for a bare edge set")
    adj: dict[int, list[int]] = {}
    for e in sorted(edges):
        adj.setdefault(e.u, []).append(e.v)
        if not e.is_loop:
            adj.setdefault(e.v, []).append(e.u)
    depth: dict[int, int] = {}
    out: list[Edge] = []
    for s in sorted(adj):
        if s in depth:
            continue
        depth[s] = 0
        part = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    out.append(Edge.of(x, y))
                    part.append(y)
                    queue.append(y)
        inside = set(part)
        odd = [e for e in sorted(edges) if e.u in inside and depth[e.u] % 2 == depth[e.v] % 2]
        if odd:
            out.append(odd[0])
    return sorted(out)


def check_laurent(edges: Iterable[Edge], basis: Iterable[Edge], g: Graph) -> tuple[bool, bool]:
    """``(independent, spans)``: rank test, and every edge an integer combination."""
    basis = list(basis)
    cols = [[int(v == e.u) + int(v == e.v) for e in basis] for v in range(g.n)]
    independent = rank(cols) == len(basis) if basis else True
    spans = True
    for e in edges:
        target = [int(v == e.u) + int(v == e.v) for v in range(g.n)]
        if not basis:
            spans = False
            break
        if solve_integer(cols, target) is None:
            spans = False
            break
    return independent, spans
