"""Brute-force oracles and the desk-scale graph family.

These checks share no code with the constructive algorithms they test:

* induced odd circuits by testing every odd vertex subset;
* membership by the denominator bound: ``f`` is in the normalization iff
  ``f`` is an integer combination of edges and ``2f`` is a sum of edge
  vectors, decided by box closure and an integer linear solve;
* minimal generators as the indecomposable members of ``[0, 2]^V``.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from tga.graph import Circuit, Graph
from tga.kernels import edge_sum_closure, indecomposable
from tga.linalg import solve_integer

__all__ = [
    "BoxOracle",
    "brute_force_induced_odd_circuits",
    "graph_family",
    "iso_connected_looped_graphs",
    "labeled_connected_looped_graphs",
    "random_connected_graph",
]


def brute_force_induced_odd_circuits(g: Graph, max_len: int | None = None) -> set[frozenset[int]]:
    """Vertex sets of odd size inducing exactly one circuit."""
    max_len = g.n if max_len is None else max_len
    out = set()
    for size in range(1, max_len + 1, 2):
        for s in combinations(range(g.n), size):
            induced = g.induced_edges(s)
            if size == 1:
                if len(induced) == 1:
                    out.add(frozenset(s))
                continue
            if len(induced) != size or any(e.is_loop for e in induced):
                continue
            deg = {v: 0 for v in s}
            for e in induced:
                deg[e.u] += 1
                deg[e.v] += 1
            if any(d != 2 for d in deg.values()):
                continue
            h = nx.Graph()
            h.add_nodes_from(s)
            h.add_edges_from((e.u, e.v) for e in induced)
            if nx.is_connected(h):
                out.add(frozenset(s))
    return out


class BoxOracle:
    """Membership and indecomposability over small boxes, by enumeration.

    ``members`` flags points of ``[0, cap]^V`` in the normalization: ``2f``
    is an edge sum and ``f`` lies in the edge lattice.  Among points with
    ``2f`` an edge sum, lattice membership depends only on ``f mod 2``
    (``2h`` is in the lattice for every ``h`` balanced on the bipartite
    components), so the integer solve is cached by residue.
    """

    def __init__(self, g: Graph, cap: int = 2):
        self.g = g
        self.cap = cap
        n = g.n
        double = edge_sum_closure(n, [(e.u, e.v) for e in g.edges], 2 * cap)
        self.edge_sums = double
        base, dbase = cap + 1, 2 * cap + 1
        incidence = [[int(v == e.u) + int(v == e.v) for e in g.edges] for v in range(n)]
        lattice: dict[tuple[int, ...], bool] = {}
        members = bytearray(base ** n)
        for idx in range(base ** n):
            j, rest, place = 0, idx, 1
            digits = []
            for _ in range(n):
                digits.append(rest % base)
                j += 2 * (rest % base) * place
                rest //= base
                place *= dbase
            if not double[j]:
                continue
            key = tuple(d % 2 for d in digits)
            if key not in lattice:
                if g.edges:
                    lattice[key] = solve_integer(incidence, digits) is not None
                else:
                    lattice[key] = not any(digits)
            members[idx] = lattice[key]
        self.members = members

    def _index(self, f, base) -> int:
        idx, place = 0, 1
        for k in f:
            idx += k * place
            place *= base
        return idx

    def is_member(self, f) -> bool:
        if any(k < 0 or k > self.cap for k in f):
            raise ValueError("weight outside the oracle box")
        return bool(self.members[self._index(f, self.cap + 1)])

    def is_edge_sum(self, f) -> bool:
        """Whether ``f`` (coordinates at most ``2 cap``) is a sum of edge vectors."""
        return bool(self.edge_sums[self._index(f, 2 * self.cap + 1)])

    def points(self) -> Iterator[tuple[int, ...]]:
        base = self.cap + 1
        for idx in range(base ** self.g.n):
            yield tuple((idx // base ** v) % base for v in range(self.g.n))

    def indecomposables(self) -> set[tuple[int, ...]]:
        flags = indecomposable(bytes(self.members), self.g.n, self.cap)
        return {p for p, bit in zip(self.points(), flags) if bit}


# -- graph family -----------------------------------------------------------------

def _graph(n: int, edges) -> Graph:
    return Graph([f"v{i}" for i in range(n)], edges)


def iso_connected_looped_graphs(max_vertices: int = 5) -> list[Graph]:
    """One representative per isomorphism class of connected graphs with loops."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_vertices or not nx.is_connected(h):
            continue
        autos = list(nx.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
        seen = set()
        for mask in range(1 << n):
            loops = [v for v in range(n) if mask >> v & 1]
            key = min(tuple(sorted(a[v] for v in loops)) for a in autos)
            if key in seen:
                continue
            seen.add(key)
            out.append(_graph(n, list(h.edges()) + [(v, v) for v in key]))
    return out


def labeled_connected_looped_graphs(max_vertices: int = 5) -> Iterator[Graph]:
    """Every connected graph with loops on vertex sets ``0..n-1``, ``n <= max_vertices``."""
    for n in range(1, max_vertices + 1):
        slots = [(a, b) for a in range(n) for b in range(a + 1, n)]
        for mask in range(1 << len(slots)):
            edges = [slots[k] for k in range(len(slots)) if mask >> k & 1]
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(edges)
            if not nx.is_connected(h):
                continue
            for lmask in range(1 << n):
                yield _graph(n, edges + [(v, v) for v in range(n) if lmask >> v & 1])


def random_connected_graph(rng: random.Random, n: int = 6, p: float = 0.35,
                           loop_p: float = 0.3) -> Graph:
    slots = [(a, b) for a in range(n) for b in range(a + 1, n)]
    while True:
        edges = [s for s in slots if rng.random() < p]
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        if nx.is_connected(h):
            return _graph(n, edges + [(v, v) for v in range(n) if rng.random() < loop_p])


def graph_family(max_vertices: int = 5, random_count: int = 200, seed: int = 0,
                 random_vertices: int = 6) -> list[Graph]:
    """Isomorphism classes up to ``max_vertices`` plus seeded random larger graphs."""
    rng = random.Random(seed)
    return iso_connected_looped_graphs(max_vertices) + [
        random_connected_graph(rng, random_vertices) for _ in range(random_count)
    ]
