"""Exceptional pairs, minimal generators and circuit-pair rewriting."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from tga.graph import Circuit, Edge, Graph, GraphError, enumerate_induced_odd_circuits
from tga.semigroup import Decomposition
from tga.terms import Cycle, Generator, Pair, add, generator_weight, sub

__all__ = [
    "SignedEdgeSum",
    "destroy_relation",
    "enumerate_exceptional_pairs",
    "is_exceptional_pair",
    "minimal_generators",
    "pair_as_signed_edges",
    "pair_square_as_edges",
    "reduce_circuit_pair",
]


@dataclass(frozen=True)
class SignedEdgeSum:
    coefficients: tuple[tuple[Edge, int], ...]

    def weight(self, g: Graph) -> tuple[int, ...]:
        w = [0] * g.n
        for e, k in self.coefficients:
            w[e.u] += k
            w[e.v] += k
        return tuple(w)


def is_exceptional_pair(a: Circuit, b: Circuit, g: Graph) -> bool:
    if not (a.is_odd and b.is_odd and g.is_circuit(a) and g.is_circuit(b)):
        return False
    if a.vertex_set & b.vertex_set:
        return False
    if not g.same_component(a.vertices[0], b.vertices[0]):
        return False
    induced = set(g.induced_edges(a.vertex_set | b.vertex_set))
    return induced == set(a.edges()) | set(b.edges())


def enumerate_exceptional_pairs(g: Graph) -> list[Pair]:
    circuits = enumerate_induced_odd_circuits(g)
    out = [Pair.of(a, b) for a, b in combinations(circuits, 2) if is_exceptional_pair(a, b, g)]
    return sorted(out)


def minimal_generators(g: Graph) -> list[Generator]:
    """All edges followed by all exceptional pairs."""
    if "minimal_generators" not in g.memo:
        g.memo["minimal_generators"] = tuple(g.edges) + tuple(enumerate_exceptional_pairs(g))
    return list(g.memo["minimal_generators"])


def destroy_relation(c1: Circuit, x: int, walk: Sequence[int], c2: Circuit, parity: int
                     ) -> tuple[list[Edge], list[Edge]]:
    """Edges of a cycle-destroying relation.

    The even closed walk runs around ``c1`` from ``x``, along ``walk`` (a
    vertex sequence from ``x`` to a vertex ``y`` of ``c2``), around ``c2``
    from ``y`` and back along ``walk``.  Returns ``(lhs, rhs)`` with

        cycle(c1) + cycle(c2) + sum(lhs) == sum(rhs)

    where ``rhs`` holds the walk's edges at positions of the given parity
    and ``lhs`` the walk edges of the other parity.  Each traversal of the
    connecting walk sees an edge at the same parity, so it is listed once.
    """
    walk = tuple(walk) if walk else (x,)
    if walk[0] != x:
        raise ValueError("connecting walk must start at x")
    y = walk[-1]
    closed: list[tuple[int, int]] = []
    ring1 = c1.walk_from(x)
    closed += [(ring1[i], ring1[(i + 1) % len(ring1)]) for i in range(len(ring1))]
    closed += list(zip(walk, walk[1:]))
    ring2 = c2.walk_from(y)
    closed += [(ring2[i], ring2[(i + 1) % len(ring2)]) for i in range(len(ring2))]
    l1, m = len(ring1), len(walk) - 1
    lhs, rhs = [], []
    for pos, (a, b) in enumerate(closed):
        e = Edge.of(a, b)
        if l1 <= pos < l1 + m:
            (rhs if pos % 2 == parity else lhs).append(e)
        elif pos % 2 == parity:
            rhs.append(e)
    return lhs, rhs


def _chords(c: Circuit, g: Graph) -> list[tuple[int, Circuit, list[Edge]]]:
    """Ways to write cycle(c) = cycle(smaller odd circuit) + edges.

    Returns ``(length, subcircuit, edges)``; a loop at a vertex of ``c``
    counts as a chord giving the loop circuit.
    """
    out = []
    if len(c) == 1:
        return out
    ring = c.vertices
    k = len(ring)
    for i, v in enumerate(ring):
        if v in g.loops:
            rest = ring[i + 1:] + ring[:i]
            matching = [Edge.of(rest[j], rest[j + 1]) for j in range(0, len(rest), 2)]
            out.append((1, Circuit((v,)), matching))
    own = set(c.edges())
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            a, b = ring[i], ring[j]
            if not g.has_edge(a, b) or Edge.of(a, b) in own:
                continue
            inner = list(ring[i:j + 1])            # path a..b along the circuit
            outer = list(ring[j:]) + list(ring[:i + 1])  # path b..a
            odd_path, even_path = (inner, outer) if len(inner) % 2 == 1 else (outer, inner)
            # odd_path has an odd vertex count: with the chord it closes an odd circuit
            sub_circuit = Circuit.of(odd_path)
            # even_path plus the chord is an even circuit; take its alternate
            # edges containing the chord, minus the chord itself
            matching = [Edge.of(even_path[t], even_path[t + 1]) for t in range(1, len(even_path) - 1, 2)]
            out.append((len(sub_circuit), sub_circuit, matching))
    return out


def reduce_circuit_pair(c1: Circuit, c2: Circuit, g: Graph) -> Decomposition:
    """Rewrite cycle(c1) + cycle(c2) as edges plus at most one exceptional pair."""
    for c in (c1, c2):
        if not (c.is_odd and g.is_circuit(c)):
            raise GraphError(f"{c.vertices} is not an odd circuit of the graph")
    if not g.same_component(c1.vertices[0], c2.vertices[0]):
        raise GraphError("circuits lie in different components")
    edges: list[Edge] = []
    a, b = sorted((c1, c2))
    while True:
        if a == b:
            edges += a.edges()
            return Decomposition.of(edges)
        shared = a.vertex_set & b.vertex_set
        if shared:
            x = min(shared)
            _, rhs = destroy_relation(a, x, (x,), b, 0)
            return Decomposition.of(edges + rhs)
        joins = sorted(
            Edge.of(u, v) for u in a.vertices for v in b.vertices if g.has_edge(u, v)
        )
        if joins:
            e = joins[0]
            x, y = (e.u, e.v) if e.u in a.vertex_set else (e.v, e.u)
            _, rhs = destroy_relation(a, x, (x, y), b, 1)
            return Decomposition.of(edges + rhs)
        options = [(length, sub.vertices, side, sub, extra)
                   for side, c in enumerate((a, b))
                   for length, sub, extra in _chords(c, g)]
        if not options:
            return Decomposition.of(edges, [Pair.of(a, b)])
        _, _, side, sub_circuit, extra = min(options, key=lambda t: t[:3])
        edges += extra
        a, b = sorted((sub_circuit, b) if side == 0 else (a, sub_circuit))


def pair_as_signed_edges(h: Pair, g: Graph) -> SignedEdgeSum:
    """``h`` as a +-1 combination of edges along the doubled connecting walk."""
    a, b = h.first, h.second
    path = g.shortest_path(a.vertices, b.vertices)
    if path is None:
        raise GraphError("pair circuits are not connected")
    lhs, rhs = destroy_relation(a, path[0], path, b, 0)
    coeff: Counter = Counter(rhs)
    coeff.subtract(Counter(lhs))
    items = tuple(sorted((e, k) for e, k in coeff.items() if k))
    out = SignedEdgeSum(items)
    assert out.weight(g) == generator_weight(g, h)
    return out


def pair_square_as_edges(h: Pair) -> list[Edge]:
    return sorted(h.first.edges() + h.second.edges())


def cycle_weight_sum(g: Graph, circuits) -> tuple[int, ...]:
    w = (0,) * g.n
    for c in circuits:
        w = add(w, generator_weight(g, Cycle(c)))
    return w


def check_destroy(g: Graph, c1: Circuit, c2: Circuit, lhs, rhs) -> bool:
    left = cycle_weight_sum(g, (c1, c2))
    for e in lhs:
        left = add(left, generator_weight(g, e))
    right = (0,) * g.n
    for e in rhs:
        right = add(right, generator_weight(g, e))
    return sub(left, right) == (0,) * g.n
