"""Membership in the normalized edge semigroup and constructive decomposition.

An integer vertex weighting ``f`` belongs to the normalization iff it is a
nonnegative rational combination of edge vectors.  Feasibility of that
system is decided exactly as a transportation problem on the bipartite
double cover of the graph: copies ``u'`` and ``v''`` of every vertex, an arc
``u' -> v''`` for every edge direction, supplies and demands ``f``.  An
integral flow gives edge weights in ``(1/2)Z``; a minimum cut gives a
separating functional when the flow falls short.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from tga.graph import Circuit, Edge, Graph, GraphError, connected_components
from tga.kernels import cover_flow
from tga.linalg import nullspace, rank
from tga.terms import Pair, Weight, Word, generator_weight

__all__ = [
    "Decomposition",
    "FarkasCertificate",
    "NotMemberError",
    "cone_decompose",
    "decompose_to_generators",
    "edge_weighting_vertex_sum",
    "integer_membership",
    "is_member",
    "lattice_certificate",
    "membership",
]

EdgeWeighting = dict  # Edge -> Fraction


@dataclass(frozen=True)
class FarkasCertificate:
    """A vertex functional separating ``f`` from the semigroup.

    ``kind == "cone"``: nonnegative on every edge, negative on ``f``.
    ``kind == "lattice"``: integral on every edge, not integral on ``f``
    (so ``f`` is not even an integer combination of edges).
    """

    values: tuple[Fraction, ...]
    kind: str = "cone"

    def pairing(self, w: Weight) -> Fraction:
        return sum((c * x for c, x in zip(self.values, w)), Fraction(0))

    def verify(self, g: Graph, f: Weight) -> bool:
        c = self.values
        on_edges = [c[e.u] + c[e.v] for e in g.edges]
        if self.kind == "lattice":
            return all(x.denominator == 1 for x in on_edges) and self.pairing(f).denominator != 1
        return all(x >= 0 for x in on_edges) and self.pairing(f) < 0

    def to_json(self, g: Graph) -> dict:
        return {"kind": self.kind,
                "values": {g.names[v]: _frac_str(x) for v, x in enumerate(self.values) if x}}


class NotMemberError(ValueError):
    def __init__(self, certificate: FarkasCertificate):
        self.certificate = certificate
        super().__init__("element is not in the normalized semigroup")


@dataclass(frozen=True)
class Decomposition:
    """A sum of edges and exceptional pairs (multisets, sorted)."""

    edges: tuple[Edge, ...] = ()
    pairs: tuple[Pair, ...] = field(default=())

    @staticmethod
    def of(edges=(), pairs=()) -> "Decomposition":
        return Decomposition(tuple(sorted(edges)), tuple(sorted(pairs)))

    def __add__(self, other: "Decomposition") -> "Decomposition":
        return Decomposition.of(self.edges + other.edges, self.pairs + other.pairs)

    def as_word(self, g: Graph) -> Word:
        return Word(g, list(self.edges) + list(self.pairs))

    def weight(self, g: Graph) -> Weight:
        return self.as_word(g).weight


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def edge_weighting_vertex_sum(g: Graph, weights: EdgeWeighting) -> tuple[Fraction, ...]:
    """Induced vertex weights; loops count twice at their vertex."""
    out = [Fraction(0)] * g.n
    for e, x in weights.items():
        out[e.u] += x
        out[e.v] += x
    return tuple(out)


def _max_flow(g: Graph, f: Weight) -> tuple[dict[tuple[int, int], int], int, set[int]]:
    """Edmonds-Karp on the double cover (see ``kernels.cover_flow``).

    Returns the arc flows (left u, right v), the flow value and the set of
    nodes reachable from the source in the final residual network.
    """
    total, loaded, reach = cover_flow(g.n, g.adj, list(f))
    return {(u, v): y for u, v, y in loaded}, total, {x for x, r in enumerate(reach) if r}


def _caratheodory(g: Graph, weights: EdgeWeighting) -> EdgeWeighting:
    """Zero coefficients along support relations until the support is independent.

    Among edges that can be zeroed by a step in either direction, the
    greatest edge is zeroed.
    """
    x = {e: w for e, w in weights.items() if w > 0}
    while x:
        support = sorted(x)
        cols = [[int(v == e.u) + int(v == e.v) for e in support] for v in range(g.n)]
        null = nullspace(cols, len(support))
        if not null:
            break
        z = null[0]
        options = []  # (edge to zero, step)
        for sign in (1, -1):
            ratios = [(x[e] / (-sign * z[i]), e) for i, e in enumerate(support) if sign * z[i] < 0]
            if not ratios:
                continue
            t = min(r for r, _ in ratios)
            options += [(e, sign * t) for r, e in ratios if r == t]
        edge, step = max(options)
        nxt = {}
        for i, e in enumerate(support):
            val = x[e] + step * z[i]
            if e != edge and val > 0:
                nxt[e] = val
        x = nxt
    return x


def _cone(f: Weight, g: Graph) -> EdgeWeighting | FarkasCertificate:
    """Half-integral edge weights inducing ``f`` (support not reduced), or a certificate."""
    if len(f) != g.n:
        raise GraphError("weight vector does not match the graph")
    for v, k in enumerate(f):
        if k < 0:
            return FarkasCertificate(tuple(Fraction(int(u == v)) for u in range(g.n)))
    flows, total, reach = _max_flow(g, f)
    if total < sum(f):
        n = g.n
        left = {u for u in range(n) if 1 + u in reach}
        right = {v for v in range(n) if n + 1 + v in reach}
        c = [Fraction(0)] * n
        for v in range(n):
            if v in left and v not in right:
                c[v] = Fraction(-1)
            elif v in right and v not in left:
                c[v] = Fraction(1)
        return FarkasCertificate(tuple(c))
    doubled: dict[Edge, int] = {}
    for (u, v), y in flows.items():
        e = Edge.of(u, v)
        doubled[e] = doubled.get(e, 0) + y
    return {e: Fraction(y, 2) for e, y in doubled.items()}


def cone_decompose(f: Weight, g: Graph) -> EdgeWeighting | FarkasCertificate:
    """Nonnegative edge weights with independent support inducing ``f``, or a
    certificate that none exist."""
    result = _cone(f, g)
    if isinstance(result, FarkasCertificate):
        return result
    return _caratheodory(g, result)


def _odd_circuit_components(g: Graph) -> list[tuple[int, ...]]:
    """Components that are not bipartite (a loop counts as an odd circuit)."""
    if "odd_components" in g.memo:
        return g.memo["odd_components"]
    out = []
    for part in connected_components(g):
        color = {part[0]: 0}
        stack = [part[0]]
        odd = False
        while stack and not odd:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    odd = True
                    break
        if odd:
            out.append(part)
    g.memo["odd_components"] = out
    return out


def lattice_certificate(f: Weight, g: Graph) -> FarkasCertificate | None:
    """Half the indicator of a non-bipartite component with odd total weight.

    Inside the cone, this parity is the only obstruction to ``f`` being an
    integer combination of edges: bipartite components are balanced by the
    cone condition already.
    """
    for part in _odd_circuit_components(g):
        if sum(f[v] for v in part) % 2:
            half = Fraction(1, 2)
            return FarkasCertificate(tuple(half if v in part else Fraction(0) for v in range(g.n)),
                                     "lattice")
    return None


def membership(f: Weight, g: Graph, independent: bool = True
               ) -> EdgeWeighting | FarkasCertificate:
    """Like ``cone_decompose``, but also rejects points off the edge lattice.

    With ``independent=False`` the weighting's support is left unreduced,
    which is all a yes/no answer needs.
    """
    result = cone_decompose(f, g) if independent else _cone(f, g)
    if isinstance(result, FarkasCertificate):
        return result
    return lattice_certificate(f, g) or result


def is_member(f: Weight, g: Graph) -> bool:
    return not isinstance(membership(f, g, independent=False), FarkasCertificate)


def independent_support(g: Graph, weights: EdgeWeighting) -> bool:
    support = sorted(e for e, w in weights.items() if w)
    cols = [[int(v == e.u) + int(v == e.v) for e in support] for v in range(g.n)]
    return rank(cols) == len(support) if support else True


def integer_membership(f: Weight, g: Graph, bound: int | None = None) -> bool:
    """Whether ``f`` is a nonnegative integer sum of edge vectors.

    Exhaustive search over residuals with memoization.  No edge can occur
    more than ``sum(f) / 2`` times, so any ``bound`` at least that large
    leaves the answer unchanged.
    """
    total = sum(f)
    if bound is None:
        bound = total
    if 2 * bound < total:
        raise ValueError("bound must be at least sum(f) / 2")
    if any(k < 0 for k in f) or total % 2:
        return False
    at = [[e for e in g.edges if v in (e.u, e.v)] for v in range(g.n)]

    @lru_cache(maxsize=None)
    def search(r: tuple[int, ...]) -> bool:
        v = next((i for i, k in enumerate(r) if k), None)
        if v is None:
            return True
        for e in at[v]:
            nxt = list(r)
            nxt[e.u] -= 1
            nxt[e.v] -= 1
            if nxt[e.u] >= 0 and nxt[e.v] >= 0 and search(tuple(nxt)):
                return True
        return False

    return search(tuple(f))


def _half_circuits(g: Graph, half_edges: list[Edge]) -> list[Circuit]:
    """Split a disjoint union of circuits (given by edges) into circuits."""
    adj: dict[int, list[int]] = {}
    out = []
    for e in half_edges:
        if e.is_loop:
            out.append(Circuit((e.u,)))
            continue
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    seen: set[int] = set()
    for s in sorted(adj):
        if s in seen:
            continue
        path = [s]
        seen.add(s)
        prev, cur = None, s
        while True:
            nxt = [y for y in adj[cur] if y != prev and y not in seen]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seen.add(cur)
            path.append(cur)
        out.append(Circuit.of(path))
    return sorted(out)


def decompose_to_generators(f: Weight, g: Graph) -> Decomposition:
    """Write a member as edges plus exceptional pairs.

    Integer parts of the independent weighting give edges; the fractional
    part is a disjoint union of odd circuits, paired consecutively within
    each component (ordered by least vertex) and reduced.
    """
    from tga.generators import reduce_circuit_pair

    result = membership(f, g)
    if isinstance(result, FarkasCertificate):
        raise NotMemberError(result)
    edges: list[Edge] = []
    halves: list[Edge] = []
    for e, x in sorted(result.items()):
        whole = x.numerator // x.denominator
        edges += [e] * whole
        frac = x - whole
        if frac:
            if frac != Fraction(1, 2):
                raise AssertionError(f"unexpected fractional weight {frac}")
            halves.append(e)
    out = Decomposition.of(edges)
    circuits = _half_circuits(g, halves)
    for part in connected_components(g):
        inside = [c for c in circuits if c.vertices[0] in part]
        if len(inside) % 2:
            raise AssertionError("odd number of half-weighted circuits in a component")
        for a, b in zip(inside[::2], inside[1::2]):
            out = out + reduce_circuit_pair(a, b, g)
    return out


def weight_of(g: Graph, gens) -> Weight:
    total = Counter()
    for x in gens:
        for v, k in enumerate(generator_weight(g, x)):
            total[v] += k
    return tuple(total[v] for v in range(g.n))
