"""Finite graphs with loops, walks, circuits and circuit enumeration.

Vertices are stored as integers ``0..n-1``; the integer order is the
canonical order used for every deterministic tie-break.  Names only matter
at the I/O boundary.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Circuit",
    "Edge",
    "Graph",
    "GraphError",
    "Walk",
    "closed_walks",
    "connected_components",
    "enumerate_circuits",
    "enumerate_induced_odd_circuits",
    "parse_graph",
]

RESERVED = set(" \t,:=^|()-#")


class GraphError(ValueError):
    """Malformed graph input or a foreign vertex/edge."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int

    def __post_init__(self):
        if self.u > self.v:
            raise ValueError("Edge endpoints must be ordered; use Edge.of")

    @staticmethod
    def of(a: int, b: int) -> "Edge":
        return Edge(a, b) if a <= b else Edge(b, a)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Least rotation of ``seq`` or of its reversal."""
    n = len(seq)
    if n == 0:
        return ()
    seq = tuple(seq)
    rev = seq[::-1]
    best = min(seq[i:] + seq[:i] for i in range(n))
    return min(best, min(rev[i:] + rev[:i] for i in range(n)))


@dataclass(frozen=True, order=True)
class Circuit:
    """A closed path, stored as its canonical cyclic vertex tuple.

    A loop is the circuit ``(v,)`` of length 1.
    """

    vertices: tuple[int, ...]

    @staticmethod
    def of(vertices: Iterable[int]) -> "Circuit":
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError(f"circuit repeats a vertex: {vs}")
        if len(vs) == 2:
            raise ValueError("a circuit needs 1 or at least 3 vertices")
        return Circuit(_canonical_cycle(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [Edge.of(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def walk_from(self, x: int) -> tuple[int, ...]:
        """Cyclic vertex tuple of the circuit starting at ``x``."""
        i = self.vertices.index(x)
        return self.vertices[i:] + self.vertices[:i]


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertex sequence.

    Open walks list ``L+1`` vertices for ``L`` edges.  Closed walks list the
    ``L`` vertices in cyclic order, without repeating the first one, so the
    edges are ``(v[i], v[i+1 mod L])``; ``()`` is the empty closed walk and
    ``(a, b)`` is the edge ``ab`` traversed twice.
    """

    vertices: tuple[int, ...]
    closed: bool = True

    def __len__(self) -> int:
        if self.closed:
            return len(self.vertices)
        return max(len(self.vertices) - 1, 0)

    @property
    def parity(self) -> int:
        return len(self) % 2

    def steps(self) -> list[tuple[int, int]]:
        vs = self.vertices
        if self.closed:
            return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
        return list(zip(vs, vs[1:]))

    def edges(self) -> list[Edge]:
        return [Edge.of(a, b) for a, b in self.steps()]

    def canonical(self) -> "Walk":
        if not self.closed:
            return min(self, Walk(self.vertices[::-1], False), key=lambda w: w.vertices)
        return Walk(_canonical_cycle(self.vertices), True)

    def rotated(self, k: int) -> "Walk":
        vs = self.vertices
        if not vs:
            return self
        k %= len(vs)
        return Walk(vs[k:] + vs[:k], True)

    def reversed(self) -> "Walk":
        if self.closed and self.vertices:
            vs = self.vertices
            return Walk((vs[0],) + vs[:0:-1], True)
        return Walk(self.vertices[::-1], self.closed)

    def is_circuit(self) -> bool:
        return self.closed and len(set(self.vertices)) == len(self.vertices)


class Graph:
    """Undirected finite graph, loops allowed, no multiple edges."""

    def __init__(self, names: Sequence[str], edges: Iterable[tuple[int, int]]):
        self.names: tuple[str, ...] = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise GraphError("duplicate vertex name")
        self._index = {name: i for i, name in enumerate(self.names)}
        n = len(self.names)
        es: set[Edge] = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) has an unknown endpoint")
            e = Edge.of(a, b)
            if e in es:
                raise GraphError(f"duplicate edge {self.edge_name(e)}")
            es.add(e)
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        self._edge_set = frozenset(es)
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in self.edges:
            adj[e.u].append(e.v)
            if not e.is_loop:
                adj[e.v].append(e.u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.loops = frozenset(e.u for e in self.edges if e.is_loop)
        self.weight_cache: dict = {}  # generator -> weight, filled by tga.terms
        self.memo: dict = {}  # derived data that depends only on the graph

    @classmethod
    def from_names(cls, names: Sequence[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        index = {name: i for i, name in enumerate(names)}
        return cls(names, [(index[a], index[b]) for a, b in edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[self.edge_name(e) for e in self.edges]})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.names == other.names
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.names, self.edges))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def has_edge(self, a: int, b: int) -> bool:
        return Edge.of(a, b) in self._edge_set

    def edge(self, a: int, b: int) -> Edge:
        e = Edge.of(a, b)
        if e not in self._edge_set:
            raise GraphError(f"{self.edge_name(e)} is not an edge")
        return e

    def edge_name(self, e: Edge) -> str:
        return f"{self.names[e.u]}-{self.names[e.v]}"

    def is_walk(self, w: Walk) -> bool:
        return all(self.has_edge(a, b) for a, b in w.steps())

    def is_circuit(self, c: Circuit) -> bool:
        return all(e in self._edge_set for e in c.edges())

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        vs = set(vertices)
        return [e for e in self.edges if e.u in vs and e.v in vs]

    def is_induced_circuit(self, c: Circuit) -> bool:
        return self.is_circuit(c) and len(self.induced_edges(c.vertices)) == len(c)

    def subgraph(self, edges: Iterable[Edge]) -> "Graph":
        return Graph(self.names, [(e.u, e.v) for e in edges])

    @cached_property
    def component_index(self) -> tuple[int, ...]:
        comp = [-1] * self.n
        for k, part in enumerate(connected_components(self)):
            for v in part:
                comp[v] = k
        return tuple(comp)

    def same_component(self, a: int, b: int) -> bool:
        return self.component_index[a] == self.component_index[b]

    def shortest_path(self, sources: Iterable[int], targets: Iterable[int]) -> tuple[int, ...] | None:
        """BFS path from any source to any target; least-vertex tie-break."""
        targets = set(targets)
        prev: dict[int, int | None] = {}
        queue: deque[int] = deque()
        for s in sorted(set(sources)):
            prev[s] = None
            queue.append(s)
        while queue:
            x = queue.popleft()
            if x in targets:
                path = [x]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return tuple(reversed(path))
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        return None

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.names)]
        lines += [f"{self.names[e.u]} {self.names[e.v]}" for e in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": list(self.names),
            "edges": [[self.names[e.u], self.names[e.v]] for e in self.edges],
        }


def _check_name(name: str, line: int | None) -> str:
    if not name or RESERVED & set(name):
        raise GraphError(f"invalid vertex name {name!r}", line)
    return name


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format or its JSON alternative."""
    stripped = text.strip()
    if not stripped:
        raise GraphError("empty graph input", 1)
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        names = [_check_name(str(v), None) for v in data.get("vertices", [])]
        index = {v: i for i, v in enumerate(names)}
        if len(index) != len(names):
            raise GraphError("duplicate vertex name")
        edges = []
        for pair in data.get("edges", []):
            if len(pair) != 2:
                raise GraphError(f"edge {pair!r} must have two endpoints")
            for v in pair:
                if str(v) not in index:
                    raise GraphError(f"unknown vertex {v!r}")
            edges.append((index[str(pair[0])], index[str(pair[1])]))
        return Graph(names, edges)

    names: list[str] = []
    index: dict[str, int] = {}
    fixed = False
    edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if names:
                raise GraphError("vertices: line must precede all edges", lineno)
            for v in line[len("vertices:"):].split():
                if v in index:
                    raise GraphError(f"duplicate vertex {v!r}", lineno)
                index[_check_name(v, lineno)] = len(names)
                names.append(v)
            fixed = True
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphError(f"expected 'u v', got {line!r}", lineno)
        ids = []
        for v in tokens:
            if v not in index:
                if fixed:
                    raise GraphError(f"unknown vertex {v!r}", lineno)
                index[_check_name(v, lineno)] = len(names)
                names.append(v)
            ids.append(index[v])
        e = Edge.of(*ids)
        if e in seen:
            raise GraphError(f"duplicate edge {tokens[0]} {tokens[1]}", lineno)
        seen.add(e)
        edges.append((ids[0], ids[1]))
    if not names:
        raise GraphError("empty graph input", 1)
    return Graph(names, edges)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex partition into components, ordered by least vertex."""
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, part = [s], []
        while stack:
            x = stack.pop()
            part.append(x)
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        parts.append(tuple(sorted(part)))
    return parts


def enumerate_circuits(g: Graph, max_len: int | None = None, *, parity: int | None = None,
                       induced: bool = False) -> list[Circuit]:
    """Simple circuits of ``g`` by DFS from each least vertex.

    ``parity`` filters by length mod 2; ``induced`` keeps only chordless
    circuits whose vertices carry no loops (a loop circuit itself qualifies).
    """
    if max_len is None:
        max_len = g.n
    out: list[Circuit] = []
    if parity in (None, 1) and max_len >= 1:
        out += [Circuit((v,)) for v in sorted(g.loops)]
    adj = g.adj
    blocked_loops = g.loops if induced else frozenset()

    def extend(path: list[int], on_path: set[int]):
        last = path[-1]
        s = path[0]
        for y in adj[last]:
            if y <= s or y in on_path or y in blocked_loops:
                continue
            if induced and any(g.has_edge(y, p) for p in path[1:-1]):
                continue
            if g.has_edge(y, s) and len(path) >= 2:
                length = len(path) + 1
                if path[1] < y and (parity is None or length % 2 == parity):
                    out.append(Circuit(tuple(path) + (y,)))
                if induced:
                    continue
            if len(path) + 1 < max_len:
                path.append(y)
                on_path.add(y)
                extend(path, on_path)
                path.pop()
                on_path.discard(y)

    for s in range(g.n):
        if s in blocked_loops:
            continue
        extend([s], {s})
    out.sort(key=lambda c: (len(c), c.vertices))
    return out


def enumerate_induced_odd_circuits(g: Graph, max_len: int | None = None) -> list[Circuit]:
    """Induced odd circuits of length at most ``max_len`` (default ``|V|``)."""
    if max_len is not None and max_len < 1:
        raise ValueError("max_len must be at least 1")
    return enumerate_circuits(g, max_len, parity=1, induced=True)


def closed_walks(g: Graph, max_len: int, *, even: bool = True, min_len: int = 1) -> Iterator[Walk]:
    """All closed walks up to rotation and reflection, in canonical form."""
    seen: set[tuple[int, ...]] = set()
    for start in range(g.n):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            if len(path) >= min_len and g.has_edge(path[-1], start):
                if not even or len(path) % 2 == 0:
                    key = _canonical_cycle(path)
                    if key[0] == start and key not in seen:
                        seen.add(key)
                        yield Walk(key, True)
            if len(path) < max_len:
                for y in reversed(g.adj[path[-1]]):
                    if y >= start:
                        stack.append(path + (y,))
