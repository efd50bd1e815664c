"""Generator variables (edges, cycles, pairs) and words over them.

Token syntax::

    e:u-v            edge (u = v is a loop)
    c:v1-v2-...-vk   cycle on an odd circuit
    p:(v1-...|u1-...)  pair of two odd circuits
    h:v1-...-vk      half-weighted even circuit (transient)

Weights are integer tuples aligned with the graph's vertex order.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from tga.graph import Circuit, Edge, Graph, GraphError

__all__ = [
    "Cycle",
    "EvenCycle",
    "Generator",
    "Pair",
    "Word",
    "add",
    "format_generator",
    "format_weight",
    "generator_weight",
    "parse_generator",
    "parse_weight",
    "parse_word",
    "sub",
]

Weight = tuple  # tuple[int, ...]


@dataclass(frozen=True, order=True)
class Cycle:
    circuit: Circuit


@dataclass(frozen=True, order=True)
class EvenCycle:
    circuit: Circuit


@dataclass(frozen=True, order=True)
class Pair:
    first: Circuit
    second: Circuit

    @staticmethod
    def of(a: Circuit, b: Circuit) -> "Pair":
        return Pair(a, b) if a <= b else Pair(b, a)

    @property
    def circuits(self) -> tuple[Circuit, Circuit]:
        return (self.first, self.second)


Generator = Union[Edge, Cycle, Pair, EvenCycle]

_KIND = {Edge: 0, Cycle: 1, Pair: 2, EvenCycle: 3}


def gen_key(x: Generator):
    if isinstance(x, Edge):
        return (0, (x.u, x.v))
    if isinstance(x, Cycle):
        return (1, x.circuit.vertices)
    if isinstance(x, Pair):
        return (2, x.first.vertices, x.second.vertices)
    return (3, x.circuit.vertices)


def zero(n: int) -> Weight:
    return (0,) * n


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def generator_weight(g: Graph, x: Generator) -> Weight:
    cached = g.weight_cache.get(x)
    if cached is not None:
        return cached
    w = _generator_weight(g, x)
    g.weight_cache[x] = w
    return w


def _generator_weight(g: Graph, x: Generator) -> Weight:
    w = [0] * g.n
    if isinstance(x, Edge):
        if not g.has_edge(x.u, x.v):
            raise GraphError(f"{g.edge_name(x)} is not an edge of the graph")
        w[x.u] += 1
        w[x.v] += 1
    elif isinstance(x, (Cycle, EvenCycle)):
        _check_circuit(g, x.circuit)
        for v in x.circuit.vertices:
            w[v] += 1
    elif isinstance(x, Pair):
        for c in x.circuits:
            _check_circuit(g, c)
            for v in c.vertices:
                w[v] += 1
    else:
        raise TypeError(f"not a generator: {x!r}")
    return tuple(w)


def _check_circuit(g: Graph, c: Circuit):
    if any(v >= g.n for v in c.vertices) or not g.is_circuit(c):
        raise GraphError(f"{c.vertices} is not a circuit of the graph")


class Word:
    """An immutable multiset of generators over a fixed graph."""

    __slots__ = ("graph", "items", "_weight", "_hash", "_len")

    def __init__(self, graph: Graph, gens: Iterable[Generator] = ()):
        self.graph = graph
        counts = Counter(gens)
        self.items: tuple[tuple[Generator, int], ...] = tuple(
            sorted(((x, k) for x, k in counts.items() if k > 0), key=lambda t: gen_key(t[0]))
        )
        self._weight = None
        self._hash = None
        self._len = sum(k for _, k in self.items)

    @classmethod
    def from_counter(cls, graph: Graph, counts: Counter) -> "Word":
        return cls(graph, counts.elements())

    def __iter__(self):
        for x, k in self.items:
            for _ in range(k):
                yield x

    def __len__(self) -> int:
        return self._len

    def __bool__(self) -> bool:
        return bool(self.items)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.items == other.items

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.items)
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple((gen_key(x), k) for x, k in self.items)

    def __repr__(self) -> str:
        return f"Word({self.format()!r})"

    def counter(self) -> Counter:
        return Counter(dict(self.items))

    def count(self, x: Generator) -> int:
        return dict(self.items).get(x, 0)

    def contains(self, other: "Word | Iterable[Generator]") -> bool:
        mine = self.counter()
        need = Counter(other)
        return all(mine[x] >= k for x, k in need.items())

    def __add__(self, other: "Word | Iterable[Generator]") -> "Word":
        return Word(self.graph, list(self) + list(other))

    def __sub__(self, other: "Word | Iterable[Generator]") -> "Word":
        c = self.counter()
        c.subtract(Counter(other))
        if any(k < 0 for k in c.values()):
            raise ValueError("subtracting generators absent from the word")
        return Word.from_counter(self.graph, c)

    def common(self, other: "Word") -> "Word":
        return Word.from_counter(self.graph, self.counter() & other.counter())

    @property
    def weight(self) -> Weight:
        if self._weight is None:
            w = [0] * self.graph.n
            for x, k in self.items:
                for v, c in enumerate(generator_weight(self.graph, x)):
                    w[v] += k * c
            self._weight = tuple(w)
        return self._weight

    def edges(self) -> list[Edge]:
        return [x for x in self if isinstance(x, Edge)]

    def cycles(self) -> list[Cycle]:
        return [x for x in self if isinstance(x, Cycle)]

    def pairs(self) -> list[Pair]:
        return [x for x in self if isinstance(x, Pair)]

    def format(self, power: bool = True) -> str:
        if power:
            parts = [
                format_generator(self.graph, x) + (f"^{k}" if k > 1 else "")
                for x, k in self.items
            ]
        else:
            parts = [format_generator(self.graph, x) for x in self]
        return " ".join(parts)


def format_generator(g: Graph, x: Generator) -> str:
    names = g.names
    if isinstance(x, Edge):
        return f"e:{names[x.u]}-{names[x.v]}"
    if isinstance(x, Cycle):
        return "c:" + "-".join(names[v] for v in x.circuit.vertices)
    if isinstance(x, EvenCycle):
        return "h:" + "-".join(names[v] for v in x.circuit.vertices)
    a = "-".join(names[v] for v in x.first.vertices)
    b = "-".join(names[v] for v in x.second.vertices)
    return f"p:({a}|{b})"


_TOKEN = re.compile(r"^([ecph]):(.+?)(?:\^(\d+))?$")


def _circuit_of(g: Graph, text: str, token: str) -> Circuit:
    verts = [g.index(v) for v in text.split("-")]
    try:
        c = Circuit.of(verts)
    except ValueError as exc:
        raise GraphError(f"{token}: {exc}") from None
    if not g.is_circuit(c):
        raise GraphError(f"{token}: not a circuit of the graph")
    return c


def parse_generator(g: Graph, token: str) -> tuple[Generator, int]:
    """Parse one token, returning the generator and its multiplicity."""
    m = _TOKEN.match(token.strip())
    if not m:
        raise GraphError(f"malformed generator token {token!r}")
    kind, body, power = m.group(1), m.group(2), m.group(3)
    k = int(power) if power else 1
    if kind == "e":
        parts = body.split("-")
        if len(parts) != 2:
            raise GraphError(f"malformed edge token {token!r}")
        return g.edge(g.index(parts[0]), g.index(parts[1])), k
    if kind in "ch":
        c = _circuit_of(g, body, token)
        if kind == "c":
            if not c.is_odd:
                raise GraphError(f"{token}: cycle variables need an odd circuit")
            return Cycle(c), k
        if c.is_odd:
            raise GraphError(f"{token}: half-rotation variables need an even circuit")
        return EvenCycle(c), k
    if not (body.startswith("(") and body.endswith(")") and body.count("|") == 1):
        raise GraphError(f"malformed pair token {token!r}")
    left, right = body[1:-1].split("|")
    a, b = _circuit_of(g, left, token), _circuit_of(g, right, token)
    if not (a.is_odd and b.is_odd):
        raise GraphError(f"{token}: pairs need two odd circuits")
    return Pair.of(a, b), k


def parse_word(g: Graph, text: str) -> Word:
    gens: list[Generator] = []
    for token in text.split():
        x, k = parse_generator(g, token)
        gens += [x] * k
    return Word(g, gens)


def parse_weight(g: Graph, text: str) -> Weight:
    """Parse ``"v=k, u=j"``; omitted vertices are zero."""
    w = [0] * g.n
    text = text.strip()
    if not text:
        return tuple(w)
    for entry in text.split(","):
        entry = entry.strip()
        if not entry:
            continue
        if "=" not in entry:
            raise GraphError(f"malformed weight entry {entry!r}")
        name, value = (s.strip() for s in entry.split("=", 1))
        v = g.index(name)
        try:
            w[v] += int(value)
        except ValueError:
            raise GraphError(f"weight of {name!r} must be an integer") from None
    return tuple(w)


def format_weight(g: Graph, w: Weight) -> str:
    return ",".join(f"{g.names[v]}={k}" for v, k in enumerate(w) if k)
