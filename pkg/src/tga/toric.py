"""Relations between words in edges and exceptional pairs.

Four relation classes generate all equalities:

``pair-swap``                p_ij p_kl = p_ik p_jl (indices may repeat)
``rotation``                 alternate edge classes of an even closed walk
``pair-destroy``             a pair plus alternate edges of a connecting walk
``pair-shift-shared-cycle``  a cycle-shift multiplied by a common cycle, re-paired

A pair of circuits that is not exceptional has no variable; wherever one
would appear, its edge expansion from ``reduce_circuit_pair`` is used.
Every relation carries the witness it was built from, so it can be
re-derived and checked independently.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from tga.generators import destroy_relation, enumerate_exceptional_pairs, is_exceptional_pair, \
    minimal_generators, reduce_circuit_pair
from tga.graph import Circuit, Edge, Graph, GraphError, Walk, connected_components, \
    enumerate_induced_odd_circuits
from tga.terms import Cycle, Generator, Pair, Word, format_generator, gen_key, generator_weight

__all__ = [
    "BinomialRelation",
    "PAIR_DESTROY",
    "PAIR_SHIFT",
    "PAIR_SWAP",
    "ROTATION",
    "RelationIndex",
    "congruence_check",
    "connect",
    "cycle_shift_solutions",
    "cycles_to_pairs",
    "enumerate_relations",
    "fiber_words",
    "minimal_rotation_walks",
    "pair_word",
    "pairs_to_cycles",
    "saturate",
    "verify_relation",
]

PAIR_SWAP = "pair-swap"
ROTATION = "rotation"
PAIR_DESTROY = "pair-destroy"
PAIR_SHIFT = "pair-shift-shared-cycle"
CLASSES = (PAIR_SWAP, ROTATION, PAIR_DESTROY, PAIR_SHIFT)


@dataclass(frozen=True)
class BinomialRelation:
    left: Word
    right: Word
    kind: str
    witness: tuple = field(default=(), compare=False)

    def key(self):
        a, b = sorted((self.left.sort_key(), self.right.sort_key()))
        return (a, b)

    def format(self, binomial: bool = False) -> str:
        sep = " - " if binomial else " = "
        return f"{self.left.format(power=False) or '1'}{sep}{self.right.format(power=False) or '1'}"

    def to_json(self) -> dict:
        return {"class": self.kind, "left": self.left.format(power=False),
                "right": self.right.format(power=False)}


# -- conversions ---------------------------------------------------------------

def pair_word(g: Graph, a: Circuit, b: Circuit) -> list[Generator]:
    """The pair variable of ``a`` and ``b``, or its edge expansion."""
    if a != b and is_exceptional_pair(a, b, g):
        return [Pair.of(a, b)]
    d = reduce_circuit_pair(a, b, g)
    return list(d.edges) + list(d.pairs)


def pairs_to_cycles(w: Word) -> Word:
    out: list[Generator] = []
    for x in w:
        if isinstance(x, Pair):
            out += [Cycle(x.first), Cycle(x.second)]
        else:
            out.append(x)
    return Word(w.graph, out)


def cycles_to_pairs(w: Word, pairing: Sequence[tuple[Circuit, Circuit]] | None = None) -> Word:
    """Replace cycles by pair variables (or expansions).

    Without an explicit ``pairing``, cycles are sorted per component and
    paired consecutively.
    """
    g = w.graph
    cycles = [x.circuit for x in w if isinstance(x, Cycle)]
    rest = [x for x in w if not isinstance(x, Cycle)]
    if pairing is None:
        pairing = []
        for part in connected_components(g):
            inside = sorted(c for c in cycles if c.vertices[0] in part)
            if len(inside) % 2:
                raise GraphError("odd number of cycles in a component; no pair word exists")
            pairing += list(zip(inside[::2], inside[1::2]))
    else:
        used = Counter()
        for a, b in pairing:
            used[a] += 1
            used[b] += 1
        if used != Counter(cycles):
            raise GraphError("pairing does not match the word's cycles")
    for a, b in pairing:
        if not g.same_component(a.vertices[0], b.vertices[0]):
            raise GraphError("paired cycles lie in different components")
        rest += pair_word(g, a, b)
    return Word(g, rest)


# -- enumeration helpers --------------------------------------------------------------

def minimal_rotation_walks(g: Graph, max_len: int) -> list[Walk]:
    """Canonical even closed walks of length 4..max_len that do not split.

    A walk splits when a vertex recurs at an even distance, so every vertex
    occurs at most twice and repeats sit at odd distances.
    """
    found: set[Walk] = set()
    for s in range(g.n):
        path = [s]
        where: dict[int, list[int]] = {s: [0]}

        def dfs():
            k = len(path)
            if k >= 4 and k % 2 == 0 and s in g.adj[path[-1]]:
                found.add(Walk(tuple(path), True).canonical())
            if k >= max_len:
                return
            for y in g.adj[path[-1]]:
                if y < s:
                    continue
                seen = where.get(y, [])
                if len(seen) >= 2 or any((k - p) % 2 == 0 for p in seen):
                    continue
                path.append(y)
                where.setdefault(y, []).append(k)
                dfs()
                where[y].pop()
                path.pop()

        dfs()
    return sorted(found, key=lambda w: (len(w), w.vertices))


def _simple_connecting_walks(g: Graph, a: Circuit, b: Circuit, max_len: int):
    """Walks from ``a`` to ``b`` with no even closed sub-walk, up to ``max_len`` steps."""
    targets = b.vertex_set
    out = []

    def dfs(path: list[int], where: dict[int, list[int]]):
        k = len(path) - 1
        if k >= 1 and path[-1] in targets:
            out.append(tuple(path))
        if k >= max_len:
            return
        for y in g.adj[path[-1]]:
            seen = where.get(y, [])
            if len(seen) >= 2 or any((k + 1 - p) % 2 == 0 for p in seen):
                continue
            path.append(y)
            where.setdefault(y, []).append(k + 1)
            dfs(path, where)
            where[y].pop()
            path.pop()

    for x in a.vertices:
        dfs([x], {x: [0]})
    return out


def cycle_shift_solutions(g: Graph, c: Circuit, d: Circuit, max_support: int
                          ) -> list[tuple[tuple[Edge, ...], tuple[Edge, ...]]]:
    """Disjoint edge multisets with ``cycle(c) + E1 == cycle(d) + E2``."""
    need = [0] * g.n
    for v in d.vertices:
        need[v] += 1
    for v in c.vertices:
        need[v] -= 1
    at = [[e for e in g.edges if v in (e.u, e.v)] for v in range(g.n)]
    out: set = set()

    def dfs(r: list[int], e1: list[Edge], e2: list[Edge]):
        v = next((i for i, k in enumerate(r) if k), None)
        if v is None:
            out.add((tuple(sorted(e1)), tuple(sorted(e2))))
            return
        if len(e1) + len(e2) >= max_support:
            return
        side, other = (e1, e2) if r[v] > 0 else (e2, e1)
        sign = 1 if r[v] > 0 else -1
        for e in at[v]:
            if e in other:
                continue
            side.append(e)
            r[e.u] -= sign
            r[e.v] -= sign
            dfs(r, e1, e2)
            r[e.u] += sign
            r[e.v] += sign
            side.pop()

    dfs(need, [], [])
    return sorted(out)


def _rel(g: Graph, left: Iterable[Generator], right: Iterable[Generator], kind: str,
         witness: tuple) -> BinomialRelation | None:
    lw, rw = Word(g, left), Word(g, right)
    if lw == rw:
        return None
    return BinomialRelation(lw, rw, kind, witness)


def enumerate_relations(g: Graph, max_walk: int | None = None, max_support: int | None = None,
                        classes: Iterable[str] = CLASSES) -> list[BinomialRelation]:
    """Relations of the four classes within the walk and support bounds."""
    max_walk = 2 * g.n if max_walk is None else max_walk
    max_support = g.n if max_support is None else max_support
    if max_walk < 1 or max_support < 1:
        raise ValueError("bounds must be at least 1")
    classes = set(classes)
    pairs = enumerate_exceptional_pairs(g)
    exceptional = {(p.first, p.second) for p in pairs}
    circuits = enumerate_induced_odd_circuits(g)
    comp = g.component_index
    rels: dict = {}

    def keep(r: BinomialRelation | None):
        if r is not None:
            rels.setdefault(r.key(), r)

    if PAIR_SWAP in classes:
        # indices may repeat; non-exceptional pairs stand for their expansions
        for quad in combinations_with_replacement(circuits, 4):
            if len({comp[c.vertices[0]] for c in quad}) != 1:
                continue
            i, j, k, l = quad
            sides = {}
            for m in (((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k))):
                word = Word(g, pair_word(g, *m[0]) + pair_word(g, *m[1]))
                sides.setdefault(word, m)
            for (w1, m1), (w2, m2) in combinations(sorted(sides.items()), 2):
                keep(_rel(g, w1, w2, PAIR_SWAP, (m1, m2)))
    if ROTATION in classes:
        for w in minimal_rotation_walks(g, max_walk):
            edges = w.edges()
            keep(_rel(g, edges[0::2], edges[1::2], ROTATION, (w,)))
    if PAIR_DESTROY in classes:
        for p in pairs:
            for path in _simple_connecting_walks(g, p.first, p.second, max_walk):
                for parity in (0, 1):
                    lhs, rhs = destroy_relation(p.first, path[0], path, p.second, parity)
                    keep(_rel(g, [p, *lhs], rhs, PAIR_DESTROY, (p, path, parity)))
    if PAIR_SHIFT in classes:
        for c in circuits:
            for d in circuits:
                if c == d or comp[c.vertices[0]] != comp[d.vertices[0]]:
                    continue
                sols = cycle_shift_solutions(g, c, d, max_support)
                if not sols:
                    continue
                for j in circuits:
                    if comp[j.vertices[0]] != comp[c.vertices[0]]:
                        continue
                    left_pair = pair_word(g, c, j)
                    right_pair = pair_word(g, d, j)
                    for e1, e2 in sols:
                        keep(_rel(g, left_pair + list(e1), right_pair + list(e2), PAIR_SHIFT,
                                  (c, d, j, e1, e2)))
    return [rels[k] for k in sorted(rels)]


# -- verification -------------------------------------------------------------------

def verify_relation(r: BinomialRelation) -> bool:
    """Weights agree and the relation is rebuilt exactly from its witness."""
    g = r.left.graph
    try:
        if r.left.weight != r.right.weight:
            return False
    except GraphError:
        return False
    sides = Counter({r.left: 1, r.right: 1})

    def same(left, right) -> bool:
        return Counter({Word(g, left): 1, Word(g, right): 1}) == sides

    w = r.witness
    try:
        if r.kind == PAIR_SWAP:
            m1, m2 = w
            if sorted(c for x in m1 for c in x) != sorted(c for x in m2 for c in x):
                return False
            return same(pair_word(g, *m1[0]) + pair_word(g, *m1[1]),
                        pair_word(g, *m2[0]) + pair_word(g, *m2[1]))
        if r.kind == ROTATION:
            (walk,) = w
            if not g.is_walk(walk) or len(walk) % 2:
                return False
            edges = walk.edges()
            return same(edges[0::2], edges[1::2])
        if r.kind == PAIR_DESTROY:
            p, path, parity = w
            if not is_exceptional_pair(p.first, p.second, g):
                return False
            if not g.is_walk(Walk(tuple(path), False)):
                return False
            lhs, rhs = destroy_relation(p.first, path[0], path, p.second, parity)
            return same([p, *lhs], rhs)
        if r.kind == PAIR_SHIFT:
            c, d, j, e1, e2 = w
            if c == d or set(e1) & set(e2):
                return False
            if Word(g, [Cycle(c), *e1]).weight != Word(g, [Cycle(d), *e2]).weight:
                return False
            return same(pair_word(g, c, j) + list(e1), pair_word(g, d, j) + list(e2))
    except (GraphError, ValueError, TypeError):
        return False
    return False


# -- fibers and congruence ---------------------------------------------------------------

def fiber_words(f: Sequence[int], g: Graph, max_len: int | None = None) -> list[Word]:
    """All words over the minimal generators with at most ``max_len`` factors and weight ``f``.

    Every generator has total weight at least 2, so ``sum(f) // 2`` factors
    always suffice; that is the default.
    """
    f = tuple(f)
    if len(f) != g.n:
        raise GraphError("weight vector does not match the graph")
    if any(k < 0 for k in f) or sum(f) % 2:
        return []
    if max_len is None:
        max_len = sum(f) // 2
    gens = minimal_generators(g)
    weights = [generator_weight(g, x) for x in gens]
    last_cover = [max((i for i, w in enumerate(weights) if w[v]), default=-1) for v in range(g.n)]
    out: list[Word] = []

    def dfs(i: int, r: list[int], chosen: list[Generator]):
        v = next((u for u, k in enumerate(r) if k), None)
        if v is None:
            out.append(Word(g, chosen))
            return
        if i == len(gens) or len(chosen) >= max_len or last_cover[v] < i:
            return
        wk = weights[i]
        m = 0
        while True:
            dfs(i + 1, r, chosen)
            if len(chosen) >= max_len or any(a > b for a, b in zip(wk, r)):
                break
            for u, a in enumerate(wk):
                r[u] -= a
            chosen.append(gens[i])
            m += 1
        for u, a in enumerate(wk):
            r[u] += m * a
        del chosen[len(chosen) - m:]

    dfs(0, list(f), [])
    return sorted(set(out))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


class RelationIndex:
    """Relations keyed by each side, for substitution lookups."""

    def __init__(self, relations: Iterable[BinomialRelation]):
        self.relations = list(relations)
        self.by_side: dict[tuple, list] = defaultdict(list)
        for r in self.relations:
            self.by_side[r.left.items].append((r.right, r))
            self.by_side[r.right.items].append((r.left, r))
        self.limit = max((max(len(r.left), len(r.right)) for r in self.relations), default=0)


def _as_index(relations) -> RelationIndex:
    return relations if isinstance(relations, RelationIndex) else RelationIndex(relations)


def _sub_multisets(items: tuple, limit: int):
    """Nonempty sub-multisets of a word's ``(generator, count)`` items, as items tuples."""
    def rec(k: int, acc: list, size: int):
        if k == len(items):
            if acc:
                yield tuple(acc)
            return
        x, c = items[k]
        yield from rec(k + 1, acc, size)
        for m in range(1, min(c, limit - size) + 1):
            acc.append((x, m))
            yield from rec(k + 1, acc, size + m)
            acc.pop()

    yield from rec(0, [], 0)


def _neighbors(w: Word, index: RelationIndex):
    for sub in _sub_multisets(w.items, index.limit):
        hits = index.by_side.get(sub)
        if not hits:
            continue
        left = [x for x, m in sub for _ in range(m)]
        rest = w - left
        for right, r in hits:
            yield rest + right, r


def saturate(words: Sequence[Word], relations) -> list[list[Word]]:
    """Classes of ``words`` under substitutions that stay inside ``words``.

    ``relations`` is a sequence of relations or a prebuilt ``RelationIndex``.
    """
    words = sorted(set(words))
    pos = {w: i for i, w in enumerate(words)}
    uf = _UnionFind(len(words))
    index = _as_index(relations)
    for w in words:
        for nxt, _ in _neighbors(w, index):
            k = pos.get(nxt)
            if k is not None:
                uf.union(pos[w], k)
    classes: dict[int, list[Word]] = defaultdict(list)
    for w in words:
        classes[uf.find(pos[w])].append(w)
    return sorted(classes.values())


def congruence_check(f: Sequence[int], g: Graph, max_len: int | None = None,
                     relations: Sequence[BinomialRelation] | None = None) -> bool:
    """Whether the relations connect the whole fiber of ``f`` into one class."""
    words = fiber_words(f, g, max_len)
    if len(words) <= 1:
        return True
    if relations is None:
        relations = enumerate_relations(g)
    return len(saturate(words, relations)) == 1


def connect(w1: Word, w2: Word, relations: Sequence[BinomialRelation] | None = None,
            max_len: int | None = None) -> list[tuple[BinomialRelation, Word]] | None:
    """A shortest chain of relation substitutions from ``w1`` to ``w2``.

    Returns ``(relation, word reached)`` steps, or ``None`` when the words
    have different weights or no chain exists inside the fiber.
    """
    g = w1.graph
    if w1.weight != w2.weight:
        return None
    if relations is None:
        relations = enumerate_relations(g)
    if max_len is None:
        max_len = sum(w1.weight) // 2
    index = _as_index(relations)
    prev: dict[Word, tuple] = {w1: None}
    queue = deque([w1])
    while queue:
        w = queue.popleft()
        if w == w2:
            path = []
            while prev[w] is not None:
                before, r = prev[w]
                path.append((r, w))
                w = before
            return path[::-1]
        for nxt, r in _neighbors(w, index):
            if nxt not in prev and len(nxt) <= max_len:
                prev[nxt] = (w, r)
                queue.append(nxt)
    return None


def format_relation_word(g: Graph, gens: Iterable[Generator]) -> str:
    return " ".join(format_generator(g, x) for x in sorted(gens, key=gen_key))
