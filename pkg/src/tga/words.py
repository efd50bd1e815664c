"""Words in edges and cycles, the move calculus, and word equality.

A move replaces a sub-multiset ``source`` of a word by ``target`` of equal
weight.  Kinds:

``rotation``       alternate edge classes of an even closed walk
``half-rotation``  an even-circuit variable and one of its edge classes
``cycle-destroy``  two cycles plus alternate walk edges, and edges
``cycle-shift``    one cycle plus edges on each side

Equality of words is decided constructively: both words are reduced to
standard form (no cycle-destroying move applies), common generators are set
aside, and transfer moves are extracted between the remaining parts until
nothing is left.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable, Sequence

from tga.generators import destroy_relation
from tga.graph import Circuit, Edge, Graph, Walk
from tga.terms import Cycle, EvenCycle, Generator, Word, format_generator, gen_key

__all__ = [
    "CANCEL",
    "CYCLE_DESTROY",
    "CYCLE_SHIFT",
    "HALF_ROTATION",
    "InvalidMoveError",
    "Move",
    "MoveLog",
    "ROTATION",
    "apply_move",
    "destroy_move",
    "equal_words",
    "factor_rotation",
    "find_cycle_destroying_moves",
    "find_transfer_move",
    "half_rotations",
    "is_restricted_rotation",
    "is_standard",
    "rotation_move",
    "shift_move",
    "to_standard_form",
    "word_weight",
]

ROTATION = "rotation"
HALF_ROTATION = "half-rotation"
CYCLE_DESTROY = "cycle-destroy"
CYCLE_SHIFT = "cycle-shift"
CANCEL = "cancel"


class InvalidMoveError(ValueError):
    pass


def _sorted(gens: Iterable[Generator]) -> tuple[Generator, ...]:
    return tuple(sorted(gens, key=gen_key))


@dataclass(frozen=True)
class Move:
    kind: str
    source: tuple[Generator, ...]
    target: tuple[Generator, ...]
    walks: tuple[Walk, ...] = ()
    reverse: bool = False

    def reversed(self) -> "Move":
        return replace(self, source=self.target, target=self.source, reverse=not self.reverse)

    def sort_key(self):
        return (tuple(map(gen_key, self.source)), tuple(map(gen_key, self.target)))

    def to_json(self, g: Graph) -> dict:
        return {
            "kind": self.kind,
            "source": " ".join(format_generator(g, x) for x in self.source),
            "target": " ".join(format_generator(g, x) for x in self.target),
            "support": [_walk_str(g, w) for w in self.walks],
            "reverse": self.reverse,
        }


def _walk_str(g: Graph, w: Walk) -> str:
    vs = list(w.vertices)
    if w.closed and vs:
        vs.append(vs[0])
    return "-".join(g.names[v] for v in vs)


def _check(g: Graph, m: Move) -> Move:
    if Word(g, m.source).weight != Word(g, m.target).weight:
        raise InvalidMoveError(f"{m.kind} move does not preserve weight")
    return m


def word_weight(w: Word) -> tuple[int, ...]:
    return w.weight


def apply_move(w: Word, m: Move) -> Word:
    if not w.contains(m.source):
        missing = Counter(m.source) - w.counter()
        names = " ".join(format_generator(w.graph, x) for x in sorted(missing.elements(), key=gen_key))
        raise InvalidMoveError(f"word lacks the move's source generators: {names}")
    _check(w.graph, m)
    return (w - m.source) + m.target


# -- move constructors ------------------------------------------------------

def rotation_move(g: Graph, walk: Walk, parity: int = 0) -> Move:
    """Rotation taking the edges at positions of ``parity`` to the others."""
    if not walk.closed or len(walk) % 2:
        raise InvalidMoveError("rotations need an even closed walk")
    if not g.is_walk(walk):
        raise InvalidMoveError("rotation walk is not a walk of the graph")
    edges = walk.edges()
    src = [e for i, e in enumerate(edges) if i % 2 == parity]
    tgt = [e for i, e in enumerate(edges) if i % 2 != parity]
    return _check(g, Move(ROTATION, _sorted(src), _sorted(tgt), (walk,)))


def destroy_move(g: Graph, c1: Circuit, x: int, walk: Sequence[int], c2: Circuit, parity: int) -> Move:
    """The cycle-destroying move ``c1 + c2 + lhs -> rhs`` (see ``destroy_relation``)."""
    lhs, rhs = destroy_relation(c1, x, walk, c2, parity)
    support = (Walk(tuple(walk) if walk else (x,), False),)
    m = Move(CYCLE_DESTROY, _sorted([Cycle(c1), Cycle(c2)] + lhs), _sorted(rhs), support)
    return _check(g, m)


def _alternating_ok(walk: Walk, plus: Counter, minus: Counter) -> bool:
    need_plus, need_minus = Counter(), Counter()
    for i, e in enumerate(walk.edges()):
        (need_minus if i % 2 == 0 else need_plus)[e] += 1
    return all(plus[e] >= k for e, k in need_plus.items()) and all(
        minus[e] >= k for e, k in need_minus.items()
    )


def shift_move(g: Graph, c_src: Circuit, c_tgt: Circuit, src_edges: Sequence[Edge],
               tgt_edges: Sequence[Edge], walks: Sequence[Walk]) -> Move:
    """A cycle-shift, validated against its configuration of walks.

    Every walk starts at a vertex on exactly one of the two circuits and
    leaves it by a target edge, alternates target/source edges, and ends on
    a circuit: odd length when both ends lie on the same circuit, even when
    they lie on different circuits.  The walk ends are exactly the vertices
    on one circuit but not both, and the walks use up all edges.
    """
    if c_src == c_tgt:
        raise InvalidMoveError("a cycle-shift needs two different cycles")
    a, b = c_src.vertex_set, c_tgt.vertex_set
    only = (a | b) - (a & b)
    ends: list[int] = []
    plus, minus = Counter(src_edges), Counter(tgt_edges)
    used_plus, used_minus = Counter(), Counter()
    for w in walks:
        if w.closed or len(w) == 0:
            raise InvalidMoveError("cycle-shift walks are open and nonempty")
        s, t = w.vertices[0], w.vertices[-1]
        ends += [s, t]
        # a walk leaving the source cycle starts with a target edge
        s_side = s in a
        t_side = t in a
        forward = w if s_side else Walk(w.vertices[::-1], False)
        if not s_side and not t_side:
            forward = w
        first_sign_target = (forward.vertices[0] in a)
        same = (s in a) == (t in a)
        if same != (len(w) % 2 == 1):
            raise InvalidMoveError("cycle-shift walk has the wrong parity")
        if first_sign_target:
            if not _alternating_ok(forward, plus, minus):
                raise InvalidMoveError("cycle-shift walk does not alternate")
            seq = forward.edges()
            for i, e in enumerate(seq):
                (used_minus if i % 2 == 0 else used_plus)[e] += 1
        else:
            # both ends on the target cycle: starts with a source edge
            if not _alternating_ok(forward, minus, plus):
                raise InvalidMoveError("cycle-shift walk does not alternate")
            for i, e in enumerate(forward.edges()):
                (used_plus if i % 2 == 0 else used_minus)[e] += 1
    if sorted(ends) != sorted(only) or len(set(ends)) != len(ends):
        raise InvalidMoveError("cycle-shift walk ends must be the vertices on exactly one cycle")
    if used_plus != plus or used_minus != minus:
        raise InvalidMoveError("cycle-shift walks must use exactly the moved edges")
    m = Move(CYCLE_SHIFT, _sorted([Cycle(c_src), *src_edges]), _sorted([Cycle(c_tgt), *tgt_edges]),
             tuple(walks))
    return _check(g, m)


def half_rotations(g: Graph, rot: Move) -> list[Move]:
    """Two half-rotations through the even-circuit variable realizing ``rot``."""
    (walk,) = rot.walks
    if not walk.is_circuit() or len(walk) < 4:
        raise InvalidMoveError("half-rotations need an even circuit of length at least 4")
    h = EvenCycle(Circuit.of(walk.vertices))
    first = _check(g, Move(HALF_ROTATION, rot.source, (h,), rot.walks))
    second = _check(g, Move(HALF_ROTATION, (h,), rot.target, rot.walks))
    return [first, second]


# -- logs --------------------------------------------------------------------

@dataclass(frozen=True)
class LogEntry:
    kind: str
    move: Move | None
    source: tuple[Generator, ...]
    target: tuple[Generator, ...]


@dataclass
class MoveLog:
    """Ordered moves; ``cancel`` entries only record set-aside generators."""

    entries: list[LogEntry] = field(default_factory=list)

    def add(self, m: Move):
        self.entries.append(LogEntry(m.kind, m, m.source, m.target))

    def note_cancel(self, common: Word):
        gens = tuple(common)
        self.entries.append(LogEntry(CANCEL, None, gens, gens))

    def extend(self, other: "MoveLog"):
        self.entries += other.entries

    def moves(self) -> list[Move]:
        return [e.move for e in self.entries if e.move is not None]

    def __len__(self) -> int:
        return len(self.moves())

    def inverse(self) -> "MoveLog":
        out = MoveLog()
        for e in reversed(self.entries):
            if e.move is None:
                out.entries.append(e)
            else:
                out.add(e.move.reversed())
        return out

    def replay(self, w: Word) -> Word:
        for m in self.moves():
            w = apply_move(w, m)
        return w

    def to_json(self, g: Graph) -> list[dict]:
        out = []
        for e in self.entries:
            if e.move is None:
                out.append({"kind": CANCEL, "common": " ".join(format_generator(g, x) for x in e.source)})
            else:
                out.append(e.move.to_json(g))
        return out


# -- standard form -------------------------------------------------------------

def _destroy_walks(g: Graph, c1: Circuit, c2: Circuit, parity: int, budget: Counter,
                   max_len: int):
    """Walks from ``c1`` to ``c2`` whose lhs-class edges fit in ``budget``.

    Walk edge ``k`` (1-based) sits at position ``len(c1) + k - 1`` of the
    closed walk; positions of ``parity`` go to the right-hand side, the
    others must be drawn from the word.
    """
    l1 = len(c1)
    targets = c2.vertex_set
    out = []

    def dfs(path: list[int], left: Counter):
        if len(path) > 1 and path[-1] in targets:
            out.append(tuple(path))
        if len(path) - 1 >= max_len:
            return
        pos = l1 + len(path) - 1
        from_word = pos % 2 != parity
        for y in g.adj[path[-1]]:
            e = Edge.of(path[-1], y)
            if from_word:
                if left[e] <= 0:
                    continue
                left[e] -= 1
                path.append(y)
                dfs(path, left)
                path.pop()
                left[e] += 1
            else:
                path.append(y)
                dfs(path, left)
                path.pop()

    for x in c1.vertices:
        dfs([x], budget.copy())
    return out


def find_cycle_destroying_moves(w: Word) -> list[Move]:
    """All cycle-destroying moves applicable to ``w``, sorted."""
    g = w.graph
    counts = w.counter()
    cycles = sorted({x.circuit for x in counts if isinstance(x, Cycle)})
    edge_budget = Counter({x: k for x, k in counts.items() if isinstance(x, Edge)})
    max_len = 2 * sum(edge_budget.values()) + 1
    moves: dict[tuple, Move] = {}

    def keep(m: Move):
        if w.contains(m.source):
            moves.setdefault(m.sort_key(), m)

    for i, c1 in enumerate(cycles):
        for c2 in cycles[i:]:
            if c1 == c2:
                if counts[Cycle(c1)] >= 2:
                    x = c1.vertices[0]
                    keep(destroy_move(g, c1, x, (x,), c1, 0))
                continue
            for x in sorted(c1.vertex_set & c2.vertex_set):
                for parity in (0, 1):
                    keep(destroy_move(g, c1, x, (x,), c2, parity))
            for parity in (0, 1):
                for path in _destroy_walks(g, c1, c2, parity, edge_budget, max_len):
                    keep(destroy_move(g, c1, path[0], path, c2, parity))
    return [moves[k] for k in sorted(moves)]


def is_standard(w: Word) -> bool:
    return not find_cycle_destroying_moves(w)


def to_standard_form(w: Word) -> tuple[Word, MoveLog]:
    log = MoveLog()
    while True:
        moves = find_cycle_destroying_moves(w)
        if not moves:
            return w, log
        m = moves[0]
        w = apply_move(w, m)
        log.add(m)


# -- transfer moves ----------------------------------------------------------------

@dataclass
class _Occ:
    edge: Edge
    sign: int  # +1 from the first word, -1 from the second


def _alternating_walks(plus: list[Edge], minus: list[Edge]):
    """Group signed edge occurrences into maximal alternating walks.

    Returns ``(vertices, occurrence ids, closed)`` triples; ``vertices`` has
    one more entry than the ids for open walks.
    """
    occs = [_Occ(e, 1) for e in plus] + [_Occ(e, -1) for e in minus]
    order = sorted(range(len(occs)), key=lambda i: (occs[i].edge, -occs[i].sign))
    at: dict[int, list[int]] = defaultdict(list)
    for i in order:
        e = occs[i].edge
        at[e.u].append(i)
        if not e.is_loop:
            at[e.v].append(i)
    used = [False] * len(occs)

    def take(vertex: int, sign: int) -> int | None:
        best = None
        for i in at[vertex]:
            if not used[i] and occs[i].sign == sign:
                key = (occs[i].edge.other(vertex), occs[i].edge)
                if best is None or key < best[0]:
                    best = (key, i)
        return None if best is None else best[1]

    walks = []
    for start in order:
        if used[start]:
            continue
        used[start] = True
        e0 = occs[start].edge
        a, b = e0.u, e0.v
        verts, ids = [a, b], [start]
        closed = False
        while True:
            if verts[-1] == verts[0] and occs[ids[-1]].sign != occs[ids[0]].sign:
                closed = True
                break
            i = take(verts[-1], -occs[ids[-1]].sign)
            if i is None:
                break
            used[i] = True
            ids.append(i)
            verts.append(occs[i].edge.other(verts[-1]))
        if not closed:
            while True:
                i = take(verts[0], -occs[ids[0]].sign)
                if i is None:
                    break
                used[i] = True
                ids.insert(0, i)
                verts.insert(0, occs[i].edge.other(verts[0]))
        walks.append((verts, ids, closed, occs))
    return walks


def find_transfer_move(w1: Word, w2: Word) -> Move:
    """A rotation or cycle-shift moving a subword of ``w1`` onto a subword of ``w2``."""
    g = w1.graph
    if not w1 or not w2:
        raise ValueError("transfer moves need nonempty words")
    if w1.weight != w2.weight:
        raise ValueError("words have different weights")
    if w1.common(w2):
        raise ValueError("words must be disjoint")
    walks = _alternating_walks(w1.edges(), w2.edges())
    for verts, ids, closed, occs in walks:
        if closed:
            edges = [occs[i].edge for i in ids]
            parity = 0 if occs[ids[0]].sign == 1 else 1
            walk = Walk(tuple(verts[:-1]), True)
            m = rotation_move(g, walk, parity)
            if Counter(m.source) != Counter(e for e, i in zip(edges, ids) if occs[i].sign == 1):
                raise AssertionError("rotation classes disagree with signs")
            return m

    plus_cycles = sorted(x.circuit for x in set(w1.cycles()))
    minus_cycles = sorted(x.circuit for x in set(w2.cycles()))
    if not plus_cycles or not minus_cycles:
        raise AssertionError("open alternating walks without cycles on both sides")
    cyc_sign = {c: 1 for c in plus_cycles}
    cyc_sign.update({c: -1 for c in minus_cycles})

    def owner(vertex: int, sign: int) -> Circuit:
        found = [c for c, s in cyc_sign.items() if s == sign and vertex in c.vertex_set]
        if len(found) != 1:
            raise AssertionError("walk end does not lie on exactly one cycle")
        return found[0]

    links: dict[Circuit, set[Circuit]] = defaultdict(set)
    attached: dict[Circuit, list[int]] = defaultdict(list)
    for k, (verts, ids, closed, occs) in enumerate(walks):
        s_cyc = owner(verts[0], -occs[ids[0]].sign)
        t_cyc = owner(verts[-1], -occs[ids[-1]].sign)
        links[s_cyc].add(t_cyc)
        links[t_cyc].add(s_cyc)
        attached[s_cyc].append(k)
        attached[t_cyc].append(k)
    for c in plus_cycles:
        for d in minus_cycles:
            if c.vertex_set & d.vertex_set:
                links[c].add(d)
                links[d].add(c)

    c = plus_cycles[0]
    partners = sorted(d for d in links[c] if cyc_sign[d] == -1)
    if len(partners) != 1:
        raise AssertionError("cycle correspondence is not a bijection")
    d = partners[0]
    if any(cyc_sign[x] == 1 and x != c for x in links[d]):
        raise AssertionError("cycle correspondence is not a bijection")
    chosen = sorted(set(attached[c]) | set(attached[d]))
    src, tgt, support = [], [], []
    for k in chosen:
        verts, ids, _, occs = walks[k]
        for i in ids:
            (src if occs[i].sign == 1 else tgt).append(occs[i].edge)
        support.append(Walk(tuple(verts), False))
    return shift_move(g, c, d, src, tgt, support)


def equal_words(w1: Word, w2: Word) -> MoveLog | None:
    """A log transforming ``w1`` into ``w2``, or ``None`` for different weights."""
    if w1.weight != w2.weight:
        return None
    s1, log1 = to_standard_form(w1)
    s2, log2 = to_standard_form(w2)
    log = MoveLog()
    log.extend(log1)
    common = s1.common(s2)
    u1, u2 = s1 - common, s2 - common
    if common:
        log.note_cancel(common)
    while u1 or u2:
        m = find_transfer_move(u1, u2)
        u1 = u1 - m.source
        u2 = u2 - m.target
        log.add(m)
    log.extend(log2.inverse())
    return log


# -- rotation factorization ------------------------------------------------------------

def _chord_split(g: Graph, ring: Sequence[int]) -> tuple[int, int] | None:
    """Indices ``i < j`` of a chord cutting an even circuit into two even circuits."""
    k = len(ring)
    for i in range(k):
        for j in range(i + 3, k, 2):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(ring[i], ring[j]):
                return i, j
    return None


def is_restricted_rotation(g: Graph, walk: Walk) -> bool:
    """Rotation allowed in a factorization: an even circuit with no splitting chord."""
    return walk.is_circuit() and len(walk) >= 4 and _chord_split(g, walk.vertices) is None


def _find_split(verts: Sequence[int]) -> tuple[int, int] | None:
    n = len(verts)
    for i in range(n):
        for j in range(i + 2, n, 2):
            if verts[i] == verts[j]:
                return i, j
    return None


def _find_circuit(verts: Sequence[int], lo: int, hi: int) -> tuple[int, int]:
    """A contiguous closed sub-walk ``[p, q)`` of ``[lo, hi)`` with distinct vertices."""
    while True:
        seen: dict[int, int] = {}
        for p in range(lo, hi):
            v = verts[p]
            if v in seen:
                lo, hi = seen[v], p
                break
            seen[v] = p
        else:
            return lo, hi


def _factor(g: Graph, verts: tuple[int, ...], labels: tuple[bool, ...]) -> list[Move]:
    n = len(verts)
    if n <= 2:
        return []
    split = _find_split(verts)
    if split is not None:
        i, j = split
        inner = verts[i:j], labels[i:j]
        outer = verts[j:] + verts[:i], labels[j:] + labels[:i]
        return _factor(g, *inner) + _factor(g, *outer)
    if len(set(verts)) == n:
        chord = _chord_split(g, verts)
        if chord is None:
            parity = 0 if labels[0] else 1
            return [rotation_move(g, Walk(tuple(verts), True), parity)]
        i, j = chord
        # sub-circuit one: positions i..j-1 then the chord back to verts[i]
        v1, l1 = verts[i:j + 1], labels[i:j] + (not labels[j - 1],)
        v2 = verts[j:] + verts[:i + 1]
        l2 = labels[j:] + labels[:i] + (not labels[i - 1] if i > 0 else not labels[-1],)
        first, second = ((v1, l1), (v2, l2)) if not l1[-1] else ((v2, l2), (v1, l1))
        return _factor(g, *first) + _factor(g, *second)
    return _factor_through_cycles(g, verts, labels)


def _factor_through_cycles(g: Graph, verts: tuple[int, ...], labels: tuple[bool, ...]) -> list[Move]:
    n = len(verts)
    i = next(k for k in range(n) if verts.index(verts[k]) != k)
    i, j = verts.index(verts[i]), i
    # rotate so the repeated vertex sits at position 0
    verts, labels = verts[i:] + verts[:i], labels[i:] + labels[:i]
    j -= i
    p1, q1 = _find_circuit(verts, 0, j)
    p2, q2 = _find_circuit(verts, j, n)
    c1 = Circuit.of(verts[p1:q1])
    c2 = Circuit.of(verts[p2:q2])
    x1, x2 = verts[p1], verts[p2]
    ext = verts + verts
    walk_a = ext[q1:p2 + 1]               # x1 -> x2
    walk_b = ext[q2:n + p1 + 1][::-1]     # x1 -> x2 along the other side
    edges = [Edge.of(verts[k], verts[(k + 1) % n]) for k in range(n)]
    src = Counter(e for e, lab in zip(edges, labels) if lab)
    tgt = Counter(e for e, lab in zip(edges, labels) if not lab)
    cycles = Counter([Cycle(c1), Cycle(c2)])
    for wa, wb in ((walk_a, walk_b), (walk_b, walk_a)):
        for pa, pb in product((0, 1), repeat=2):
            m1 = destroy_move(g, c1, x1, wa, c2, pa).reversed()
            m2 = destroy_move(g, c1, x1, wb, c2, pb)
            state = src.copy()
            if any(state[x] < k for x, k in Counter(m1.source).items()):
                continue
            state -= Counter(m1.source)
            state += Counter(m1.target)
            if any(state[x] < k for x, k in Counter(m2.source).items()):
                continue
            state -= Counter(m2.source)
            state += Counter(m2.target)
            if state == tgt:
                return [m1, m2]
    raise AssertionError(f"no cycle-destroying factorization found for {verts}")


def factor_rotation(g: Graph, rot: Move) -> MoveLog:
    """Realize a rotation by restricted rotations and cycle-destroying moves."""
    if rot.kind != ROTATION:
        raise InvalidMoveError("factor_rotation needs a rotation move")
    (walk,) = rot.walks
    edges = walk.edges()
    src = Counter(rot.source)
    # recover the position classes from the move's source
    parity = 0 if Counter(edges[0::2]) == src else 1
    if Counter(edges[parity::2]) != src:
        raise InvalidMoveError("rotation source is not an alternate edge class of its walk")
    labels = tuple(k % 2 == parity for k in range(len(edges)))
    log = MoveLog()
    for m in _factor(g, walk.vertices, labels):
        log.add(m)
    return log
