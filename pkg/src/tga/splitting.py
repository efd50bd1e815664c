"""Recursive decomposition of even closed walks into even circuits.

Walks are cyclic vertex tuples ``(v0, ..., v_{L-1})`` with steps
``v_k -> v_{k+1 mod L}``.  The decomposition is purely combinatorial: fused
walks may use steps that are not edges of any graph.

Node kinds:

* ``Base``: an even circuit, including the empty walk and one edge
  traversed twice.
* ``Split``: the walk splits at a vertex into two consecutive even closed
  walks.
* ``CrossSplit``: the walk is ``w1 w2 w3 w4`` with ``w1`` and ``w3`` both
  running from ``x1`` to ``x2``; the parts are ``w1 + reverse(w3)`` and
  ``w2 + reverse(w4)``.
* ``Fusion``: the walk is two odd closed walks through ``v`` meeting only at
  ``v``; removing ``v`` and fusing its two steps in each part leaves two
  vertex-disjoint even closed walks.

``reconstruct`` inverts every node exactly, vertex for vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from tga.graph import Walk

__all__ = ["Base", "CrossSplit", "Fusion", "Split", "SplitTree", "leaves", "reconstruct",
           "split_even_closed_walk"]


@dataclass(frozen=True)
class Base:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Split:
    offset: int  # position of the split vertex in the parent
    first: "SplitTree"
    second: "SplitTree"
    length: int


@dataclass(frozen=True)
class CrossSplit:
    length: int
    first_positions: tuple[int, ...]
    second_positions: tuple[int, ...]
    alias: tuple[int, int]  # (position, copied-from position)
    first: "SplitTree"
    second: "SplitTree"


@dataclass(frozen=True)
class Fusion:
    offset: int
    vertex: int
    first: "SplitTree"
    second: "SplitTree"


SplitTree = Union[Base, Split, CrossSplit, Fusion]


def _consecutive_split(vs: Sequence[int]) -> tuple[int, int] | None:
    n = len(vs)
    for i in range(n):
        for j in range(i + 2, n, 2):
            if vs[i] == vs[j]:
                return i, j
    return None


def _cross(vs: Sequence[int], i: int, j: int) -> tuple[int, int] | None:
    """Positions ``p`` in ``(i, j)`` and ``q`` in ``(j, i + n)`` of a shared vertex."""
    n = len(vs)
    inner = {vs[p]: p for p in range(j - 1, i, -1)}
    for q in range(j + 1, i + n):
        u = vs[q % n]
        if u in inner:
            return inner[u], q
    return None


def split_even_closed_walk(walk: Walk | Sequence[int]) -> SplitTree:
    if isinstance(walk, Walk):
        if not walk.closed:
            raise ValueError("walk must be closed")
        vs = tuple(walk.vertices)
    else:
        vs = tuple(walk)
    if len(vs) % 2:
        raise ValueError("walk must have even length")
    return _split(vs)


def _split(vs: tuple[int, ...]) -> SplitTree:
    n = len(vs)
    found = _consecutive_split(vs)
    if found is not None:
        i, j = found
        return Split(i, _split(vs[i:j]), _split(vs[j:] + vs[:i]), n)
    if len(set(vs)) == n:
        return Base(vs)
    # every repeated vertex now recurs at odd gaps; take the first one
    seen: dict[int, int] = {}
    for k, v in enumerate(vs):
        if v in seen:
            i, j = seen[v], k
            break
        seen[v] = k
    cross = _cross(vs, i, j)
    if cross is not None:
        p, q = cross
        first_pos = tuple(range(i, p + 1)) + tuple(range(q - 1, j, -1))
        second_pos = tuple(range(p, j + 1)) + tuple(range(i + n - 1, q, -1))
        first_pos = tuple(k % n for k in first_pos)
        second_pos = tuple(k % n for k in second_pos)
        first = tuple(vs[k] for k in first_pos)
        second = tuple(vs[k] for k in second_pos)
        return CrossSplit(n, first_pos, second_pos, (q % n, p), _split(first), _split(second))
    v = vs[i]
    first = vs[i + 1:j]
    second = (vs[j + 1:] + vs[:i])
    return Fusion(i, v, _split(first), _split(second))


def reconstruct(tree: SplitTree) -> tuple[int, ...]:
    if isinstance(tree, Base):
        return tree.vertices
    if isinstance(tree, Split):
        x = reconstruct(tree.first) + reconstruct(tree.second)
        k = tree.offset
        return x[len(x) - k:] + x[:len(x) - k] if k else x
    if isinstance(tree, CrossSplit):
        out: list[int | None] = [None] * tree.length
        for pos, v in zip(tree.first_positions, reconstruct(tree.first)):
            out[pos] = v
        for pos, v in zip(tree.second_positions, reconstruct(tree.second)):
            out[pos] = v
        dst, src = tree.alias
        out[dst] = out[src]
        return tuple(out)
    x = (tree.vertex,) + reconstruct(tree.first) + (tree.vertex,) + reconstruct(tree.second)
    k = tree.offset
    return x[len(x) - k:] + x[:len(x) - k] if k else x


def leaves(tree: SplitTree) -> list[tuple[int, ...]]:
    if isinstance(tree, Base):
        return [tree.vertices]
    return leaves(tree.first) + leaves(tree.second)


def is_even_circuit(vs: Sequence[int]) -> bool:
    """Even length with distinct vertices (empty and two-vertex walks included)."""
    return len(vs) % 2 == 0 and len(set(vs)) == len(vs)
