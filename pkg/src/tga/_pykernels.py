"""Pure-Python versions of the box-enumeration kernels.

Points of the box ``[0, cap]^n`` are encoded in mixed radix ``cap + 1`` with
vertex 0 as the least significant digit.
"""

from __future__ import annotations


def edge_sum_closure(n: int, edges: list[tuple[int, int]], cap: int) -> bytearray:
    """Flags for points of the box that are sums of edge vectors."""
    base = cap + 1
    size = base ** n
    place = [base ** v for v in range(n)]
    steps = []
    for u, v in edges:
        if u == v:
            if cap >= 2:
                steps.append(((u, 2),))
        else:
            steps.append(((u, 1), (v, 1)))
    offsets = [sum(k * place[v] for v, k in s) for s in steps]
    out = bytearray(size)
    out[0] = 1
    for idx in range(size):
        if not out[idx]:
            continue
        digits = [(idx // place[v]) % base for v in range(n)]
        for s, off in zip(steps, offsets):
            if all(digits[v] + k <= cap for v, k in s):
                out[idx + off] = 1
    return out


def indecomposable(member: bytes, n: int, cap: int) -> bytearray:
    """Flags for nonzero members that are not a sum of two nonzero members."""
    base = cap + 1
    size = base ** n
    place = [base ** v for v in range(n)]
    out = bytearray(size)
    for w in range(1, size):
        if not member[w]:
            continue
        digits = [(w // place[v]) % base for v in range(n)]
        split = False
        # enumerate a <= w in mixed radix
        a = [0] * n
        while True:
            v = 0
            while v < n and a[v] == digits[v]:
                a[v] = 0
                v += 1
            if v == n:
                break
            a[v] += 1
            ia = sum(a[i] * place[i] for i in range(n))
            if ia != w and member[ia] and member[w - ia]:
                split = True
                break
        if not split:
            out[w] = 1
    return out


def cover_flow(n: int, adj: list[list[int]], f: list[int]) -> tuple[int, list, bytearray]:
    """Maximum flow on the bipartite double cover with supplies and demands ``f``.

    Node ids: 0 source, ``1..n`` left copies, ``n+1..2n`` right copies,
    ``2n+1`` sink; arc ``u' -> v''`` for every ``v`` in ``adj[u]``.  Returns
    the flow value, the ``(u, v, flow)`` triples of loaded cover arcs, and
    flags for nodes reachable from the source in the final residual network.
    """
    size = 2 * n + 2
    src, snk = 0, size - 1
    inf = sum(f) + 1
    cap = [[0] * size for _ in range(size)]
    out: list[list[int]] = [[] for _ in range(size)]
    for u in range(n):
        cap[src][1 + u] = f[u]
        cap[n + 1 + u][snk] = f[u]
        out[src].append(1 + u)
        out[1 + u].append(src)
        out[n + 1 + u].append(snk)
        out[snk].append(n + 1 + u)
        for v in adj[u]:
            cap[1 + u][n + 1 + v] = inf
            out[1 + u].append(n + 1 + v)
            out[n + 1 + v].append(1 + u)
    total = 0
    while True:
        prev = [-1] * size
        prev[src] = src
        queue = [src]
        head = 0
        while head < len(queue) and prev[snk] < 0:
            x = queue[head]
            head += 1
            row = cap[x]
            for y in out[x]:
                if prev[y] < 0 and row[y] > 0:
                    prev[y] = x
                    queue.append(y)
        if prev[snk] < 0:
            break
        push = inf
        y = snk
        while y != src:
            x = prev[y]
            push = min(push, cap[x][y])
            y = x
        y = snk
        while y != src:
            x = prev[y]
            cap[x][y] -= push
            cap[y][x] += push
            y = x
        total += push
    loaded = [(u, v, cap[n + 1 + v][1 + u]) for u in range(n) for v in adj[u]
              if cap[n + 1 + v][1 + u]]
    return total, loaded, bytearray(int(p >= 0) for p in prev)
