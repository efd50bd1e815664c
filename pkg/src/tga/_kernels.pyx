# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled box-enumeration kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free


def edge_sum_closure(int n, list edges, int cap):
    cdef int base = cap + 1
    cdef long size = 1
    cdef int i, v, s, nsteps, a, b
    for i in range(n):
        size *= base
    cdef long *place = <long *> malloc(n * sizeof(long))
    cdef int *su = <int *> malloc((len(edges) + 1) * sizeof(int))
    cdef int *sv = <int *> malloc((len(edges) + 1) * sizeof(int))
    cdef long *off = <long *> malloc((len(edges) + 1) * sizeof(long))
    cdef int *digits = <int *> malloc(n * sizeof(int))
    place[0] = 1
    for i in range(1, n):
        place[i] = place[i - 1] * base
    nsteps = 0
    for e in edges:
        a, b = e
        if a == b:
            if cap < 2:
                continue
            su[nsteps] = a; sv[nsteps] = a; 
            off[nsteps] = 2 * place[a]
        else:
            su[nsteps] = a; sv[nsteps] = b; 
            off[nsteps] = place[a] + place[b]
        nsteps += 1
    out = bytearray(size)
    cdef unsigned char[:] o = out
    cdef long idx, rem
    o[0] = 1
    try:
        for idx in range(size):
            if not o[idx]:
                continue
            rem = idx
            for v in range(n):
                digits[v] = rem % base
                rem //= base
            for s in range(nsteps):
                if su[s] == sv[s]:
                    if digits[su[s]] + 2 > cap:
                        continue
                elif digits[su[s]] + 1 > cap or digits[sv[s]] + 1 > cap:
                    continue
                o[idx + off[s]] = 1
    finally:
        free(place); free(su); free(sv); free(off); free(digits)
    return out


def indecomposable(const unsigned char[:] member, int n, int cap):
    cdef int base = cap + 1
    cdef long size = 1
    cdef int i, v
    for i in range(n):
        size *= base
    cdef long *place = <long *> malloc(n * sizeof(long))
    cdef int *digits = <int *> malloc(n * sizeof(int))
    cdef int *a = <int *> malloc(n * sizeof(int))
    place[0] = 1
    for i in range(1, n):
        place[i] = place[i - 1] * base
    out = bytearray(size)
    cdef unsigned char[:] o = out
    cdef long w, rem, ia
    cdef bint split
    try:
        for w in range(1, size):
            if not member[w]:
                continue
            rem = w
            for v in range(n):
                digits[v] = rem % base
                rem //= base
                a[v] = 0
            split = False
            ia = 0
            while True:
                v = 0
                while v < n and a[v] == digits[v]:
                    ia -= a[v] * place[v]
                    a[v] = 0
                    v += 1
                if v == n:
                    break
                a[v] += 1
                ia += place[v]
                if ia != w and member[ia] and member[w - ia]:
                    split = True
                    break
            if not split:
                o[w] = 1
    finally:
        free(place); free(digits); free(a)
    return out


def cover_flow(int n, adj, f):
    cdef int size = 2 * n + 2
    cdef int src = 0, snk = size - 1
    cdef long inf = 1
    cdef int u, v, x, y, head, tail, k
    cdef long push, total = 0
    for u in range(n):
        inf += f[u]
    cdef long *cap = <long *> malloc(size * size * sizeof(long))
    cdef int *prev = <int *> malloc(size * sizeof(int))
    cdef int *queue = <int *> malloc(size * sizeof(int))
    cdef int *nbr = <int *> malloc(size * size * sizeof(int))
    cdef int *deg = <int *> malloc(size * sizeof(int))
    for k in range(size * size):
        cap[k] = 0
    for k in range(size):
        deg[k] = 0

    try:
        for u in range(n):
            cap[src * size + 1 + u] = f[u]
            cap[(n + 1 + u) * size + snk] = f[u]
            nbr[src * size + deg[src]] = 1 + u; deg[src] += 1
            nbr[(1 + u) * size + deg[1 + u]] = src; deg[1 + u] += 1
            nbr[(n + 1 + u) * size + deg[n + 1 + u]] = snk; deg[n + 1 + u] += 1
            nbr[snk * size + deg[snk]] = n + 1 + u; deg[snk] += 1
        for u in range(n):
            for v in adj[u]:
                cap[(1 + u) * size + n + 1 + v] = inf
                nbr[(1 + u) * size + deg[1 + u]] = n + 1 + v; deg[1 + u] += 1
                nbr[(n + 1 + v) * size + deg[n + 1 + v]] = 1 + u; deg[n + 1 + v] += 1
        while True:
            for k in range(size):
                prev[k] = -1
            prev[src] = src
            queue[0] = src
            head = 0
            tail = 1
            while head < tail and prev[snk] < 0:
                x = queue[head]
                head += 1
                for k in range(deg[x]):
                    y = nbr[x * size + k]
                    if prev[y] < 0 and cap[x * size + y] > 0:
                        prev[y] = x
                        queue[tail] = y
                        tail += 1
            if prev[snk] < 0:
                break
            push = inf
            y = snk
            while y != src:
                x = prev[y]
                if cap[x * size + y] < push:
                    push = cap[x * size + y]
                y = x
            y = snk
            while y != src:
                x = prev[y]
                cap[x * size + y] -= push
                cap[y * size + x] += push
                y = x
            total += push
        loaded = []
        for u in range(n):
            for v in adj[u]:
                push = cap[(n + 1 + v) * size + 1 + u]
                if push:
                    loaded.append((u, v, push))
        reach = bytearray(size)
        for k in range(size):
            reach[k] = prev[k] >= 0
        return total, loaded, reach
    finally:
        free(cap); free(prev); free(queue); free(nbr); free(deg)
