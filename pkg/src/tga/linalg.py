"""Exact rational and integer linear algebra on small dense matrices.

Matrices are lists of rows.  Rational work uses :class:`fractions.Fraction`;
integer solving uses unimodular column operations (a Smith-style reduction
that keeps the transform, so solutions come out exactly).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` over the rationals."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(x)
    return basis


def transpose(rows: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*rows)]


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer solution of ``A x = b`` or ``None`` when none exists.

    Column operations bring ``A`` to lower echelon form ``A U = H`` with
    ``U`` unimodular; then ``H y = b`` is solved by forward substitution
    and ``x = U y``.
    """
    mrows = len(a)
    ncols = len(a[0]) if mrows else 0
    h = [list(map(int, r)) for r in a]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def col_op(dst: int, src: int, q: int):
        # column dst -= q * column src
        for r in h:
            r[dst] -= q * r[src]
        for r in u:
            r[dst] -= q * r[src]

    def swap(i: int, j: int):
        for r in h:
            r[i], r[j] = r[j], r[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    pivots: list[tuple[int, int]] = []
    col = 0
    for row in range(mrows):
        if col >= ncols:
            break
        while True:
            nz = [j for j in range(col, ncols) if h[row][j] != 0]
            if not nz:
                break
            j = min(nz, key=lambda k: abs(h[row][k]))
            swap(col, j)
            done = True
            for k in range(col + 1, ncols):
                if h[row][k]:
                    col_op(k, col, h[row][k] // h[row][col])
                    if h[row][k]:
                        done = False
            if done:
                break
        if h[row][col] != 0:
            pivots.append((row, col))
            col += 1

    y = [0] * ncols
    pivot_rows = {r: c for r, c in pivots}
    for row in range(mrows):
        acc = b[row] - sum(h[row][j] * y[j] for j in range(ncols))
        if row in pivot_rows:
            c = pivot_rows[row]
            if acc % h[row][c]:
                return None
            y[c] = acc // h[row][c]
        elif acc != 0:
            return None
    return [sum(u[i][j] * y[j] for j in range(ncols)) for i in range(ncols)]
