"""Small exact linear-algebra helpers over the integers and rationals.

Everything in the package is integer combinatorics; the few places that
need elimination (cone duals, polytope vertices, embedding ranks) use
`fractions.Fraction` so no tolerance appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


def vdot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return sum(x * y for x, y in zip(a, b))


def det(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, division-free result)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_unique(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> Optional[tuple[Fraction, ...]]:
    """Solve the square system rows * x = rhs exactly; None when singular."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def invert_unimodular(mat: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Inverse of a matrix with determinant +-1, returned over the integers."""
    n = len(mat)
    cols = []
    for j in range(n):
        rhs = [1 if i == j else 0 for i in range(n)]
        sol = solve_unique(mat, rhs)
        if sol is None:
            raise ValueError("matrix is singular")
        if any(x.denominator != 1 for x in sol):
            raise ValueError("matrix is not unimodular")
        cols.append([int(x) for x in sol])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Rank over the rationals."""
    mat = [[Fraction(v) for v in row] for row in rows]
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][col]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        r += 1
    return r


def kernel_vector(rows: Sequence[Sequence[int]], ncols: int) -> Optional[tuple[int, ...]]:
    """Primitive integer generator of a one-dimensional kernel; None otherwise."""
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][col]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    if ncols - r != 1:
        return None
    free = next(c for c in range(ncols) if c not in pivots)
    x = [Fraction(0)] * ncols
    x[free] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        x[col] = -mat[row_idx][free]
    return make_primitive(x)


def make_primitive(vec: Sequence) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd (zero vector passes through)."""
    denom = 1
    for v in vec:
        f = Fraction(v)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(Fraction(v) * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def is_primitive(vec: Sequence[int]) -> bool:
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    return g == 1
