"""Small exact linear algebra helpers over the rationals.

Vectors are tuples of Fraction or int, matrices are tuples of row
tuples.  Rank clears denominators and eliminates fraction-free, so no
pivot tolerance exists anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def mat_mul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def clear_denominators(vec):
    """Scale a rational vector to integers; returns (ints, multiplier)."""
    fracs = [Fraction(x) for x in vec]
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    return tuple(int(f * mult) for f in fracs), mult


def content(ints) -> int:
    g = 0
    for x in ints:
        g = gcd(g, x)
    return g


def primitive(ints):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = content(ints)
    if g <= 1:
        return tuple(ints)
    return tuple(x // g for x in ints)


def det(M) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            sign = -sign
        pivot = A[col][col]
        result *= pivot
        for r in range(col + 1, n):
            f = A[r][col] / pivot
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return sign * result


def rank(rows) -> int:
    """Rank over the rationals by fraction-free integer elimination."""
    M = []
    for row in rows:
        ints, _ = clear_denominators(row)
        if any(ints):
            M.append(list(primitive(ints)))
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        prow = M[r]
        p = prow[col]
        for i in range(r + 1, len(M)):
            q = M[i][col]
            if q:
                M[i] = list(primitive([p * a - q * b for a, b in zip(M[i], prow)]))
        r += 1
        if r == len(M):
            break
    return r


def solve(A, b):
    """Solve a square rational system; None when the matrix is singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pivot = M[col][col]
        M[col] = [x / pivot for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return tuple(M[r][n] for r in range(n))


def invert(M):
    """Inverse of a square rational matrix; None when singular."""
    n = len(M)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        x = solve(M, e)
        if x is None:
            return None
        cols.append(x)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def nullspace_vector(rows, ncols):
    """A basis vector of the kernel when the nullity is exactly one."""
    M = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][col]
        M[r] = [x / pv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    v = [Fraction(0)] * ncols
    v[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        v[pc] = -M[i][fc]
    return tuple(v)


def affine_rank(points) -> int:
    """Dimension of the affine hull of a point set (-1 for empty)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return rank([vsub(p, base) for p in pts[1:]])
