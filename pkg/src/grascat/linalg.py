"""Exact rational linear algebra on lists of lists of Fractions.

Small and boring on purpose: Gaussian elimination with first-nonzero
pivoting keeps every operation deterministic, which the callers rely on
for reproducible output.
"""
from __future__ import annotations

from fractions import Fraction

F = Fraction


def _as_matrix(rows):
    return [[F(c) for c in row] for row in rows]


def rank(rows):
    M = _as_matrix(rows)
    if not M:
        return 0
    m, n = len(M), len(M[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col]
        M[r] = [c * inv for c in M[r]]
        for i in range(m):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def det(rows):
    M = _as_matrix(rows)
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    d = F(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            return F(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            sign = -sign
        d *= M[col][col]
        inv = 1 / M[col][col]
        for i in range(col + 1, n):
            if M[i][col]:
                f = M[i][col] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return sign * d


def solve(A, b):
    """Solve A x = b for square invertible A; raises on singular input."""
    xs = solve_columns(A, [[v] for v in b])
    return [row[0] for row in xs]


def solve_columns(A, B):
    """Solve A X = B columnwise; B given as rows of the RHS matrix."""
    n = len(A)
    w = len(B[0]) if B else 0
    M = [[F(c) for c in A[i]] + [F(c) for c in B[i]] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [c * inv for c in M[col]]
        for i in range(n):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return [row[n:n + w] for row in M]


def inverse(A):
    n = len(A)
    eye = [[F(1) if i == j else F(0) for j in range(n)] for i in range(n)]
    return solve_columns(A, eye)


def nullspace(rows):
    """Basis of the right null space, echelon-normalized for determinism."""
    M = _as_matrix(rows)
    if not M:
        return []
    m, n = len(M), len(M[0])
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col]
        M[r] = [c * inv for c in M[r]]
        for i in range(m):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [F(0)] * n
        vec[fc] = F(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -M[i][fc]
        basis.append(vec)
    return basis
