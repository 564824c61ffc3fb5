"""Exact linear algebra over the rationals on lists of lists of Fractions."""
from __future__ import annotations

from fractions import Fraction


def to_fractions(M) -> list:
    return [[Fraction(x) for x in row] for row in M]


def rref(M) -> tuple:
    """Reduced row-echelon form and pivot columns; zero rows are dropped."""
    A = to_fractions(M)
    if not A:
        return [], []
    rows, cols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((k for k in range(r, rows) if A[k][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for k in range(rows):
            if k != r and A[k][c] != 0:
                m = A[k][c]
                A[k] = [a - m * b for a, b in zip(A[k], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], pivots


def rank(M) -> int:
    return len(rref(M)[1])


def nullspace(M, ncols: int | None = None) -> list:
    """Basis of ``{v : M v = 0}`` as a list of vectors."""
    if not M:
        if ncols is None:
            raise ValueError("ncols is required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(M)
    ncols = len(M[0])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(A, B) -> list:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A) -> list:
    return [list(r) for r in zip(*A)]


def identity_matrix(m: int) -> list:
    return [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]


def row_space(rows) -> list:
    """Canonical basis of the span: the nonzero rows of the rref."""
    return rref(rows)[0]
