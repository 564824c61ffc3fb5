"""Exact points of X(n,2n): the form, the shift, tau, and cell coordinates.

Vectors are rows of Fractions indexed by ``0..2n-1`` for ``e_1..e_{2n}``.  A
subspace is stored as its reduced row-echelon basis.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import SympatError
from .linalg import identity_matrix, matmul, nullspace, rank, rref, transpose
from .mutations import symplectic_triple_classes
from .patterns import JugglingPattern, tilde


def omega(n: int) -> list:
    """Gram matrix: ``(e_i, e_j) = (-1)^{i+1}`` when ``j = 2n - i + 1``."""
    N = 2 * n
    G = [[Fraction(0)] * N for _ in range(N)]
    for i in range(1, N + 1):
        G[i - 1][tilde(i, n) - 1] = Fraction((-1) ** (i + 1))
    return G


def shift_matrix(n: int) -> list:
    """Matrix of s on column vectors: ``e_j -> e_{j+1}``, ``e_{2n} -> 0``."""
    N = 2 * n
    S = [[Fraction(0)] * N for _ in range(N)]
    for j in range(N - 1):
        S[j + 1][j] = Fraction(1)
    return S


def _neg(M):
    return [[-x for x in row] for row in M]


def form_self_test(n: int) -> dict:
    W, S = omega(n), shift_matrix(n)
    Wt = transpose(W)
    I = identity_matrix(2 * n)
    St = transpose(S)
    power = S
    for _ in range(2 * n - 1):
        power = matmul(power, S)
    return {
        "antisymmetric": Wt == _neg(W),
        "square_is_minus_one": matmul(W, W) == _neg(I),
        "transpose_is_inverse": matmul(Wt, W) == I,
        "shift_adjoint": St == matmul(matmul(W, S), W),
        "shift_nilpotent": all(x == 0 for row in power for x in row),
    }


def pairing(v, w, n: int) -> Fraction:
    W = omega(n)
    return sum(v[i] * W[i][j] * w[j] for i in range(2 * n) for j in range(2 * n))


def perp(rows, n: int) -> list:
    """Omega-orthogonal complement of the span of ``rows``."""
    if not rows:
        return identity_matrix(2 * n)
    M = matmul([list(map(Fraction, r)) for r in rows], omega(n))
    return rref(nullspace(M))[0]


def apply_shift(rows, n: int) -> list:
    """Images of row vectors under s."""
    return [[Fraction(0)] + list(r[:-1]) for r in rows]


@dataclass(frozen=True)
class SubspaceTuple:
    n: int
    spaces: tuple  # tuple of tuples of row tuples, each in rref

    @classmethod
    def from_rows(cls, n: int, spaces) -> "SubspaceTuple":
        canon = []
        for rows in spaces:
            R = rref(rows)[0]
            canon.append(tuple(tuple(r) for r in R))
        return cls(n, tuple(canon))

    def ranks(self) -> list:
        return [len(S) for S in self.spaces]

    def __getitem__(self, i):
        return [list(r) for r in self.spaces[i % (2 * self.n)]]

    def to_json(self) -> dict:
        return {"n": self.n, "spaces": [[[str(x) for x in r] for r in S] for S in self.spaces]}


def coordinate_point(J: JugglingPattern) -> SubspaceTuple:
    N = J.N
    rows = [[[Fraction(int(k == j - 1)) for k in range(N)] for j in J[a]] for a in range(N)]
    return SubspaceTuple.from_rows(J.n, rows)


def contained(A, B) -> bool:
    """span(A) inside span(B)."""
    if not A:
        return True
    return rank(list(B) + list(A)) == rank(B)


def is_subrepresentation(V: SubspaceTuple) -> bool:
    n, N = V.n, 2 * V.n
    return all(len(V.spaces[a]) == n and contained(apply_shift(V[a], n), V[a + 1]) for a in range(N))


def tau_point(V: SubspaceTuple) -> SubspaceTuple:
    N = 2 * V.n
    return SubspaceTuple.from_rows(V.n, [perp(V[-i], V.n) for i in range(N)])


def is_symplectic_point(V: SubspaceTuple) -> bool:
    return tau_point(V) == V


# --- cell coordinates -----------------------------------------------------------------


def _sign(i: int, j: int) -> int:
    return -1 if (i + j + 1) % 2 else 1


def expand_coordinates(J: JugglingPattern, coords: dict) -> dict:
    """Values for every triple from one value per symplectic class.

    Keys of ``coords`` are classes as returned by
    :func:`symplectic_triple_classes` or any triple inside one.
    """
    n, N = J.n, J.N
    classes = symplectic_triple_classes(J)
    owner = {t: cls for cls in classes for t in cls}
    given = {}
    for key, val in coords.items():
        cls = owner.get(key) if isinstance(key, tuple) and len(key) == 3 and isinstance(key[0], int) else None
        if cls is None and key in classes:
            cls = key
        if cls is None:
            raise SympatError(f"coordinate key {key} is not a class of {J}")
        if cls in given:
            raise SympatError(f"two values given for the class of {cls[0]}")
        given[cls] = (key if len(key) == 3 and isinstance(key[0], int) else cls[0], Fraction(val))
    missing = [c for c in classes if c not in given]
    if missing:
        raise SympatError(f"missing coordinates for {len(missing)} classes, e.g. {missing[0][0]}")
    values = {}
    for cls, (root, val) in given.items():
        values[root] = val
        stack = [root]
        while stack:
            a, i, j = t = stack.pop()
            nbrs = [((-a) % N, tilde(j, n), tilde(i, n)), _sign(i, j)]
            out = [(nbrs[0], nbrs[1])]
            if i < N:
                out.append((((a + 1) % N, i + 1, j + 1), 1))
            if j > 1:
                out.append((((a - 1) % N, i - 1, j - 1), 1))
            for u, sgn in out:
                if u not in owner:
                    continue
                w = sgn * values[t]
                if u in values:
                    if values[u] != w:
                        raise SympatError(f"inconsistent signs in the class of {root}")
                    continue
                values[u] = w
                stack.append(u)
    return values


def point_from_coordinates(J: JugglingPattern, coords: dict) -> SubspaceTuple:
    n, N = J.n, J.N
    u = expand_coordinates(J, coords)
    spaces = []
    for a in range(N):
        rows = []
        for j in J[a]:
            v = [Fraction(0)] * N
            v[j - 1] = Fraction(1)
            for i in range(j + 1, N + 1):
                if i not in J[a]:
                    v[i - 1] = u.get((a, i, j), Fraction(0))
            rows.append(v)
        spaces.append(rows)
    return SubspaceTuple.from_rows(n, spaces)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def random_coordinates(J: JugglingPattern, rng: random.Random) -> dict:
    return {cls: random_rational(rng) for cls in symplectic_triple_classes(J)}


# --- torus action ---------------------------------------------------------------------


def torus_diagonal(a: int, z: Fraction, gammas, n: int) -> list:
    """Scalars by which ``(z, gamma)`` acts on ``e^{(a)}_1..e^{(a)}_{2n}``."""
    N = 2 * n
    if len(gammas) != n:
        raise SympatError(f"expected {n} gamma values, got {len(gammas)}")
    full = list(gammas) + [1 / Fraction(gammas[N - 1 - m]) for m in range(n, N)]
    return [Fraction(z) ** (2 * p - N - 1) * full[(a - p) % N] for p in range(1, N + 1)]


def torus_preserves_form(a: int, z, gammas, v, w, n: int) -> bool:
    """``(x v, x w) = (v, w)`` for v over vertex a and w over vertex -a."""
    da = torus_diagonal(a, z, gammas, n)
    db = torus_diagonal(-a, z, gammas, n)
    xv = [d * x for d, x in zip(da, v)]
    xw = [d * x for d, x in zip(db, w)]
    return pairing(xv, xw, n) == pairing(v, w, n)


def dual_inclusion(A, V, n: int) -> tuple:
    """``(Omega A^t Omega) (A V)^perp`` inside ``V^perp``; also whether equal."""
    W = omega(n)
    B = matmul(matmul(W, transpose(A)), W)
    AV = [r for r in transpose(matmul(A, transpose(V)))] if V else []
    P = perp(AV, n)
    image = [list(r) for r in transpose(matmul(B, transpose(P)))] if P else []
    target = perp(V, n)
    inside = contained(image, target)
    equal = inside and rank(image) == rank(target) if image else not target
    return inside, equal
