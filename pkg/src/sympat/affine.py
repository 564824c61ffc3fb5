"""Affine permutations of period 2n in window notation.

``window[i] = f(i)`` for ``0 <= i < 2n``; other values follow from
``f(i + 2n) = f(i) + 2n``.  Composition is functional: ``compose(f, g)(i) =
f(g(i))``, which is the product ``f . g`` used for right multiplication by
reflections.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PatternError, PermutationError
from .patterns import JugglingPattern


def validate(window: Sequence[int], k: int | None = None, n: int | None = None) -> bool:
    """Residues form a permutation and the displacement sum is ``k * 2n``."""
    N = len(window)
    if n is not None and N != 2 * n:
        raise PermutationError(f"window of length {N} does not match n={n}")
    if N == 0 or N % 2:
        raise PermutationError(f"window length must be positive and even, got {N}")
    if sorted(v % N for v in window) != list(range(N)):
        return False
    total = sum(v - i for i, v in enumerate(window))
    if total % N:
        return False
    return k is None or total == k * N


@dataclass(frozen=True, order=True)
class AffinePermutation:
    n: int
    window: tuple

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if len(window) != 2 * self.n:
            raise PermutationError(f"window of length {len(window)} does not match n={self.n}")
        if not validate(window):
            raise PermutationError(f"window {list(window)} is not an affine permutation")

    @property
    def N(self) -> int:
        return 2 * self.n

    @property
    def k(self) -> int:
        return sum(v - i for i, v in enumerate(self.window)) // self.N

    def __call__(self, i: int) -> int:
        q, r = divmod(i, self.N)
        return self.window[r] + q * self.N

    def is_bounded(self) -> bool:
        return all(i <= v <= i + self.N for i, v in enumerate(self.window))

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "window": list(self.window)}

    @classmethod
    def from_json(cls, obj: dict) -> "AffinePermutation":
        try:
            n = int(obj["n"])
            window = [int(v) for v in obj["window"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PermutationError(f"malformed permutation object: {exc}")
        f = cls(n, tuple(window))
        if "k" in obj and int(obj["k"]) != f.k:
            raise PermutationError(f"declared k={obj['k']} but window has k={f.k}")
        return f

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(2 * n)))


def shift(k: int, n: int) -> AffinePermutation:
    """``i -> i + k``; ``shift(n, n)`` is the minimal bounded permutation."""
    return AffinePermutation(n, tuple(i + k for i in range(2 * n)))


def compose(f: AffinePermutation, g: AffinePermutation) -> AffinePermutation:
    if f.n != g.n:
        raise PermutationError(f"period mismatch: {f.N} vs {g.N}")
    return AffinePermutation(f.n, tuple(f(g(i)) for i in range(f.N)))


def inverse(f: AffinePermutation) -> AffinePermutation:
    N = f.N
    win = [0] * N
    for i, v in enumerate(f.window):
        q, r = divmod(v, N)
        win[r] = i - q * N
    return AffinePermutation(f.n, tuple(win))


def reflection(i: int, j: int, n: int) -> AffinePermutation:
    """The element of A^0 swapping ``i + 2nt`` and ``j + 2nt`` for all t."""
    N = 2 * n
    if (i - j) % N == 0:
        raise PermutationError(f"({i},{j}) is not a reflection: indices congruent mod {N}")
    win = list(range(N))
    win[i % N] = j - (i - i % N)
    win[j % N] = i - (j - j % N)
    return AffinePermutation(n, tuple(win))


def simple_reflection(i: int, n: int) -> AffinePermutation:
    return reflection(i, i + 1, n)


# --- juggling patterns <-> bounded permutations -------------------------------------


def from_pattern(J: JugglingPattern) -> AffinePermutation:
    n, N = J.n, J.N
    win = []
    for a in range(N):
        Ja = J[a]
        if N not in Ja:
            win.append(a)
            continue
        shifted = {j + 1 for j in Ja if j != N}
        extra = [b for b in J[a + 1] if b not in shifted]
        if len(extra) != 1:
            raise PatternError(f"vertex {a}: successor set does not add exactly one element", vertex=a)
        win.append(a + N + 1 - extra[0])
    return AffinePermutation(n, tuple(win))


def to_pattern(f: AffinePermutation) -> JugglingPattern:
    if not f.is_bounded() or f.k != f.n:
        raise PermutationError(f"{f} is not a bounded ({f.n},{f.N})-affine permutation")
    N = f.N
    sets = []
    for a in range(N):
        # b ranges over [a - N, a - 1] since f(b) <= b + N
        sets.append(tuple(sorted(a - f(b) + N for b in range(a - N, a) if f(b) >= a)))
    return JugglingPattern(f.n, tuple(sets))


# --- lengths -----------------------------------------------------------------------


def _max_displacement(f: AffinePermutation) -> int:
    return max(abs(v - i) for i, v in enumerate(f.window))


def inversions(f: AffinePermutation) -> set:
    """Pairs ``(x, y)`` with ``0 <= x < 2n``, ``x < y`` and ``f(x) > f(y)``."""
    # f(y) >= y - D and f(x) <= x + D, so nothing past x + 2D can invert.
    D = _max_displacement(f)
    bound = 2 * D if D else 0
    out = set()
    for x in range(f.N):
        fx = f(x)
        for y in range(x + 1, x + bound + 1):
            if fx > f(y):
                out.add((x, y))
    return out


def length(f: AffinePermutation) -> int:
    return len(inversions(f))


def R_perm(f: AffinePermutation) -> AffinePermutation:
    """``(Rf)(i) = 2n - f(-i - 1) - 1``."""
    N = f.N
    return AffinePermutation(f.n, tuple(N - f(-i - 1) - 1 for i in range(N)))


def is_symplectic_perm(f: AffinePermutation) -> bool:
    N = f.N
    return all(f(N - i - 1) - (N - i - 1) + f(i) - i == N for i in range(N))


def phi(pair: tuple, f: AffinePermutation) -> tuple:
    """The involution on inversions of a bounded permutation."""
    x, y = pair
    if f(x) <= f(y) or not 0 <= x < f.N or y <= x:
        raise PermutationError(f"{pair} is not an inversion of {f}")
    N = f.N
    if y <= N - 1:
        return (N - y - 1, N - x - 1)
    return (2 * N - y - 1, 2 * N - x - 1)


def _require_symplectic(f: AffinePermutation) -> None:
    if not (f.is_bounded() and f.k == f.n and is_symplectic_perm(f)):
        raise PermutationError(f"{f} is not a bounded symplectic permutation")


def phi_fixed_set(f: AffinePermutation) -> set:
    """Window indices x with ``(x, y)`` a Phi-fixed inversion.

    The fixed inversions are ``(x, 2n - x - 1)`` for ``x < n`` and
    ``(x, 4n - x - 1)`` for ``x >= n``, so x alone identifies them.
    Every such x has ``f(x) - x > n`` (see :func:`displacement_set`) but
    not conversely: ``[0, 2, 5, 7]`` has displacement 3 at x = 2 while
    ``(2, 5)`` is not an inversion.
    """
    _require_symplectic(f)
    return {x for (x, y) in inversions(f) if phi((x, y), f) == (x, y)}


def displacement_set(f: AffinePermutation) -> set:
    """``{i : f(i) - i > n}``, a superset of :func:`phi_fixed_set`."""
    _require_symplectic(f)
    return {i for i, v in enumerate(f.window) if v - i > f.n}


def phi_classes(f: AffinePermutation) -> list:
    _require_symplectic(f)
    seen, classes = set(), []
    for p in sorted(inversions(f)):
        if p in seen:
            continue
        q = phi(p, f)
        cls = frozenset({p, q})
        seen |= cls
        classes.append(cls)
    return classes


def symplectic_length(f: AffinePermutation) -> int:
    """Number of Phi-orbits on inversions, cross-checked against (l + #fixed) / 2."""
    by_classes = len(phi_classes(f))
    twice = length(f) + len(phi_fixed_set(f))
    if twice % 2 or twice // 2 != by_classes:
        raise AssertionError(
            f"symplectic length mismatch for {f}: {by_classes} orbits vs (l + fixed)/2 = {twice / 2}"
        )
    return by_classes


def bruhat_leq(f: AffinePermutation, f2: AffinePermutation) -> bool:
    """Bruhat order on bounded permutations, read off the patterns."""
    from .patterns import pattern_leq

    if f.n != f2.n:
        raise PermutationError(f"rank mismatch: {f.n} vs {f2.n}")
    return pattern_leq(to_pattern(f), to_pattern(f2))


def reflection_pairs(t: AffinePermutation) -> list | None:
    """Decompose an involution into its transpositions.

    Returns a sorted list of base pairs ``(i, j)`` with ``0 <= i < 2n`` and
    ``i < j``, one per swapped orbit, or None if ``t`` is not an involution
    whose moved points pair up across distinct residue classes.
    """
    N = t.N
    if compose(t, t) != identity(t.n):
        return None
    pairs = set()
    for i in range(N):
        j = t(i)
        if j == i:
            continue
        if (j - i) % N == 0:
            return None
        lo, hi = (i, j) if i < j else (j, i)
        q = lo // N
        pairs.add((lo - q * N, hi - q * N))
    return sorted(pairs)


def reflection_between(f: AffinePermutation, f2: AffinePermutation) -> tuple | None:
    """The reflection ``t`` with ``f2 = f . t`` if there is one, as a base pair."""
    pairs = reflection_pairs(compose(inverse(f), f2))
    if pairs is None or len(pairs) != 1:
        return None
    return pairs[0]
