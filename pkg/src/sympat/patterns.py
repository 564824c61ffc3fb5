"""Juggling patterns for the cycle quiver on 2n vertices.

A pattern is stored as a tuple of 2n sorted tuples, ``sets[i]`` being the
n-subset of ``[1, 2n]`` sitting over vertex ``i``.  Vertex arithmetic is
always modulo 2n.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import PatternError, SizeGuardError

DEFAULT_MAX_N = 4

IndexSet = tuple  # sorted tuple of ints in [1, 2n]


def max_rank() -> int:
    """Enumeration limit; ``SYMPAT_MAX_N`` overrides the default of 4."""
    value = os.environ.get("SYMPAT_MAX_N")
    if value is None:
        return DEFAULT_MAX_N
    try:
        return int(value)
    except ValueError:
        raise SizeGuardError(f"SYMPAT_MAX_N must be an integer, got {value!r}")


def check_rank(n: int, limit: int | None = None) -> None:
    if n < 1:
        raise SizeGuardError(f"n must be positive, got {n}")
    limit = max_rank() if limit is None else limit
    if n > limit:
        raise SizeGuardError(
            f"n={n} exceeds the enumeration limit {limit} (set SYMPAT_MAX_N to override)"
        )


def index_set(elements: Iterable[int], n: int) -> IndexSet:
    """Canonical sorted tuple; rejects duplicates and out-of-range entries."""
    elems = tuple(sorted(elements))
    if len(set(elems)) != len(elems):
        raise PatternError(f"repeated element in {list(elems)}")
    for e in elems:
        if not 1 <= e <= 2 * n:
            raise PatternError(f"element {e} outside [1, {2 * n}]")
    return elems


def tilde(i: int, n: int) -> int:
    """The index paired with ``i`` by the symplectic form: 2n - i + 1."""
    if not 1 <= i <= 2 * n:
        raise PatternError(f"index {i} outside [1, {2 * n}]")
    return 2 * n - i + 1


def complement_R(J: Sequence[int], n: int) -> IndexSet:
    """``[2n]`` minus the tilde-images of ``J``."""
    paired = {tilde(j, n) for j in J}
    return tuple(i for i in range(1, 2 * n + 1) if i not in paired)


def set_leq(A: Sequence[int], B: Sequence[int]) -> bool:
    """Elementwise (Gale) comparison of two equal-size sets."""
    if len(A) != len(B):
        raise PatternError(f"cannot compare sets of sizes {len(A)} and {len(B)}")
    return all(a <= b for a, b in zip(sorted(A), sorted(B)))


def first_violation(sets: Sequence[Sequence[int]], n: int) -> int | None:
    """Index of the first vertex breaking the pattern axioms, or None."""
    N = 2 * n
    if len(sets) != N:
        raise PatternError(f"expected {N} sets, got {len(sets)}")
    for i, J in enumerate(sets):
        if len(J) != n or len(set(J)) != n or any(not 1 <= j <= N for j in J):
            return i
        nxt = set(sets[(i + 1) % N])
        if any(j + 1 not in nxt for j in J if j != N):
            return i
    return None


def validate_pattern(sets: Sequence[Sequence[int]], n: int | None = None) -> bool:
    """True iff every set has size n and successors land in the next set."""
    if n is None:
        if len(sets) % 2:
            raise PatternError(f"expected an even number of sets, got {len(sets)}")
        n = len(sets) // 2
    return first_violation(sets, n) is None


@dataclass(frozen=True, order=True)
class JugglingPattern:
    n: int
    sets: tuple

    def __post_init__(self):
        sets = tuple(tuple(sorted(J)) for J in self.sets)
        object.__setattr__(self, "sets", sets)
        bad = first_violation(sets, self.n)
        if bad is not None:
            raise PatternError(
                f"invalid juggling pattern at vertex {bad}: {list(sets[bad])}", vertex=bad
            )

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]]) -> "JugglingPattern":
        sets = [tuple(J) for J in sets]
        if len(sets) % 2:
            raise PatternError(f"expected an even number of sets, got {len(sets)}")
        return cls(len(sets) // 2, tuple(sets))

    @property
    def N(self) -> int:
        return 2 * self.n

    def __getitem__(self, vertex: int) -> IndexSet:
        return self.sets[vertex % self.N]

    def flat(self) -> tuple:
        return tuple(itertools.chain.from_iterable(self.sets))

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [list(J) for J in self.sets]}

    @classmethod
    def from_json(cls, obj: dict) -> "JugglingPattern":
        try:
            n = int(obj["n"])
            sets = [tuple(int(x) for x in J) for J in obj["sets"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PatternError(f"malformed pattern object: {exc}")
        if len(sets) != 2 * n:
            raise PatternError(f"expected {2 * n} sets for n={n}, got {len(sets)}")
        return cls(n, tuple(sets))

    def short(self) -> str:
        """Compact rendering such as ``24|34|34|34`` (vertex 0 first)."""
        sep = "" if self.N < 10 else ","
        return "|".join(sep.join(str(j) for j in J) for J in self.sets)

    def __str__(self):
        return "(" + ", ".join("{" + ",".join(map(str, J)) + "}" for J in self.sets) + ")"


def pattern_leq(J: JugglingPattern, J2: JugglingPattern) -> bool:
    """Closure order: ``J <= J2`` iff ``J_i >= J2_i`` at every vertex."""
    if J.n != J2.n:
        raise PatternError(f"rank mismatch: {J.n} vs {J2.n}")
    return all(set_leq(B, A) for A, B in zip(J.sets, J2.sets))


def R_pattern(J: JugglingPattern) -> JugglingPattern:
    N = J.N
    return JugglingPattern(J.n, tuple(complement_R(J.sets[(-i) % N], J.n) for i in range(N)))


def is_symplectic(J: JugglingPattern) -> bool:
    return R_pattern(J) == J


def identity_pattern(n: int) -> JugglingPattern:
    """The minimum: ``{n+1, ..., 2n}`` at every vertex."""
    top = tuple(range(n + 1, 2 * n + 1))
    return JugglingPattern(n, (top,) * (2 * n))


def maximal_pattern(J: Sequence[int], n: int) -> JugglingPattern:
    """The pattern whose set at vertex i is ``J`` rotated by i (mod 2n)."""
    N = 2 * n
    return JugglingPattern(n, tuple(tuple((j + i - 1) % N + 1 for j in J) for i in range(N)))


def _next_candidates(prev: IndexSet, n: int, subsets: list) -> list:
    N = 2 * n
    forced = {j + 1 for j in prev if j != N}
    return [S for S in subsets if forced.issubset(S)]


def enumerate_patterns(
    n: int, symplectic_only: bool = False, limit: int | None = None
) -> Iterator[JugglingPattern]:
    """All (n, 2n)-juggling patterns in lexicographic order of the flattened tuple."""
    check_rank(n, limit)
    N = 2 * n
    subsets = list(itertools.combinations(range(1, N + 1), n))
    succ = {S: _next_candidates(S, n, subsets) for S in subsets}
    if symplectic_only:
        yield from _enumerate_symplectic(n, subsets, succ)
        return

    def extend(prefix):
        if len(prefix) == N:
            last = prefix[-1]
            if prefix[0] in succ[last]:
                yield JugglingPattern(n, tuple(prefix))
            return
        for S in succ[prefix[-1]]:
            prefix.append(S)
            yield from extend(prefix)
            prefix.pop()

    for S in subsets:
        yield from extend([S])


def _enumerate_symplectic(n, subsets, succ):
    # A symplectic pattern is fixed by J_0..J_n, the rest being J_{-i} = R(J_i).
    N = 2 * n
    self_dual = [S for S in subsets if complement_R(S, n) == S]

    def extend(prefix):
        if len(prefix) == n + 1:
            sets = list(prefix) + [complement_R(prefix[N - i], n) for i in range(n + 1, N)]
            if validate_pattern(sets, n):
                yield JugglingPattern(n, tuple(sets))
            return
        for S in succ[prefix[-1]]:
            if len(prefix) == n and S not in self_dual:
                continue
            prefix.append(S)
            yield from extend(prefix)
            prefix.pop()

    for S in self_dual:
        yield from extend([S])


def brute_force_patterns(n: int) -> list:
    """Exhaustive filter over all 2n-tuples of n-subsets; only for tiny n."""
    subsets = list(itertools.combinations(range(1, 2 * n + 1), n))
    return [
        JugglingPattern(n, sets)
        for sets in itertools.product(subsets, repeat=2 * n)
        if validate_pattern(sets, n)
    ]
