"""Cell coordinates, mutations and correction pairs.

A mutation moves downward in the closure order: at vertices ``a, ..., a+L-1``
it removes ``x, ..., x+L-1`` from the upper pattern and inserts the same
values raised by the shift ``s``.  The lower pattern therefore has the larger
sets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .affine import from_pattern, length, symplectic_length
from .errors import PatternError
from .patterns import JugglingPattern, first_violation, is_symplectic, pattern_leq, tilde


@dataclass(frozen=True, order=True)
class Mutation:
    vertex: int
    value: int
    run_length: int
    shift: int

    def cells(self, n: int):
        """``(vertex, removed, inserted)`` for each affected vertex."""
        N = 2 * n
        x, s = self.value, self.shift
        return [((self.vertex + m) % N, x + m, x + s + m) for m in range(self.run_length)]

    def apply(self, J: JugglingPattern) -> JugglingPattern | None:
        """The lower pattern, or None if the move is not legal on ``J``."""
        n, N = J.n, J.N
        if self.value + self.shift + self.run_length - 1 > N or self.run_length >= N:
            return None
        sets = [set(S) for S in J.sets]
        for v, old, new in self.cells(n):
            if old not in sets[v] or new in sets[v]:
                return None
            sets[v].remove(old)
            sets[v].add(new)
        sets = [tuple(sorted(S)) for S in sets]
        if first_violation(sets, n) is not None:
            return None
        return JugglingPattern(n, tuple(sets))

    def mirror(self, n: int) -> "Mutation":
        """The tau-mirror run: negated vertices, tilde-paired values, same shift."""
        N = 2 * n
        a, x, L, s = self.vertex, self.value, self.run_length, self.shift
        return Mutation((-(a + L - 1)) % N, N + 2 - x - s - L, L, s)

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "value": self.value,
                "run_length": self.run_length, "shift": self.shift}

    @classmethod
    def from_json(cls, obj: dict) -> "Mutation":
        try:
            return cls(int(obj["vertex"]), int(obj["value"]), int(obj["run_length"]), int(obj["shift"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise PatternError(f"malformed mutation object: {exc}")


def mutations_from(J: JugglingPattern):
    """All legal mutations of ``J`` with their lower patterns, in sorted order."""
    N = J.N
    out = []
    for a in range(N):
        for x in J[a]:
            for s in range(1, N - x + 1):
                for L in range(1, N - x - s + 2):
                    mu = Mutation(a, x, L, s)
                    low = mu.apply(J)
                    if low is not None:
                        out.append((mu, low))
    return out


def single_mutation_between(upper: JugglingPattern, lower: JugglingPattern) -> Mutation | None:
    if upper == lower or not pattern_leq(lower, upper):
        return None
    for mu, low in mutations_from(upper):
        if low == lower:
            return mu
    return None


def correction_of(mu: Mutation, intermediate: JugglingPattern) -> Mutation:
    """The mirror move taking ``intermediate`` to a symplectic pattern."""
    if is_symplectic(intermediate):
        raise PatternError("intermediate pattern is already symplectic")
    rmu = mu.mirror(intermediate.n)
    low = rmu.apply(intermediate)
    if low is None or not is_symplectic(low):
        raise PatternError(f"no symplectic correction of {mu} on {intermediate}")
    return rmu


# --- symplectic mutations ----------------------------------------------------------


@dataclass(frozen=True)
class SymplecticMutation:
    """One self-mirrored run (Single) or a mirrored pair of runs."""
    runs: tuple
    upper: JugglingPattern
    lower: JugglingPattern

    @property
    def kind(self) -> str:
        return "single" if len(self.runs) == 1 else "correction_pair"

    @property
    def shift(self) -> int:
        return self.runs[0].shift

    def to_json(self) -> dict:
        return {"kind": self.kind, "runs": [m.to_json() for m in self.runs],
                "upper": self.upper.to_json(), "lower": self.lower.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "SymplecticMutation":
        runs = tuple(Mutation.from_json(m) for m in obj["runs"])
        return cls(runs, JugglingPattern.from_json(obj["upper"]), JugglingPattern.from_json(obj["lower"]))


def _require_sp(J: JugglingPattern):
    if not is_symplectic(J):
        raise PatternError(f"{J} is not symplectic")


def down_neighbors(J: JugglingPattern) -> list:
    """Symplectic patterns below ``J`` reachable by one symplectic mutation."""
    _require_sp(J)
    n = J.n
    found = {}
    for mu, mid in mutations_from(J):
        if is_symplectic(mid):
            found.setdefault(mid, SymplecticMutation((mu,), J, mid))
            continue
        rmu = mu.mirror(n)
        if rmu == mu:
            continue
        low = rmu.apply(mid)
        if low is None or not is_symplectic(low):
            continue
        found.setdefault(low, SymplecticMutation(tuple(sorted((mu, rmu))), J, low))
    return [(found[low], low) for low in sorted(found)]


def symplectic_mutation_between(upper: JugglingPattern, lower: JugglingPattern):
    _require_sp(upper)
    _require_sp(lower)
    if upper == lower or not pattern_leq(lower, upper):
        return None
    for sm, low in down_neighbors(upper):
        if low == lower:
            return sm
    return None


# --- coordinate classes ------------------------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(tuple(sorted(g)) for g in groups.values())


def coordinate_triples(J: JugglingPattern) -> list:
    """``(a, i, j)`` with ``j in J_a``, ``i`` not in ``J_a`` and ``i > j``."""
    N = J.N
    return [(a, i, j) for a in range(N) for j in J[a] for i in range(j + 1, N + 1) if i not in J[a]]


def _shift_unions(J, uf):
    N = J.N
    for a, i, j in list(uf.parent):
        if i < N:
            nxt = ((a + 1) % N, i + 1, j + 1)
            if nxt in uf.parent:
                uf.union((a, i, j), nxt)


def triple_classes(J: JugglingPattern) -> list:
    """Classes under ``(a, i, j) ~ (a+1, i+1, j+1)``; each a sorted tuple of triples."""
    uf = _UnionFind(coordinate_triples(J))
    _shift_unions(J, uf)
    return uf.classes()


def symplectic_triple_classes(J: JugglingPattern) -> list:
    """As :func:`triple_classes`, also identifying ``(a, i, j)`` with ``(-a, ~j, ~i)``."""
    _require_sp(J)
    n, N = J.n, J.N
    uf = _UnionFind(coordinate_triples(J))
    _shift_unions(J, uf)
    for a, i, j in list(uf.parent):
        uf.union((a, i, j), ((-a) % N, tilde(j, n), tilde(i, n)))
    return uf.classes()


def dimension_report(J: JugglingPattern) -> dict:
    """Class counts next to the permutation lengths they should equal."""
    f = from_pattern(J)
    rep = {"classes": len(triple_classes(J)), "length": length(f)}
    if is_symplectic(J):
        rep["sp_classes"] = len(symplectic_triple_classes(J))
        rep["sp_length"] = symplectic_length(f)
    return rep
