"""The moment graph of the symplectic torus on the fixed points of X(n,2n)^sp.

Characters are additive: ``z x + sum_m c_m y_m``.  The torus element with
parameters ``(z, gamma_0, ..., gamma_{n-1})`` acts on ``e^{(a)}_p`` by
``z^{2p-2n-1} gamma_{(a-p) mod 2n}`` where ``gamma_{2n-1-m} = gamma_m^{-1}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .affine import from_pattern, length, symplectic_length
from .coxeter import is_type_c_reflection, type_c_quotient
from .errors import PatternError, SympatError
from .mutations import SymplecticMutation, down_neighbors
from .patterns import JugglingPattern, check_rank, enumerate_patterns


@dataclass(frozen=True, order=True)
class Character:
    n: int
    z: int
    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(c) for c in self.gamma))
        if len(self.gamma) != self.n:
            raise SympatError(f"expected {self.n} gamma coefficients, got {len(self.gamma)}")

    @property
    def coeffs(self) -> tuple:
        return (self.z,) + self.gamma

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def normalized(self) -> "Character":
        lead = next((c for c in self.coeffs if c), 0)
        if lead < 0:
            return Character(self.n, -self.z, tuple(-c for c in self.gamma))
        return self

    def label(self) -> str:
        return "(" + ";".join(str(c) for c in self.coeffs) + ")"

    @classmethod
    def parse(cls, text: str) -> "Character":
        parts = [int(p) for p in text.strip().strip("()").split(";")]
        return cls(len(parts) - 1, parts[0], tuple(parts[1:]))

    def to_json(self) -> dict:
        return {"z": self.z, "gamma": list(self.gamma)}

    @classmethod
    def from_json(cls, obj: dict) -> "Character":
        gamma = [int(c) for c in obj["gamma"]]
        return cls(len(gamma), int(obj["z"]), tuple(gamma))


def segment_index(a: int, p: int, n: int) -> int:
    """The segment through ``e^{(a)}_p``."""
    N = 2 * n
    if not 1 <= p <= N:
        raise SympatError(f"position {p} outside [1, {N}]")
    return (a - p) % N


def _fold(m: int, n: int) -> tuple:
    """``gamma_m`` as ``(index, sign)`` with index in ``[0, n-1]``."""
    return (m, 1) if m < n else (2 * n - 1 - m, -1)


def gamma_exponents(a: int, i: int, j: int, n: int) -> list:
    out = [0] * n
    for p, sign in ((i, 1), (j, -1)):
        idx, s = _fold(segment_index(a, p, n), n)
        out[idx] += sign * s
    return out


def hat_weight(p: int, n: int) -> int:
    """``p - tilde(p) = 2p - 2n - 1``."""
    return 2 * p - 2 * n - 1


def torus_weight(a: int, p: int, n: int) -> Character:
    """The character by which the torus scales ``e^{(a)}_p``."""
    gamma = [0] * n
    idx, s = _fold(segment_index(a, p, n), n)
    gamma[idx] = s
    return Character(n, hat_weight(p, n), tuple(gamma))


def run_character(a: int, removed: int, inserted: int, n: int) -> Character:
    z = hat_weight(inserted, n) - hat_weight(removed, n)
    return Character(n, z, tuple(gamma_exponents(a, inserted, removed, n))).normalized()


def edge_character(lower: JugglingPattern, upper: JugglingPattern, m: SymplecticMutation) -> Character:
    if m.lower != lower or m.upper != upper:
        raise SympatError("mutation does not connect the given endpoints")
    n = lower.n
    a, removed, inserted = m.runs[0].cells(n)[0]
    return run_character(a, removed, inserted, n)


def all_run_characters(m: SymplecticMutation) -> set:
    """Characters read off every affected cell; a well-defined edge gives one."""
    n = m.lower.n
    return {run_character(a, r, i, n) for mu in m.runs for a, r, i in mu.cells(n)}


@dataclass
class MomentGraph:
    n: int
    vertices: list  # JugglingPattern, id = position + 1
    dims: list
    edges: list  # (lo_id, hi_id, Character)
    witnesses: dict = None  # (lo_id, hi_id) -> SymplecticMutation

    def index(self) -> dict:
        return {J: k + 1 for k, J in enumerate(self.vertices)}

    def vertex(self, vid: int) -> JugglingPattern:
        return self.vertices[vid - 1]

    def dim(self, vid: int) -> int:
        return self.dims[vid - 1]

    def ids(self) -> list:
        return list(range(1, len(self.vertices) + 1))

    def down_edges(self, vid: int) -> list:
        return [(lo, ch) for lo, hi, ch in self.edges if hi == vid]

    def edge_set(self) -> set:
        return {(lo, hi) for lo, hi, _ in self.edges}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [{"id": k + 1, "pattern": J.to_json()["sets"], "dim": d}
                         for k, (J, d) in enumerate(zip(self.vertices, self.dims))],
            "edges": [{"lo": lo, "hi": hi, "char": ch.to_json()} for lo, hi, ch in self.edges],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MomentGraph":
        try:
            n = int(obj["n"])
            verts = sorted(obj["vertices"], key=lambda v: v["id"])
            if [v["id"] for v in verts] != list(range(1, len(verts) + 1)):
                raise SympatError("vertex ids must be 1..V")
            vertices = [JugglingPattern(n, tuple(tuple(S) for S in v["pattern"])) for v in verts]
            dims = [int(v["dim"]) for v in verts]
            edges = [(int(e["lo"]), int(e["hi"]), Character.from_json(e["char"])) for e in obj["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SympatError(f"malformed graph object: {exc}")
        return cls(n, vertices, dims, edges)

    def __eq__(self, other):
        return (isinstance(other, MomentGraph) and self.n == other.n and self.vertices == other.vertices
                and self.dims == other.dims and self.edges == other.edges)


def build_moment_graph(n: int, limit: int | None = None) -> MomentGraph:
    check_rank(n, limit)
    pats = list(enumerate_patterns(n, symplectic_only=True, limit=limit))
    dims = {J: symplectic_length(from_pattern(J)) for J in pats}
    pats.sort(key=lambda J: (dims[J], J.flat()))
    idx = {J: k + 1 for k, J in enumerate(pats)}
    edges, wit = [], {}
    for J in pats:
        for sm, low in down_neighbors(J):
            key = (idx[low], idx[J])
            edges.append((key[0], key[1], edge_character(low, J, sm)))
            wit[key] = sm
    edges.sort(key=lambda e: (e[0], e[1]))
    return MomentGraph(n, pats, [dims[J] for J in pats], edges, wit)


def reflection_edge_pairs(graph: MomentGraph) -> set:
    """Vertex pairs whose A^0 quotient is a type-C reflection, lower id first.

    Independent of the mutation machinery; orientation comes from the type-A length.
    """
    fs = [from_pattern(J) for J in graph.vertices]
    lens = [length(f) for f in fs]
    out = set()
    V = len(fs)
    for a in range(V):
        for b in range(V):
            if lens[a] < lens[b] and is_type_c_reflection(type_c_quotient(fs[a], fs[b])):
                out.add((a + 1, b + 1))
    return out


def transitive_closure(graph: MomentGraph) -> set:
    """Pairs ``(lo, hi)`` joined by an upward edge path of positive length."""
    up = {v: [] for v in graph.ids()}
    for lo, hi, _ in graph.edges:
        up[lo].append(hi)
    out = set()
    for v in graph.ids():
        stack, seen = list(up[v]), set()
        while stack:
            w = stack.pop()
            if w in seen:
                continue
            seen.add(w)
            stack.extend(up[w])
        out |= {(v, w) for w in seen}
    return out


def to_dot(graph: MomentGraph) -> str:
    lines = [f"graph moment_n{graph.n} {{", "  node [shape=box];"]
    for vid in graph.ids():
        J = graph.vertex(vid)
        lines.append(f'  v{vid} [label="{vid}: {J.short()}\\ndim {graph.dim(vid)}"];')
    for lo, hi, ch in graph.edges:
        lines.append(f'  v{lo} -- v{hi} [label="{ch.label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(graph: MomentGraph, fmt: str = "json") -> str:
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "json":
        return json.dumps(graph.to_json(), indent=1)
    raise SympatError(f"unknown format {fmt!r}")


def find_vertex(graph: MomentGraph, J: JugglingPattern) -> int:
    try:
        return graph.index()[J]
    except KeyError:
        raise PatternError(f"{J} is not a vertex of the graph")
