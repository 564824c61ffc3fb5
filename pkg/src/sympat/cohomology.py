"""GKM classes on a moment graph: divisibility, flow-up bases, graded ranks."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import InfeasibleError, SympatError
from .linalg import rank, rref
from .moment_graph import Character, MomentGraph
from .patterns import pattern_leq
from .polys import MultiPoly, monomials


def _coeffs(alpha) -> list:
    if isinstance(alpha, Character):
        return list(alpha.coeffs)
    return [Fraction(c) for c in alpha]


def eliminate(p: MultiPoly, alpha) -> MultiPoly:
    """``p`` modulo the linear form: solve ``alpha = 0`` for its first variable."""
    c = _coeffs(alpha)
    if len(c) != p.n + 1:
        raise SympatError("linear form and polynomial have different variable counts")
    k = next((i for i, a in enumerate(c) if a), None)
    if k is None:
        raise SympatError("cannot divide by the zero form")
    form = [Fraction(0) if i == k else -Fraction(a) / c[k] for i, a in enumerate(c)]
    return p.substitute(k, form)


def divisible_by_linear(p: MultiPoly, alpha) -> bool:
    return eliminate(p, alpha).is_zero()


# --- classes ---------------------------------------------------------------------------


class GKMClass:
    """Vertex-id -> polynomial; absent vertices are zero."""

    def __init__(self, n: int, components=None, vertex: int | None = None, degree: int | None = None):
        self.n = n
        self.components = {int(v): p for v, p in (components or {}).items() if not p.is_zero()}
        self.vertex = vertex
        self.degree = degree

    def __getitem__(self, vid: int) -> MultiPoly:
        return self.components.get(vid, MultiPoly.zero(self.n))

    def support(self) -> list:
        return sorted(self.components)

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "degree": self.degree,
                "components": {str(v): p.to_json() for v, p in sorted(self.components.items())}}

    @classmethod
    def from_json(cls, n: int, obj: dict) -> "GKMClass":
        try:
            comps = {int(v): MultiPoly.from_json(n, terms) for v, terms in obj["components"].items()}
            vertex = obj.get("vertex")
            degree = obj.get("degree")
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SympatError(f"malformed class object: {exc}")
        return cls(n, comps, None if vertex is None else int(vertex), None if degree is None else int(degree))


def verify_class(graph: MomentGraph, cls: GKMClass) -> list:
    """Edges ``(lo, hi, label)`` where the congruence fails; empty means valid."""
    if cls.n != graph.n:
        raise SympatError(f"class has n={cls.n}, graph has n={graph.n}")
    known = set(graph.ids())
    unknown = set(cls.components) - known
    if unknown:
        raise SympatError(f"unknown vertex ids {sorted(unknown)}")
    return [(lo, hi, ch.label()) for lo, hi, ch in graph.edges
            if not divisible_by_linear(cls[hi] - cls[lo], ch)]


def basis_to_json(n: int, classes: list) -> dict:
    return {"n": n, "classes": [c.to_json() for c in classes]}


def basis_from_json(obj: dict) -> list:
    try:
        n = int(obj["n"])
        return [GKMClass.from_json(n, c) for c in obj["classes"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SympatError(f"malformed basis object: {exc}")


# --- linear systems ----------------------------------------------------------------------


def _reduction_matrix(alpha: Character, basis: list) -> list:
    """Rows: coefficients of the elimination of each basis monomial, transposed."""
    n = alpha.n
    cols = []
    for e in basis:
        red = eliminate(MultiPoly(n, {e: 1}), alpha)
        cols.append(red.coefficient_vector(basis))
    return [list(r) for r in zip(*cols)] if cols else []


class _System:
    """Edge congruences for degree-d tuples on a set of unknown vertices."""

    def __init__(self, graph: MomentGraph, d: int):
        self.graph = graph
        self.basis = monomials(graph.n + 1, d)
        self.red = {(lo, hi): _reduction_matrix(ch, self.basis) for lo, hi, ch in graph.edges}

    def rows(self, unknown: list, fixed: dict) -> tuple:
        """Matrix A and right side b with ``A u = b`` for the unknown vertex blocks."""
        B = len(self.basis)
        pos = {v: k * B for k, v in enumerate(unknown)}
        width = len(unknown) * B
        A, b = [], []
        for (lo, hi), M in self.red.items():
            if lo not in pos and hi not in pos and lo not in fixed and hi not in fixed:
                continue
            diff_fixed = [Fraction(0)] * B
            for v, sign in ((hi, 1), (lo, -1)):
                if v in fixed:
                    vec = fixed[v].coefficient_vector(self.basis)
                    diff_fixed = [a + sign * x for a, x in zip(diff_fixed, vec)]
            for r, mrow in enumerate(M):
                if not any(mrow):
                    continue
                row = [Fraction(0)] * width
                for v, sign in ((hi, 1), (lo, -1)):
                    if v in pos:
                        o = pos[v]
                        for c, m in enumerate(mrow):
                            if m:
                                row[o + c] += sign * m
                rhs = -sum(m * x for m, x in zip(mrow, diff_fixed))
                if any(row) or rhs:
                    A.append(row)
                    b.append(rhs)
        return A, b, width


def _solve(A, b, width):
    """A particular solution with free variables zero, or None if inconsistent."""
    if not A:
        return [Fraction(0)] * width
    R, piv = rref([row + [rhs] for row, rhs in zip(A, b)])
    if piv and piv[-1] == width:
        return None
    x = [Fraction(0)] * width
    for row, p in zip(R, piv):
        x[p] = row[width]
    return x


def diagonal_entry(graph: MomentGraph, vid: int) -> MultiPoly:
    out = MultiPoly.const(graph.n, 1)
    for _, ch in graph.down_edges(vid):
        out = out * MultiPoly.linear(list(ch.coeffs))
    return out


def flow_up_class(graph: MomentGraph, vid: int, system: _System | None = None) -> GKMClass:
    d = graph.dim(vid)
    system = system or _System(graph, d)
    J = graph.vertex(vid)
    above = [w for w in graph.ids() if w != vid and pattern_leq(J, graph.vertex(w))]
    fixed = {w: MultiPoly.zero(graph.n) for w in graph.ids() if w != vid and w not in above}
    fixed[vid] = diagonal_entry(graph, vid)
    unknown = list(above)
    # greedy zeroing in increasing id order
    for w in sorted(above):
        trial_unknown = [u for u in unknown if u != w]
        trial_fixed = dict(fixed)
        trial_fixed[w] = MultiPoly.zero(graph.n)
        A, b, width = system.rows(trial_unknown, trial_fixed)
        if _solve(A, b, width) is not None:
            unknown, fixed = trial_unknown, trial_fixed
    A, b, width = system.rows(unknown, fixed)
    x = _solve(A, b, width)
    if x is None:
        raise InfeasibleError(f"no flow-up class at vertex {vid}")
    B = len(system.basis)
    comps = {w: p for w, p in fixed.items() if not p.is_zero()}
    for k, w in enumerate(unknown):
        comps[w] = MultiPoly(graph.n, dict(zip(system.basis, x[k * B:(k + 1) * B])))
    return GKMClass(graph.n, comps, vertex=vid, degree=d)


def flow_up_basis(graph: MomentGraph) -> list:
    systems = {}
    out = []
    for vid in sorted(graph.ids(), key=lambda v: (graph.dim(v), v)):
        d = graph.dim(vid)
        if d not in systems:
            systems[d] = _System(graph, d)
        out.append(flow_up_class(graph, vid, systems[d]))
    return out


def poincare_polynomial(graph_or_n) -> list:
    if isinstance(graph_or_n, MomentGraph):
        dims = graph_or_n.dims
    else:
        from .affine import from_pattern, symplectic_length
        from .patterns import enumerate_patterns

        dims = [symplectic_length(from_pattern(J)) for J in enumerate_patterns(graph_or_n, True)]
    out = [0] * (max(dims) + 1)
    for d in dims:
        out[d] += 1
    return out


def predicted_rank(graph: MomentGraph, d: int) -> int:
    nv = graph.n + 1
    return sum(comb(d - k + nv - 1, nv - 1) for k in graph.dims if d >= k)


def graded_dimension(graph: MomentGraph, d: int) -> int:
    system = _System(graph, d)
    A, _, width = system.rows(graph.ids(), {})
    return width - rank(A) if A else width


def graded_rank_check(graph: MomentGraph, max_degree: int) -> list:
    """Per degree ``(d, solved, predicted, ok)``."""
    if max_degree < 0:
        raise SympatError("max_degree must be nonnegative")
    out = []
    for d in range(max_degree + 1):
        got, want = graded_dimension(graph, d), predicted_rank(graph, d)
        out.append((d, got, want, got == want))
    return out


def degree_rank(graph: MomentGraph, classes: list, d: int) -> int:
    """Rank of the degree-d classes as vectors of coefficients."""
    basis = monomials(graph.n + 1, d)
    rows = []
    for c in classes:
        if c.degree == d:
            rows.append([x for v in graph.ids() for x in c[v].coefficient_vector(basis)])
    return rank(rows) if rows else 0


def compare_to_reference(basis: list, reference: dict) -> list:
    """Vertices ``(class_vertex, vertex)`` where off-diagonal components differ."""
    out = []
    by_vertex = {c.vertex: c for c in basis}
    for v, comps in reference.items():
        c = by_vertex[v]
        for w in sorted(set(c.components) | set(comps)):
            ref = comps.get(w, MultiPoly.zero(c.n))
            if c[w] != ref:
                out.append((v, w))
    return out



def complete_class(graph: MomentGraph, cls: GKMClass, vertices: list, degree: int) -> tuple:
    """Solve for the components at ``vertices`` with the rest held fixed.

    Returns ``(completed_class, freedom)``; the completion is unique when
    ``freedom`` is 0, and None is returned when no completion exists.
    """
    system = _System(graph, degree)
    fixed = {v: cls[v] for v in graph.ids() if v not in vertices}
    A, b, width = system.rows(list(vertices), fixed)
    x = _solve(A, b, width)
    if x is None:
        return None, None
    freedom = width - (rank(A) if A else 0)
    B = len(system.basis)
    comps = {v: p for v, p in fixed.items() if not p.is_zero()}
    for k, v in enumerate(vertices):
        comps[v] = MultiPoly(graph.n, dict(zip(system.basis, x[k * B:(k + 1) * B])))
    return GKMClass(graph.n, comps, cls.vertex, cls.degree), freedom
