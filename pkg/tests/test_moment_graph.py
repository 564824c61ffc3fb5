import itertools
import json
import random

import pytest

from sympat.errors import SizeGuardError, SympatError
from sympat.fixtures import REFERENCE_EDGES, reference_patterns, reference_to_graph_ids
from sympat.moment_graph import (
    Character,
    MomentGraph,
    all_run_characters,
    build_moment_graph,
    edge_character,
    export,
    gamma_exponents,
    hat_weight,
    reflection_edge_pairs,
    segment_index,
    to_dot,
    transitive_closure,
)
from sympat.mutations import symplectic_mutation_between
from sympat.patterns import identity_pattern, maximal_pattern, pattern_leq, tilde

REF = reference_patterns()


def test_segment_index():
    assert segment_index(0, 3, 2) == 1
    for a in range(4):
        assert segment_index(a, 4, 2) == a
    assert segment_index(3 + 4, 4, 2) == 3
    with pytest.raises(SympatError):
        segment_index(0, 5, 2)


def test_gamma_exponents():
    assert gamma_exponents(0, 3, 2, 2) == [0, 2]
    assert gamma_exponents(0, 3, 1, 2) == [1, 1]
    for a in range(4):
        for i in range(1, 5):
            assert gamma_exponents(a, i, i, 2) == [0, 0]


def test_hat_weight():
    for n in (1, 2, 3):
        for p in range(1, 2 * n + 1):
            assert hat_weight(p, n) == p - tilde(p, n)


def test_character_basics():
    c = Character(2, -2, (0, -2))
    assert c.normalized() == Character(2, 2, (0, 2))
    assert c.normalized().label() == "(2;0;2)"
    assert Character.parse("(6;0;-2)") == Character(2, 6, (0, -2))
    assert Character.from_json(c.to_json()) == c
    with pytest.raises(SympatError):
        Character(2, 1, (0,))


def test_edge_character_examples():
    for (a, b), lab in [((1, 2), "(2;0;2)"), ((1, 10), "(4;1;1)"), ((3, 8), "(6;0;-2)")]:
        sm = symplectic_mutation_between(REF[b], REF[a])
        assert edge_character(REF[a], REF[b], sm).label() == lab
    sm = symplectic_mutation_between(REF[2], REF[1])
    with pytest.raises(SympatError):
        edge_character(REF[1], REF[3], sm)


def test_graph_n2(graph2):
    assert len(graph2.vertices) == 13 and len(graph2.edges) == 25
    assert graph2.dims == sorted(graph2.dims)
    ref = reference_to_graph_ids(graph2)
    inv = {v: k for k, v in ref.items()}
    got = {tuple(sorted((inv[lo], inv[hi]))): ch.label() for lo, hi, ch in graph2.edges}
    assert got == REFERENCE_EDGES
    assert reflection_edge_pairs(graph2) == graph2.edge_set()


def test_graph_n1(graph1):
    # every (1,2)-pattern is symplectic, so there are three vertices
    assert len(graph1.vertices) == 3 and graph1.dims == [0, 1, 1]
    assert [(lo, hi) for lo, hi, _ in graph1.edges] == [(1, 2), (1, 3)]


def test_top_vertices_are_maximal(graph2):
    maxi = {maximal_pattern(J, 2) for J in itertools.combinations(range(1, 5), 2)
            if all(tilde(j, 2) not in J for j in J)}
    top = {graph2.vertex(v) for v in graph2.ids() if graph2.dim(v) == 3}
    assert top == maxi


def test_edges_and_characters(graph2):
    for lo, hi, ch in graph2.edges:
        assert lo < hi
        assert pattern_leq(graph2.vertex(lo), graph2.vertex(hi))
        assert not ch.is_zero()
        assert ch.z > 0 and ch.z % 2 == 0 and ch.z <= 4 * 2 - 2
        assert all_run_characters(graph2.witnesses[(lo, hi)]) == {ch}


def test_characters_well_defined_n3():
    g = build_moment_graph(3)
    rng = random.Random(3)
    pairs = [k for k, w in g.witnesses.items() if w.kind == "correction_pair"]
    for key in rng.sample(pairs, 60):
        assert len(all_run_characters(g.witnesses[key])) == 1
    assert reflection_edge_pairs(g) == g.edge_set()
    for lo, hi, ch in g.edges:
        assert 0 < ch.z <= 4 * 3 - 2 and ch.z % 2 == 0


def test_closure_equals_order(graph2):
    closure = transitive_closure(graph2)
    for a, b in itertools.permutations(graph2.ids(), 2):
        assert ((a, b) in closure) == pattern_leq(graph2.vertex(a), graph2.vertex(b))


def test_export_roundtrip(graph2):
    obj = json.loads(export(graph2, "json"))
    assert obj["n"] == 2 and len(obj["vertices"]) == 13
    assert obj["edges"][0].keys() == {"lo", "hi", "char"}
    assert MomentGraph.from_json(obj) == graph2
    dot = to_dot(graph2)
    assert sum(1 for line in dot.splitlines() if line.strip().startswith("v") and "--" not in line) == 13
    assert '"(2;0;2)"' in dot
    with pytest.raises(SympatError):
        export(graph2, "svg")
    with pytest.raises(SympatError):
        MomentGraph.from_json({"n": 2})


def test_guard():
    with pytest.raises(SizeGuardError):
        build_moment_graph(9)
    assert build_moment_graph(1).vertex(1) == identity_pattern(1)
