"""Reference data for X(2,4)^sp and the small worked examples.

Vertex numbers are the reference numbering (bottom up, left to right), which
differs from the (dimension, lexicographic) ids used by the graph builder;
:func:`reference_to_graph_ids` translates.
"""
from __future__ import annotations

from .patterns import JugglingPattern
from .polys import parse_product


def _pat(short: str) -> JugglingPattern:
    return JugglingPattern.from_sets([tuple(int(c) for c in S) for S in short.split("|")])


# worked examples
J_RUNNING = _pat("24|34|34|34")
J_PRIME = _pat("24|23|34|34")
J_PRIME_R = _pat("24|34|34|14")
F_RUNNING = (1, 3, 4, 6)
F_PRIME = (3, 1, 4, 6)
F_PRIME_R = (1, 3, 6, 4)
MUTATION_UPPER = _pat("12|23|34|14")
MUTATION_LOWER = _pat("13|24|34|24")
SP_UPPER = _pat("24|23|34|14")  # two moves above J_RUNNING via J_PRIME

REFERENCE_VERTICES = {
    1: "34|34|34|34",
    2: "24|34|34|34",
    3: "34|24|34|24",
    4: "34|34|24|34",
    5: "24|23|34|14",
    6: "13|24|34|24",
    7: "24|34|24|34",
    8: "34|24|13|24",
    9: "34|14|24|23",
    10: "12|23|34|14",
    11: "24|13|24|13",
    12: "13|24|13|24",
    13: "34|14|12|23",
}

REFERENCE_EDGES = {
    (1, 2): "(2;0;2)", (1, 3): "(2;1;-1)", (1, 4): "(2;-2;0)",
    (2, 5): "(4;1;1)", (2, 6): "(2;1;-1)", (2, 7): "(2;-2;0)",
    (3, 5): "(2;0;2)", (3, 6): "(6;2;0)", (3, 8): "(6;0;-2)", (3, 9): "(2;-2;0)",
    (4, 7): "(2;0;2)", (4, 8): "(2;1;-1)", (4, 9): "(4;-1;-1)",
    (5, 10): "(6;2;0)", (5, 11): "(2;-2;0)",
    (6, 10): "(2;0;2)", (6, 12): "(6;0;-2)",
    (7, 11): "(6;-1;1)", (7, 12): "(2;1;-1)",
    (8, 12): "(6;2;0)", (8, 13): "(2;-2;0)",
    (9, 11): "(2;0;2)", (9, 13): "(6;0;-2)",
    (1, 10): "(4;1;1)", (1, 13): "(4;-1;-1)",
}

REFERENCE_POINCARE = [1, 3, 5, 4]

# class -> {vertex: component}; omitted vertices are 0
REFERENCE_XI = {
    1: {v: "1" for v in range(1, 14)},
    2: {2: "2x+2y1", 5: "2x+2y1", 6: "6x+2y0", 7: "2x+2y1",
        10: "8x+2y0+2y1", 11: "2x+2y1", 12: "6x+2y0"},
    3: {3: "2x+y0-y1", 6: "2x+y0-y1", 8: "2x+y0-y1", 10: "4x+y0+y1",
        12: "2x+y0-y1", 13: "4x-y0-y1"},
    4: {4: "2x-2y0", 7: "2x-2y0", 8: "6x-2y1", 9: "2x-2y0",
        11: "2x-2y0", 12: "6x-2y1", 13: "8x-2y0-2y1"},
    5: {5: "(4x+y0+y1)(2x+2y1)", 10: "(4x+y0+y1)(2x+2y1)", 11: "(6x-y0+y1)(2x+2y1)"},
    6: {6: "(2x+y0-y1)(6x+2y0)", 10: "(4x+y0+y1)(6x+2y0)", 12: "(2x+y0-y1)(6x+2y0)"},
    7: {7: "(2x-2y0)(2x+2y1)", 11: "(2x-2y0)(2x+2y1)", 12: "(6x-2y1)(6x+2y0)"},
    8: {8: "(2x+y0-y1)(6x-2y1)", 12: "(2x+y0-y1)(6x-2y1)", 13: "(4x-y0-y1)(6x-2y1)"},
    9: {9: "(4x-y0-y1)(2x-2y0)", 11: "(6x-y0+y1)(2x-2y0)", 13: "(4x-y0-y1)(2x-2y0)"},
    10: {10: "(6x+2y0)(4x+y0+y1)(2x+2y1)"},
    11: {11: "(2x-2y0)(6x-y0+y1)(2x+2y1)"},
    12: {12: "(6x-2y1)(2x+y0-y1)(6x+2y0)"},
    13: {13: "(2x-2y0)(4x-y0-y1)(6x-2y1)"},
}

# Entries the printed xi_3 row omits.  With every printed entry held fixed,
# the edge congruences force exactly these values; see complete_class.
REFERENCE_XI_ERRATA = {3: {5: "4x+y0+y1", 9: "4x-y0-y1", 11: "6x-y0+y1"}}

REFERENCE_DEGREES = {1: 0, 2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 2, 8: 2, 9: 2,
                     10: 3, 11: 3, 12: 3, 13: 3}


def reference_patterns() -> dict:
    return {k: _pat(s) for k, s in REFERENCE_VERTICES.items()}


def reference_to_graph_ids(graph) -> dict:
    idx = graph.index()
    return {k: idx[J] for k, J in reference_patterns().items()}


def reference_classes(n: int = 2, corrected: bool = False) -> dict:
    """Reference classes as ``{k: {vertex: MultiPoly}}`` in reference numbering.

    ``corrected`` adds :data:`REFERENCE_XI_ERRATA` to the printed rows.
    """
    table = {k: dict(comps) for k, comps in REFERENCE_XI.items()}
    if corrected:
        for k, extra in REFERENCE_XI_ERRATA.items():
            table[k].update(extra)
    return {k: {v: parse_product(s, n) for v, s in comps.items()} for k, comps in table.items()}


def reference_basis_json(graph, corrected: bool = False) -> dict:
    """The reference classes in basis-JSON form with graph vertex ids."""
    ref = reference_to_graph_ids(graph)
    classes = []
    for k, comps in reference_classes(graph.n, corrected).items():
        classes.append({
            "vertex": ref[k],
            "degree": REFERENCE_DEGREES[k],
            "components": {str(ref[v]): p.to_json() for v, p in comps.items()},
        })
    return {"n": graph.n, "classes": classes}
