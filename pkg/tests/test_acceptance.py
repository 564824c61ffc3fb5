"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run directly (``python3 tests/test_acceptance.py``) or under pytest, where the
lines are also repeated in the terminal summary.
"""
import functools
import itertools
import random
import sys

import pytest

from sympat.affine import (
    R_perm,
    from_pattern,
    length,
    phi_classes,
    phi_fixed_set,
    symplectic_length,
    to_pattern,
    AffinePermutation,
)
from sympat.cohomology import GKMClass, diagonal_entry, flow_up_basis, graded_rank_check, poincare_polynomial, verify_class
from sympat.coxeter import verify_relations
from sympat import fixtures as fx
from sympat.geometry import (
    coordinate_point,
    is_subrepresentation,
    is_symplectic_point,
    point_from_coordinates,
    random_coordinates,
    tau_point,
)
from sympat.moment_graph import build_moment_graph, reflection_edge_pairs
from sympat.mutations import down_neighbors, symplectic_triple_classes
from sympat.patterns import R_pattern, enumerate_patterns, pattern_leq, set_leq

RESULTS = {}


def _report(num, name, ok, detail):
    line = f"criterion {num} {'PASS' if ok else 'FAIL'}: {name}; {detail}"
    RESULTS[num] = line
    print(line)
    return ok


@functools.lru_cache(maxsize=None)
def _graph2():
    return build_moment_graph(2)


def check_1():
    f = from_pattern(fx.J_RUNNING).window
    fp = from_pattern(fx.J_PRIME).window
    rf = R_perm(from_pattern(fx.J_PRIME)).window
    rj = R_pattern(fx.J_PRIME)
    ok = (f == fx.F_RUNNING and fp == fx.F_PRIME and rf == fx.F_PRIME_R and rj == fx.J_PRIME_R
          and to_pattern(AffinePermutation(2, fx.F_PRIME)) == fx.J_PRIME
          and rj.to_json()["sets"] == [[2, 4], [3, 4], [3, 4], [1, 4]])
    return ok, f"J -> {list(f)}, J' -> {list(fp)}, R(f_J') = {list(rf)}, R(J') = {rj}"


def check_2():
    g = _graph2()
    ref = fx.reference_to_graph_ids(g)
    inv = {v: k for k, v in ref.items()}
    got = {tuple(sorted((inv[lo], inv[hi]))): ch.label() for lo, hi, ch in g.edges}
    spectrum = poincare_polynomial(g)
    refl = reflection_edge_pairs(g) == g.edge_set()
    ok = len(g.vertices) == 13 and spectrum == [1, 3, 5, 4] and got == fx.REFERENCE_EDGES and refl
    return ok, (f"{len(g.vertices)} vertices, spectrum {spectrum}, {len(g.edges)} edges, "
                f"labels {'match' if got == fx.REFERENCE_EDGES else 'differ'}, "
                f"reflection re-enumeration {'agrees' if refl else 'disagrees'}")


def check_3():
    g = _graph2()
    ref = fx.reference_to_graph_ids(g)
    bad = [k for k, comps in fx.reference_classes(2).items()
           if verify_class(g, GKMClass(2, {ref[v]: p for v, p in comps.items()}))]
    inv = {v: k for k, v in ref.items()}
    table = fx.reference_classes(2)
    diag_ok = all(c[c.vertex] == diagonal_entry(g, c.vertex) == table[inv[c.vertex]][inv[c.vertex]]
                  for c in flow_up_basis(g))
    fixed_ok = all(not verify_class(g, GKMClass(2, {ref[v]: p for v, p in comps.items()}))
                   for comps in fx.reference_classes(2, corrected=True).values())
    detail = (f"{13 - len(bad)}/13 printed classes valid"
              + (f" (invalid: {', '.join(f'xi_{k}' for k in bad)}; with the forced erratum "
                 f"{'13/13' if fixed_ok else 'still not all'} valid)" if bad else "")
              + f", flow-up diagonals {'match' if diag_ok else 'differ'}")
    return not bad and diag_ok, detail


def _sp_length_triple(J):
    f = from_pattern(J)
    a = len(symplectic_triple_classes(J))
    b = len(phi_classes(f))
    c2 = length(f) + len(phi_fixed_set(f))
    return a, b, c2 // 2 if c2 % 2 == 0 else None


def check_4():
    sp2 = list(enumerate_patterns(2, symplectic_only=True))
    sp3 = list(enumerate_patterns(3, symplectic_only=True))
    bad = [J for J in sp2 + sp3 if len(set(_sp_length_triple(J))) != 1]
    return not bad, (f"{len(sp2)} patterns at n=2 and all {len(sp3)} at n=3 "
                     f"(fewer than 200 exist, so exhaustive); {len(bad)} disagreements")


def check_5():
    sp = list(enumerate_patterns(2, symplectic_only=True))
    down = {J: [low for _, low in down_neighbors(J)] for J in sp}
    reach = {}
    for J in sp:
        seen, stack = {J}, [J]
        while stack:
            for low in down[stack.pop()]:
                if low not in seen:
                    seen.add(low)
                    stack.append(low)
        reach[J] = seen
    pairs = list(itertools.combinations(sp, 2))
    bad = [(A, B) for A, B in pairs
           if (A in reach[B]) != pattern_leq(A, B) or (B in reach[A]) != pattern_leq(B, A)]
    return not bad, f"{len(pairs)} unordered pairs, {len(bad)} disagreements"


def check_6():
    checks = {}
    all2 = list(enumerate_patterns(2)) + list(enumerate_patterns(1))
    sp2 = list(enumerate_patterns(2, symplectic_only=True))
    rng = random.Random(6)
    sample3 = rng.sample(list(enumerate_patterns(3)), 200)
    checks["R involution"] = all(R_pattern(R_pattern(J)) == J and R_perm(R_perm(from_pattern(J))) == from_pattern(J)
                                 for J in all2 + sample3)
    checks["length preserved"] = all(length(from_pattern(J)) == length(R_perm(from_pattern(J)))
                                     for J in all2 + sample3)
    p2 = list(enumerate_patterns(2))
    checks["R monotone"] = all(pattern_leq(R_pattern(A), R_pattern(B))
                               for A, B in itertools.product(p2, repeat=2) if pattern_leq(A, B))
    ok = True
    for m in range(1, 9):
        for k in range(m + 1):
            subs = list(itertools.combinations(range(1, m + 1), k))
            comp = {A: tuple(x for x in range(1, m + 1) if x not in A) for A in subs}
            ok &= all(set_leq(comp[B], comp[A]) for A in subs for B in subs if set_leq(A, B))
    checks["complement reversal"] = ok
    checks["roundtrip"] = all(to_pattern(from_pattern(J)) == J for J in all2 + sample3)
    checks["relation orders"] = all(obs == exp for n in (2, 3) for _, _, obs, exp in verify_relations(n))
    checks["tau"] = all(tau_point(tau_point(coordinate_point(J))) == coordinate_point(J)
                        and tau_point(coordinate_point(J)) == coordinate_point(R_pattern(J)) for J in p2)
    iso = True
    srng = random.Random(2024)
    for J in sp2:
        for _ in range(50):
            p = point_from_coordinates(J, random_coordinates(J, srng))
            iso &= is_symplectic_point(p) and is_subrepresentation(p)
    checks["isotropy"] = iso
    failed = [k for k, v in checks.items() if not v]
    return not failed, f"{len(checks) - len(failed)}/{len(checks)} invariants hold" + (f", failing {failed}" if failed else "")


def check_7():
    tops = {}
    for n in (1, 2, 3):
        poly = poincare_polynomial(n)
        tops[n] = poly[n * (n + 1) // 2] if len(poly) > n * (n + 1) // 2 else 0
    p2 = poincare_polynomial(2)
    ok = all(tops[n] == 2 ** n for n in tops) and p2 == [1, 3, 5, 4]
    return ok, f"top-dimensional counts {tops}, Poincare n=2 {p2}"


def check_8():
    rows = {n: graded_rank_check(build_moment_graph(n), 3) for n in (1, 2)}
    ok = all(r[3] for rs in rows.values() for r in rs)
    return ok, "; ".join(f"n={n}: " + ", ".join(f"{r[1]}/{r[2]}" for r in rs) for n, rs in rows.items())


CRITERIA = [
    (1, "worked examples", check_1),
    (2, "moment graph for n=2", check_2),
    (3, "printed cohomology tables", check_3),
    (4, "cell dimension = symplectic length", check_4),
    (5, "mutation reachability = order", check_5),
    (6, "structural invariants", check_6),
    (7, "counting", check_7),
    (8, "graded ranks", check_8),
]


@pytest.mark.parametrize("num,name,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, check):
    ok, detail = check()
    assert _report(num, name, ok, detail), RESULTS[num]


if __name__ == "__main__":
    results = [_report(num, name, *check()) for num, name, check in CRITERIA]
    sys.exit(0 if all(results) else 1)
