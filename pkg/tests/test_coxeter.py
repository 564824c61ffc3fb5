import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sympat.affine import (
    AffinePermutation,
    compose,
    from_pattern,
    identity,
    reflection,
    reflection_pairs,
    simple_reflection,
    symplectic_length,
)
from sympat.coxeter import (
    TypeCWord,
    check_symplectic_length,
    element_order,
    evaluate_word,
    from_a0,
    generator,
    greedy_word,
    is_fixed,
    is_type_c_reflection,
    r0_map,
    to_a0,
    type_c_quotient,
    verify_relations,
)
from sympat.errors import PermutationError
from sympat.patterns import enumerate_patterns, is_symplectic


def test_r0_basics():
    assert r0_map(identity(2)) == identity(2)
    assert r0_map(simple_reflection(0, 2)) == simple_reflection(-2, 2) == simple_reflection(2, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=8))
def test_r0_involution_and_automorphism(word):
    g = identity(2)
    for i in word:
        g = compose(g, simple_reflection(i, 2))
    h = simple_reflection(1, 2)
    assert r0_map(r0_map(g)) == g
    assert r0_map(compose(g, h)) == compose(r0_map(g), r0_map(h))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-1, n - 1), max_size=7))))
def test_words_are_fixed(data):
    n, letters = data
    assert is_fixed(evaluate_word(letters, n))


def test_generators():
    assert evaluate_word([], 2) == identity(2)
    for n in (2, 3, 4):
        for i in range(-1, n):
            g = generator(i, n)
            assert is_fixed(g) and element_order(g) == 2
    with pytest.raises(PermutationError):
        generator(2, 2)
    with pytest.raises(PermutationError):
        evaluate_word([0])


def test_orders():
    assert element_order(compose(generator(-1, 2), generator(0, 2))) == 4
    assert element_order(compose(generator(0, 3), generator(1, 3))) == 3
    for n in (2, 3, 4):
        for i, j, got, want in verify_relations(n):
            assert got == want, (n, i, j)
    rep = {(i, j): got for i, j, got, _ in verify_relations(2)}
    assert rep[(-1, 0)] == 4 and rep[(0, 1)] == 4 and rep[(-1, 1)] == 2
    with pytest.raises(PermutationError):
        verify_relations(1)


def test_greedy_word(sp2, sp3):
    assert greedy_word(identity(2)).letters == ()
    g = to_a0(AffinePermutation(2, (1, 3, 4, 6)))
    w = greedy_word(g)
    assert len(w) == 1 and evaluate_word(w) == g
    for J in sp2 + sp3:
        f = from_pattern(J)
        w = greedy_word(to_a0(f))
        assert len(w) == symplectic_length(f) == check_symplectic_length(f)
        assert from_a0(evaluate_word(w)) == f
    with pytest.raises(PermutationError):
        greedy_word(simple_reflection(0, 2))


def test_fixed_iff_symplectic(all2):
    for J in all2:
        assert is_fixed(to_a0(from_pattern(J))) == is_symplectic(J)


def test_short_words_cover_small_fixed_elements():
    n = 2
    seen = {evaluate_word(w, n) for k in range(4) for w in itertools.product(range(-1, n), repeat=k)}
    for g in seen:
        assert is_fixed(g)
        assert len(greedy_word(g)) <= 3


def test_type_c_reflections():
    n = 2
    assert is_type_c_reflection(generator(-1, n))
    assert is_type_c_reflection(generator(0, n))
    assert not is_type_c_reflection(simple_reflection(0, n))
    assert not is_type_c_reflection(identity(n))
    two_stable = compose(reflection(-1, 0, n), reflection(1, 2, n))
    assert is_fixed(two_stable) and len(reflection_pairs(two_stable)) == 2
    assert not is_type_c_reflection(two_stable)


def test_mutation_quotients_are_type_c(graph2):
    for lo, hi, _ in graph2.edges:
        t = type_c_quotient(from_pattern(graph2.vertex(lo)), from_pattern(graph2.vertex(hi)))
        pairs = reflection_pairs(t)
        assert is_type_c_reflection(t)
        N = 4
        if len(pairs) == 1:
            i, j = pairs[0]
            assert (i + j + 1) % N == 0
        else:
            (i, j), (k, m) = pairs
            assert ((-j - 1) - k) % N == 0 and ((-i - 1) - m) % N == 0


def test_word_json():
    w = TypeCWord(2, (-1, 0, 1))
    assert w.to_json() == {"n": 2, "letters": [-1, 0, 1]}
    assert TypeCWord.from_json(w.to_json()) == w
    with pytest.raises(PermutationError):
        TypeCWord(2, (2,))
