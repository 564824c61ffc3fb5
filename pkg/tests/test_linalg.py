from fractions import Fraction

from hypothesis import given, settings, strategies as st

from sympat.linalg import identity_matrix, matmul, nullspace, rank, rref

small = st.integers(-5, 5)


def test_rref_basic():
    R, piv = rref([[2, 4], [1, 2]])
    assert R == [[1, 2]] and piv == [0]
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0]]) == 0
    assert nullspace([[1, 1]]) == [[-1, 1]]
    assert nullspace([], 2) == identity_matrix(2)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=5)))
def test_rank_nullity(M):
    ns = nullspace(M)
    assert rank(M) + len(ns) == len(M[0])
    for v in ns:
        assert all(x == 0 for row in matmul(M, [[x] for x in v]) for x in row)
    R, piv = rref(M)
    for row, p in zip(R, piv):
        assert row[p] == 1
    assert all(isinstance(x, Fraction) for row in R for x in row)
