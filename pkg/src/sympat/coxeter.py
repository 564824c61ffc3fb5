"""The R^0-fixed subgroup of A^0_{2n}, an affine Coxeter group of type C.

Generators carry the labels ``-1, 0, ..., n-1``: ``r_{-1} = s_{-1}``,
``r_{n-1} = s_{n-1}`` and ``r_i = s_i s_{-i-2}`` otherwise.  A word
``[a, b, c]`` evaluates to the product ``r_a . r_b . r_c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .affine import (
    AffinePermutation,
    compose,
    identity,
    length,
    shift,
    simple_reflection,
    symplectic_length,
)
from .errors import PermutationError


def r0_map(g: AffinePermutation) -> AffinePermutation:
    """``(R^0 g)(a) = -g(-a - 1) - 1``."""
    return AffinePermutation(g.n, tuple(-g(-a - 1) - 1 for a in range(g.N)))


def is_fixed(g: AffinePermutation) -> bool:
    return r0_map(g) == g


def generator_labels(n: int) -> list:
    return list(range(-1, n))


def generator(i: int, n: int) -> AffinePermutation:
    if not -1 <= i <= n - 1:
        raise PermutationError(f"generator label {i} outside [-1, {n - 1}]")
    if i in (-1, n - 1):
        return simple_reflection(i, n)
    return compose(simple_reflection(i, n), simple_reflection(-i - 2, n))


@dataclass(frozen=True)
class TypeCWord:
    n: int
    letters: tuple = field(default_factory=tuple)

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            if not -1 <= a <= self.n - 1:
                raise PermutationError(f"generator label {a} outside [-1, {self.n - 1}]")

    def __len__(self):
        return len(self.letters)

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict) -> "TypeCWord":
        return cls(int(obj["n"]), tuple(obj["letters"]))


def evaluate_word(word, n: int | None = None) -> AffinePermutation:
    if isinstance(word, TypeCWord):
        n, letters = word.n, word.letters
    else:
        letters = tuple(word)
        if n is None:
            raise PermutationError("n is required for a bare list of letters")
    g = identity(n)
    for a in letters:
        g = compose(g, generator(a, n))
    return g


def element_order(g: AffinePermutation, cap: int = 64) -> int | None:
    """Smallest m >= 1 with g^m = 1, or None if none up to ``cap``."""
    e = identity(g.n)
    h = g
    for m in range(1, cap + 1):
        if h == e:
            return m
        h = compose(h, g)
    return None


def expected_order(i: int, j: int, n: int) -> int:
    """Coxeter matrix entry m(r_i, r_j) of the affine C diagram."""
    if i == j:
        return 1
    i, j = sorted((i, j))
    if j - i >= 2:
        return 2
    if i == -1 or j == n - 1:
        return 4
    return 3


def verify_relations(n: int) -> list:
    """Compute the order of ``r_i r_j`` for every pair of labels.

    Each entry is ``(i, j, observed, expected)``; the diagonal records the
    generators themselves, which must be involutions.
    """
    if n < 2:
        raise PermutationError("relations are only meaningful for n >= 2")
    labels = generator_labels(n)
    report = []
    for a, i in enumerate(labels):
        gi = generator(i, n)
        report.append((i, i, element_order(gi), 2))
        for j in labels[a + 1:]:
            prod = compose(gi, generator(j, n))
            report.append((i, j, element_order(prod), expected_order(i, j, n)))
    return report


def greedy_word(g: AffinePermutation) -> TypeCWord:
    """A reduced word for ``g`` in the type-C generators.

    Right-multiplies by the lowest-labelled generator that lowers the type-A
    length until the identity is reached; the collected letters reversed
    evaluate back to ``g``.
    """
    if g.k != 0:
        raise PermutationError(f"{g} is not in A^0")
    if not is_fixed(g):
        raise PermutationError(f"{g} is not fixed by R^0")
    n = g.n
    gens = [(i, generator(i, n)) for i in generator_labels(n)]
    letters = []
    cur, cur_len = g, length(g)
    while cur_len:
        for i, r in gens:
            nxt = compose(cur, r)
            nxt_len = length(nxt)
            if nxt_len < cur_len:
                letters.append(i)
                cur, cur_len = nxt, nxt_len
                break
        else:
            raise PermutationError(f"no descent found for {cur}; not in the type-C subgroup")
    word = TypeCWord(n, tuple(reversed(letters)))
    if evaluate_word(word) != g:
        raise AssertionError(f"greedy word {word.letters} does not evaluate to {g}")
    return word


def to_a0(f: AffinePermutation) -> AffinePermutation:
    """``g = f . shift(-n)``, the A^0 element behind a bounded permutation."""
    return compose(f, shift(-f.n, f.n))


def from_a0(g: AffinePermutation) -> AffinePermutation:
    return compose(g, shift(g.n, g.n))


def type_c_length(g: AffinePermutation) -> int:
    return len(greedy_word(g))


def check_symplectic_length(f: AffinePermutation) -> int:
    """Type-C word length of a bounded symplectic f, asserted against the inversion count."""
    word_len = type_c_length(to_a0(f))
    sl = symplectic_length(f)
    if word_len != sl:
        raise AssertionError(f"word length {word_len} != symplectic length {sl} for {f}")
    return sl


def _base(i: int, j: int, N: int) -> tuple:
    lo, hi = sorted((i, j))
    q = lo // N
    return (lo - q * N, hi - q * N)


def is_type_c_reflection(t: AffinePermutation) -> bool:
    """True iff ``t`` is ``(i, -i-1)`` or ``(i, j)(-j-1, -i-1)`` on all translates.

    Two R^0-stable orbits, e.g. ``(i, -i-1)(k, -k-1)``, do not count.
    """
    from .affine import reflection_pairs

    if t.k != 0 or not is_fixed(t):
        return False
    pairs = reflection_pairs(t)
    if pairs is None or len(pairs) not in (1, 2):
        return False
    if len(pairs) == 1:
        return True
    i, j = pairs[0]
    return _base(-j - 1, -i - 1, t.N) == pairs[1]


def type_c_quotient(f_lo: AffinePermutation, f_hi: AffinePermutation) -> AffinePermutation:
    """``g_lo^{-1} . g_hi`` on the A^0 side."""
    from .affine import inverse

    return compose(inverse(to_a0(f_lo)), to_a0(f_hi))
