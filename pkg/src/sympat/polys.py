"""Exact polynomials in x, y_0, ..., y_{n-1} with rational coefficients.

Exponent vectors have length n + 1, x first.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .errors import SympatError


def var_names(n: int) -> list:
    return ["x"] + [f"y{m}" for m in range(n)]


def monomials(nvars: int, d: int) -> list:
    """Exponent vectors of total degree d, x-heavy first."""
    if d < 0:
        return []
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


class MultiPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != n + 1:
                raise SympatError(f"exponent {e} has wrong length for n={n}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * (n + 1): c})

    @classmethod
    def linear(cls, coeffs):
        """``c_0 x + c_1 y_0 + ...`` from a coefficient list."""
        m = len(coeffs)
        return cls(m - 1, {tuple(int(i == k) for i in range(m)): c for k, c in enumerate(coeffs)})

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly.const(self.n, other)
        if other.n != self.n:
            raise SympatError(f"variable-count mismatch: n={self.n} vs n={other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        c = Fraction(c)
        return MultiPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.n, other)
        return isinstance(other, MultiPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def substitute(self, var: int, form) -> "MultiPoly":
        """Replace variable ``var`` by the linear form with coefficients ``form``."""
        if len(form) != self.n + 1:
            raise SympatError("linear form has the wrong number of coefficients")
        lin = MultiPoly.linear(list(form))
        out = MultiPoly.zero(self.n)
        powers = {}
        for e, c in self.terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = lin ** k
            rest = list(e)
            rest[var] = 0
            out = out + MultiPoly(self.n, {tuple(rest): c}) * powers[k]
        return out

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                term *= Fraction(v) ** k
            total += term
        return total

    def coefficient_vector(self, basis) -> list:
        return [self.terms.get(e, Fraction(0)) for e in basis]

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = var_names(self.n)
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # JSON: list of [exponent, "coefficient"] pairs
    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, n: int, obj) -> "MultiPoly":
        try:
            return cls(n, {tuple(e): Fraction(c) for e, c in obj})
        except (TypeError, ValueError) as exc:
            raise SympatError(f"malformed polynomial: {exc}")


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(x|y\d+)?")


def parse_linear(text: str, n: int) -> list:
    """Coefficients of a linear form such as ``"2x+y0-y1"``."""
    coeffs = [0] * (n + 1)
    s = text.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise SympatError(f"cannot parse linear form {text!r}")
        sign, num, var = m.groups()
        if var is None:
            raise SympatError(f"constant term in linear form {text!r}")
        c = int(num) if num else 1
        idx = 0 if var == "x" else 1 + int(var[1:])
        if idx > n:
            raise SympatError(f"variable {var} out of range for n={n}")
        coeffs[idx] += -c if sign == "-" else c
        pos = m.end()
    return coeffs


def parse_product(text: str, n: int) -> MultiPoly:
    """``"0"``, ``"1"``, a linear form, or a product ``"(a)(b)..."``."""
    s = text.replace(" ", "")
    if re.fullmatch(r"-?\d+", s):
        return MultiPoly.const(n, int(s))
    factors = re.findall(r"\(([^()]*)\)", s) if s.startswith("(") else [s]
    out = MultiPoly.const(n, 1)
    for f in factors:
        out = out * MultiPoly.linear(parse_linear(f, n))
    return out
