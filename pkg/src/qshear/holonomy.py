"""Holonomy words: 2x2 matrix products over the quantum torus.

A word is read left to right as a matrix product; as a path on the fat graph
it runs right to left, so an arc word starts at its rightmost edge and ends at
the cusp matrix ``K`` written first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .qtorus import Basis, QLaurent, hermitian_shift, substitute

__all__ = [
    "Token",
    "PathWord",
    "Mat2",
    "parse_word",
    "compile_word",
    "trace",
    "same_cusp_arc",
    "is_arc",
    "compile_numeric",
    "trace_numeric",
    "edge_matrix",
    "turn_matrix",
    "loop_matrix",
    "shear_from_lambda",
    "lambda_basis",
]


@dataclass(frozen=True)
class Token:
    kind: str  # X, L, R, F, Finv, K
    name: str | None = None
    k: int = 1

    def __str__(self):
        if self.kind == "X":
            return f"X({self.name})"
        if self.kind in ("F", "Finv"):
            return f"{self.kind}({self.name},{self.k})"
        return self.kind


@dataclass(frozen=True)
class PathWord:
    tokens: tuple[Token, ...]

    @property
    def closed(self) -> bool:
        return not any(t.kind == "K" for t in self.tokens)

    def edges(self) -> list[str]:
        return [t.name for t in self.tokens if t.kind == "X"]

    def __str__(self):
        return " ".join(str(t) for t in self.tokens)

    def __add__(self, other: "PathWord") -> "PathWord":
        return PathWord(self.tokens + other.tokens)


_TOK = re.compile(r"X\((\w+)\)|(Finv|F)\((\w+)\s*,\s*(-?\d+)\)|(K|L|R)\b")


def parse_word(text: str) -> PathWord:
    out = []
    for pos, piece in _split(text):
        m = _TOK.fullmatch(piece)
        if not m:
            raise ValueError(f"bad token {piece!r} at column {pos + 1}")
        if m.group(1):
            out.append(Token("X", m.group(1)))
        elif m.group(2):
            k = int(m.group(4))
            if k < 1:
                raise ValueError(f"loop power must be positive at column {pos + 1}")
            out.append(Token(m.group(2), m.group(3), k))
        else:
            out.append(Token(m.group(5)))
    if not out:
        raise ValueError("empty word")
    return PathWord(tuple(out))


def _split(text: str):
    for m in re.finditer(r"\S+(?:\s*,\s*\S+)?", text):
        yield m.start(), re.sub(r"\s+", "", m.group())


class Mat2:
    """2x2 matrix with entries in a common algebra (QLaurent or numbers)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __mul__(self, o: "Mat2") -> "Mat2":
        if not isinstance(o, Mat2):
            return Mat2(self.a * o, self.b * o, self.c * o, self.d * o)
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __rmul__(self, s):
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def __add__(self, o):
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, o):
        return isinstance(o, Mat2) and self.entries() == o.entries()

    def __repr__(self):
        return f"Mat2({self.a!s}, {self.b!s}, {self.c!s}, {self.d!s})"

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def trace(self):
        return self.a + self.d

    def det(self):
        """Determinant ad - bc (meaningful for commuting entries)."""
        return self.a * self.d - self.b * self.c

    def map(self, f) -> "Mat2":
        return Mat2(f(self.a), f(self.b), f(self.c), f(self.d))

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def to_numpy(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    @staticmethod
    def identity(one, zero) -> "Mat2":
        return Mat2(one, zero, zero, one)


# ---- elementary matrices over a basis

def _const(basis: Basis, rows) -> Mat2:
    return Mat2(*(basis.const(x) for r in rows for x in r))


R_ROWS = ((1, 1), (-1, 0))
L_ROWS = ((0, 1), (-1, -1))
K_ROWS = ((0, 0), (-1, 0))


def edge_matrix(basis: Basis, name: str) -> Mat2:
    return Mat2(basis.zero(), -basis.gen(name, Fraction(1, 2)),
                basis.gen(name, Fraction(-1, 2)), basis.zero())


def turn_matrix(basis: Basis, kind: str, mode: str = "classical") -> Mat2:
    if kind == "R":
        m, qp = _const(basis, R_ROWS), -1
    elif kind == "L":
        m, qp = _const(basis, L_ROWS), 1
    else:
        raise ValueError(kind)
    if mode == "quantum":
        m = m.map(lambda x: x * basis.q(qp))
    return m


def cusp_matrix(basis: Basis) -> Mat2:
    return _const(basis, K_ROWS)


def _f(basis: Basis, omega: str) -> Mat2:
    z, one = basis.zero(), basis.one()
    return Mat2(z, one, -one, -basis.omega(omega))


def _f_inv(basis: Basis, omega: str) -> Mat2:
    z, one = basis.zero(), basis.one()
    return Mat2(-basis.omega(omega), -one, one, z)


def loop_matrix(basis: Basis, omega: str, k: int, inverse: bool = False, order: int | None = None) -> Mat2:
    """(-1)^(k+1) F^k, or (-1)^k F^-k for the opposite sense.

    With an orbifold order p the power is reduced using F^p = (-1)^(p-1) I,
    which holds once omega = 2cos(pi/p).
    """
    sign = (-1) ** (k + 1) if not inverse else (-1) ** k
    if order:
        wraps, k = divmod(k, order)
        sign *= (-1) ** (wraps * (order - 1))
    base = _f_inv(basis, omega) if inverse else _f(basis, omega)
    m = Mat2.identity(basis.one(), basis.zero())
    for _ in range(k):
        m = m * base
    return m if sign > 0 else -m


def compile_word(word: PathWord | str, basis: Basis, mode: str = "classical",
                 orders: Mapping[str, int] | None = None) -> Mat2:
    """Matrix product of the word's tokens in order.

    In quantum mode entries multiply in matrix-product order, with
    R -> q^(-1/4) R and L -> q^(1/4) L.
    """
    if isinstance(word, str):
        word = parse_word(word)
    if mode not in ("classical", "quantum"):
        raise ValueError(f"unknown mode {mode!r}")
    orders = orders or {}
    m = Mat2.identity(basis.one(), basis.zero())
    for t in word.tokens:
        if t.kind == "X":
            f = edge_matrix(basis, t.name)
        elif t.kind in ("L", "R"):
            f = turn_matrix(basis, t.kind, mode)
        elif t.kind == "K":
            f = cusp_matrix(basis)
        else:
            f = loop_matrix(basis, t.name, t.k, t.kind == "Finv", orders.get(t.name))
        m = m * f
    if mode == "classical":
        # reordering q-powers are the only source of q; q = 1 gives the commutative product
        m = m.map(QLaurent.classical)
    return m


def trace(word: PathWord | str, basis: Basis, mode: str = "classical",
          orders: Mapping[str, int] | None = None) -> QLaurent:
    """Trace of the compiled word.

    In quantum mode an arc can pick up an overall q-power: from the two
    copies of its open edge when it returns to its starting cusp, or from a
    loop passed between turns of opposite sense.  It is removed by the unique
    power of q that makes the result Hermitian, if one exists.
    """
    if isinstance(word, str):
        word = parse_word(word)
    t = compile_word(word, basis, mode, orders).trace()
    if mode == "quantum" and is_arc(word):
        s = hermitian_shift(t)
        if s:
            t = t * basis.q(s)
    return t


def is_arc(word: PathWord) -> bool:
    toks = word.tokens
    return len(toks) > 1 and toks[0].kind == "K" and sum(t.kind == "K" for t in toks) == 1


def same_cusp_arc(word: PathWord) -> bool:
    toks = word.tokens
    kinds = [t.kind for t in toks]
    return (len(toks) > 2 and kinds[0] == "K" and kinds.count("K") == 1
            and toks[1].kind == "X" and toks[-1].kind == "X" and toks[1].name == toks[-1].name)


# ---- fast float evaluation

_RN = np.array(R_ROWS, dtype=float)
_LN = np.array(L_ROWS, dtype=float)
_KN = np.array(K_ROWS, dtype=float)


def _xn(z: float) -> np.ndarray:
    return np.array([[0.0, -np.exp(z / 2)], [np.exp(-z / 2), 0.0]])


def _fn(w: float, k: int, inverse: bool) -> np.ndarray:
    if inverse:
        base = np.array([[-w, -1.0], [1.0, 0.0]])
        sign = (-1) ** k
    else:
        base = np.array([[0.0, 1.0], [-1.0, -w]])
        sign = (-1) ** (k + 1)
    return sign * np.linalg.matrix_power(base, k)


def compile_numeric(word: PathWord | str, values: Mapping[str, float],
                    omega: Mapping[str, float] | None = None) -> np.ndarray:
    """Classical holonomy at a real point."""
    if isinstance(word, str):
        word = parse_word(word)
    omega = omega or {}
    m = np.eye(2)
    for t in word.tokens:
        if t.kind == "X":
            m = m @ _xn(values[t.name])
        elif t.kind == "R":
            m = m @ _RN
        elif t.kind == "L":
            m = m @ _LN
        elif t.kind == "K":
            m = m @ _KN
        else:
            m = m @ _fn(omega[t.name], t.k, t.kind == "Finv")
    return m


def trace_numeric(word, values, omega=None) -> float:
    return float(np.trace(compile_numeric(word, values, omega)))


# ---- change of variables between shear and lambda coordinates

def lambda_basis(names: Sequence[str], monomials: Sequence[QLaurent]) -> Basis:
    """Basis of lambda-lengths with the structure induced from their shear monomials."""
    shear = monomials[0].basis
    vecs = [next(iter(m.terms))[0] for m in monomials]
    eps = [[shear.pair(u, v) / 4 for v in vecs] for u in vecs]
    return Basis(tuple(names), eps, ("lambda",) * len(names))


def _solve_rational(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    m = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("lambda monomials are not independent")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def shear_from_lambda(names: Sequence[str], monomials: Sequence[QLaurent],
                      target: Basis | None = None) -> dict[str, QLaurent]:
    """Invert the monomial map generators -> lambda-lengths.

    Returns, for each shear generator g, the image of e^g as a Weyl monomial
    in the lambda basis.  Weyl monomials are Hermitian, so the images carry
    the q-powers that make ordered products Hermitian automatically; see
    :func:`ordered_prefactor` for the ordered-product form.
    """
    shear = monomials[0].basis
    if len(monomials) != len(shear):
        raise ValueError("seed size does not match the number of generators")
    for m in monomials:
        if not m.is_monomial() or m.basis != shear:
            raise ValueError("seed entries must be monomials over one shear basis")
    if target is None:
        target = lambda_basis(names, monomials)
    # rows: arcs, columns: generators (real exponents)
    a = [[Fraction(v, 2) for v in next(iter(m.terms))[0]] for m in monomials]
    # e^{g} = prod_arc lambda_arc^{inv[g][arc]} where inv = (a^{-1}) transposed appropriately
    inv = _solve_rational(a)  # a @ inv = I, so generator j = sum_i inv[j][i] * log lambda_i
    out = {}
    for j, g in enumerate(shear.names):
        out[g] = target.mono({names[i]: inv[j][i] for i in range(len(names)) if inv[j][i]})
    return out


def ordered_prefactor(basis: Basis, factors: Sequence[tuple[str, Fraction]]) -> Fraction:
    """q-exponent c with Weyl monomial = q^c * (ordered product of factors).

    ``factors`` lists (generator, real exponent) in product order.
    """
    total = Fraction(0)
    vecs = [basis.vector({g: e}) for g, e in factors]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            total += basis.pair(vecs[i], vecs[j]) / 4
    return -total


def lambda_to_shear(names: Sequence[str], monomials: Sequence[QLaurent]) -> dict[str, QLaurent]:
    """Images of the lambda generators in the shear basis (for pulling results back)."""
    return {n: m for n, m in zip(names, monomials)}


def pull_back(value: QLaurent, names: Sequence[str], monomials: Sequence[QLaurent]) -> QLaurent:
    """Express a lambda-basis element in shear coordinates."""
    return substitute(value, lambda_to_shear(names, monomials), monomials[0].basis)
