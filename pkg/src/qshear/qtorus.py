"""Quantum torus of exponentiated shear coordinates.

Elements are finite sums of Weyl-ordered monomials

    c * q^(a/4) * w1^b1 ... * M(n),     M(n) = exp(sum_i n_i Y_i / 2)

where the exponent vector ``n`` is stored in half-units and the q-power ``a``
in quarter-units.  Weyl monomials multiply as

    M(u) M(v) = q^(u eps v) M(u + v)

so with half-unit vectors the q exponent in quarter-units is ``n eps m``.
Omega symbols are central and never specialised here.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Basis",
    "QLaurent",
    "Coefficient",
    "qmul",
    "poisson",
    "adjoint",
    "is_hermitian",
    "hermitian_shift",
    "cmul",
    "commutator",
    "substitute",
    "eval_numeric",
    "parse",
]

Key = tuple  # (exponents: tuple[int, ...], qpow: int, omega: tuple[tuple[str, int], ...])


def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Basis:
    """Ordered generators with a constant antisymmetric structure matrix.

    ``eps[i][j]`` is the Poisson bracket {Y_i, Y_j}.  Shear bases have integer
    entries; lambda bases carry -I/4 and so are rational.
    """

    names: tuple[str, ...]
    eps: tuple[tuple[Fraction, ...], ...]
    kinds: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "eps", _frac_matrix(self.eps))
        if not self.kinds:
            object.__setattr__(self, "kinds", ("Z",) * len(self.names))
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("duplicate generator names")
        if len(self.eps) != n or any(len(r) != n for r in self.eps):
            raise ValueError("eps has the wrong shape")
        for i in range(n):
            for j in range(n):
                if self.eps[i][j] != -self.eps[j][i]:
                    raise ValueError("eps is not antisymmetric")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def pair(self, n: Sequence[int], m: Sequence[int]) -> Fraction:
        """Bilinear form n eps m on half-unit vectors (result in quarter-units of q)."""
        total = Fraction(0)
        for i, ni in enumerate(n):
            if ni:
                row = self.eps[i]
                for j, mj in enumerate(m):
                    if mj:
                        total += ni * row[j] * mj
        return total

    def vector(self, exps: Mapping[str, Fraction | int]) -> tuple[int, ...]:
        """Half-unit vector from a map of real exponents (Z -> 1 means e^Z)."""
        out = [0] * len(self)
        for name, e in exps.items():
            v = Fraction(e) * 2
            if v.denominator != 1:
                raise ValueError(f"exponent {e} of {name} is off the half-integer lattice")
            out[self.index(name)] += int(v)
        return tuple(out)

    # element constructors
    def mono(self, exps: Mapping[str, Fraction | int] | None = None, coeff=1, qpow: int = 0,
             omega: Mapping[str, int] | None = None) -> "QLaurent":
        n = self.vector(exps or {})
        return QLaurent(self, {(n, qpow, _omega_key(omega or {})): Fraction(coeff)})

    def gen(self, name: str, power: Fraction | int = 1) -> "QLaurent":
        return self.mono({name: power})

    def const(self, c=1, qpow: int = 0, omega: Mapping[str, int] | None = None) -> "QLaurent":
        return self.mono({}, c, qpow, omega)

    def omega(self, name: str, power: int = 1) -> "QLaurent":
        return self.const(1, 0, {name: power})

    def q(self, quarters: int) -> "QLaurent":
        return self.const(1, quarters)

    def zero(self) -> "QLaurent":
        return QLaurent(self, {})

    def one(self) -> "QLaurent":
        return self.const(1)


def _omega_key(om: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    for k, v in om.items():
        if v < 0:
            raise ValueError("omega symbols take nonnegative powers only")
    return tuple(sorted((k, int(v)) for k, v in om.items() if v))


def _omega_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, v in b:
        d[k] = d.get(k, 0) + v
    return tuple(sorted(d.items()))


@dataclass(frozen=True)
class Coefficient:
    """Coefficient of one exponent vector: qpow (quarters) -> {omega monomial: scalar}."""

    terms: tuple

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, om in self.terms for _, c in om)


class QLaurent:
    """Immutable element of the quantum torus over a fixed :class:`Basis`."""

    __slots__ = ("basis", "terms", "_hash")

    def __init__(self, basis: Basis, terms: Mapping[Key, Fraction | int]):
        clean = {}
        for k, c in terms.items():
            if c:
                clean[k] = Fraction(c)
        self.basis = basis
        self.terms = dict(sorted(clean.items(), key=_sort_key))
        self._hash = None

    # ---- basics
    def _check(self, other: "QLaurent"):
        if self.basis is not other.basis and self.basis != other.basis:
            raise ValueError("basis mismatch")

    def _lift(self, other) -> "QLaurent":
        if isinstance(other, QLaurent):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.basis.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, 0) + c
        return QLaurent(self.basis, d)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent(self.basis, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QLaurent(self.basis, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, QLaurent):
            return qmul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.basis.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.basis.const(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return (self.basis is other.basis or self.basis == other.basis) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis.names, tuple(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"QLaurent({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # ---- structure
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_classical(self) -> bool:
        return all(k[1] == 0 for k in self.terms)

    def classical(self) -> "QLaurent":
        """Specialise q = 1."""
        d = {}
        for (n, _, om), c in self.terms.items():
            k = (n, 0, om)
            d[k] = d.get(k, 0) + c
        return QLaurent(self.basis, d)

    def exponent(self) -> dict[str, Fraction]:
        """Real exponents of a single monomial."""
        if not self.is_monomial():
            raise ValueError("not a monomial")
        (n, _, _), = self.terms
        return {self.basis.names[i]: Fraction(v, 2) for i, v in enumerate(n) if v}

    def inverse(self) -> "QLaurent":
        if not self.is_monomial():
            raise ValueError("only monomials are invertible")
        (n, a, om), c = next(iter(self.terms.items()))
        if om:
            raise ValueError("omega symbols are not invertible")
        # (c q^a M(n))^{-1} = c^{-1} q^{-a} M(-n) since M(n)M(-n) = 1
        return QLaurent(self.basis, {(tuple(-x for x in n), -a, ()): 1 / c})

    def coefficients(self) -> dict[tuple[int, ...], Coefficient]:
        grouped: dict = {}
        for (n, a, om), c in self.terms.items():
            grouped.setdefault(n, {}).setdefault(a, []).append((om, c))
        return {n: Coefficient(tuple((a, tuple(v)) for a, v in sorted(g.items())))
                for n, g in grouped.items()}

    def is_positive(self) -> bool:
        """All coefficients lie in Z>=0[q^(+-1/4), omega]."""
        return all(c > 0 and c.denominator == 1 for c in self.terms.values())

    def omega_free(self, values: Mapping[str, int]) -> "QLaurent":
        """Specialise omega symbols to integers."""
        d = {}
        for (n, a, om), c in self.terms.items():
            f = c
            for name, e in om:
                f *= Fraction(values[name]) ** e
            k = (n, a, ())
            d[k] = d.get(k, 0) + f
        return QLaurent(self.basis, d)

    # ---- text form
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_term_text(self.basis, k, c) for k, c in self.terms.items())

    def to_lines(self) -> list[str]:
        return [_term_text(self.basis, k, c) for k, c in self.terms.items()] or ["0"]


def _sort_key(item):
    (n, a, om), _ = item
    return (n, a, om)


def _term_text(basis: Basis, key, c: Fraction) -> str:
    n, a, om = key
    parts = [f"[{c}]"]
    if a:
        parts.append(f"q^{{{a}/4}}")
    for name, e in om:
        parts.append(f"{name}^{{{e}}}")
    lin = [f"{v}*{basis.names[i]}" for i, v in enumerate(n) if v]
    if lin:
        parts.append("exp((" + " + ".join(lin) + ")/2)")
    return " ".join(parts)


_TERM = re.compile(
    r"\[(?P<c>-?\d+(?:/\d+)?)\]"
    r"(?P<q>\s*q\^\{-?\d+/4\})?"
    r"(?P<om>(?:\s*(?!exp\b)[A-Za-z_]\w*\^\{\d+\})*)"
    r"(?P<exp>\s*exp\(\((?:[^()]*)\)/2\))?"
)
_OM = re.compile(r"([A-Za-z_]\w*)\^\{(\d+)\}")
_LIN = re.compile(r"(-?\d+)\*([A-Za-z_]\w*)")


def parse(text: str, basis: Basis) -> QLaurent:
    """Inverse of :meth:`QLaurent.to_text`."""
    s = text.strip()
    if s == "0":
        return basis.zero()
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(s):
        if not first:
            if not s.startswith(" + ", pos):
                raise ValueError(f"expected ' + ' at column {pos + 1}")
            pos += 3
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed term at column {pos + 1}")
        c = Fraction(m.group("c"))
        a = int(re.search(r"-?\d+", m.group("q")).group()) if m.group("q") else 0
        om = tuple(sorted((k, int(v)) for k, v in _OM.findall(m.group("om") or "")))
        n = [0] * len(basis)
        if m.group("exp"):
            for v, name in _LIN.findall(m.group("exp")):
                n[basis.index(name)] += int(v)
        k = (tuple(n), a, om)
        terms[k] = terms.get(k, 0) + c
        pos = m.end()
        first = False
    return QLaurent(basis, terms)


# ---- algebra operations

def qmul(a: QLaurent, b: QLaurent) -> QLaurent:
    """Product in the quantum torus (Weyl normal form)."""
    a._check(b)
    basis = a.basis
    d: dict = {}
    for (n1, a1, o1), c1 in a.terms.items():
        for (n2, a2, o2), c2 in b.terms.items():
            shift = basis.pair(n1, n2)
            if shift.denominator != 1:
                raise ValueError("q exponent leaves the quarter-unit lattice")
            k = (tuple(x + y for x, y in zip(n1, n2)), a1 + a2 + int(shift), _omega_mul(o1, o2))
            d[k] = d.get(k, 0) + c1 * c2
    return QLaurent(basis, d)


def commutator(a: QLaurent, b: QLaurent) -> QLaurent:
    return a * b - b * a


def poisson(a: QLaurent, b: QLaurent) -> QLaurent:
    """Log-canonical bracket {M(u), M(v)} = (u eps v) M(u+v), extended bilinearly."""
    a._check(b)
    if not (a.is_classical() and b.is_classical()):
        raise ValueError("poisson bracket takes classical (q-free) elements")
    basis = a.basis
    d: dict = {}
    for (n1, _, o1), c1 in a.terms.items():
        for (n2, _, o2), c2 in b.terms.items():
            w = basis.pair(n1, n2) / 4
            if w:
                k = (tuple(x + y for x, y in zip(n1, n2)), 0, _omega_mul(o1, o2))
                d[k] = d.get(k, 0) + w * c1 * c2
    return QLaurent(basis, d)


def adjoint(a: QLaurent) -> QLaurent:
    """Anti-linear anti-involution: Weyl monomials fixed, q -> 1/q."""
    return QLaurent(a.basis, {(n, -q, om): c for (n, q, om), c in a.terms.items()})


def is_hermitian(a: QLaurent) -> bool:
    return adjoint(a) == a


def hermitian_shift(a: QLaurent) -> int | None:
    """Quarter-power s with q^s * a Hermitian, or None when no single power works."""
    if not a.terms:
        return 0
    groups: dict = {}
    for (n, qp, om), c in a.terms.items():
        groups.setdefault((n, om), []).append(qp)
    shifts = {-(min(v) + max(v)) for v in groups.values()}
    if len(shifts) != 1:
        return None
    s2 = shifts.pop()
    if s2 % 2:
        return None
    s = s2 // 2
    return s if is_hermitian(a * a.basis.q(s)) else None


def cmul(*items: QLaurent) -> QLaurent:
    """Commutative product (q = 1) of classical elements."""
    out = items[0]
    for x in items[1:]:
        out = qmul(out, x).classical()
    return out


def pushforward_eps(images: Mapping[str, Sequence[int]], source: Basis, target: Basis) -> list[str]:
    """Compare eps on source generators with the form induced from the images.

    ``images[g]`` is the half-unit target vector of e^g.  Returns the list of
    inconsistent generator pairs (empty when consistent).
    """
    bad = []
    names = [g for g in source.names if g in images]
    for i, g in enumerate(names):
        for h in names[i + 1:]:
            want = source.eps[source.index(g)][source.index(h)]
            got = target.pair(images[g], images[h]) / 4
            if want != got:
                bad.append(f"{g},{h}: {want} != {got}")
    return bad


def substitute(a: QLaurent, images: Mapping[str, QLaurent], target: Basis | None = None,
               check: bool = True) -> QLaurent:
    """Monomial change of variables.

    ``images[g]`` is a coefficient-one Weyl monomial giving the image of e^g.
    A Weyl monomial of ``a`` maps to the Weyl monomial with linearly pushed
    exponent, which is a homomorphism exactly when eps pushes forward.
    """
    if target is None:
        target = next(iter(images.values())).basis
    vecs: dict[str, tuple[int, ...]] = {}
    for g, img in images.items():
        if img.basis != target:
            raise ValueError("images must share the target basis")
        if not img.is_monomial():
            raise ValueError(f"image of {g} is not a monomial")
        (n, qp, om), c = next(iter(img.terms.items()))
        if c != 1 or qp or om:
            raise ValueError(f"image of {g} must be a coefficient-one Weyl monomial")
        vecs[g] = n
    if check:
        bad = pushforward_eps(vecs, a.basis, target)
        if bad:
            raise ValueError("inconsistent eps pushforward: " + "; ".join(bad))
    d: dict = {}
    for (n, qp, om), c in a.terms.items():
        acc = [0] * len(target)
        for i, v in enumerate(n):
            if not v:
                continue
            g = a.basis.names[i]
            if g not in vecs:
                raise ValueError(f"no image for generator {g}")
            for j, w in enumerate(vecs[g]):
                acc[j] += v * w
        if any(x % 2 for x in acc):
            raise ValueError("image exponent leaves the half-integer lattice")
        k = (tuple(x // 2 for x in acc), qp, om)
        d[k] = d.get(k, 0) + c
    return QLaurent(target, d)


def eval_numeric(a: QLaurent, assignment: Mapping[str, float], omega: Mapping[str, float] | None = None,
                 q: complex = 1.0) -> complex:
    """Evaluate with real generator values, real omegas and a complex q."""
    omega = omega or {}
    names = a.basis.names
    logq = cmath.log(q) if q != 1 else 0.0
    total = 0j
    for (n, qp, om), c in a.terms.items():
        s = 0.0
        for i, v in enumerate(n):
            if v:
                if names[i] not in assignment:
                    raise KeyError(f"missing value for {names[i]}")
                s += v * assignment[names[i]] / 2
        t = float(c) * math.exp(s)
        for name, e in om:
            if name not in omega:
                raise KeyError(f"missing value for omega {name}")
            t *= omega[name] ** e
        if qp:
            t *= cmath.exp(logq * qp / 4)
        total += t
    return total


def sum_of(items: Iterable[QLaurent], basis: Basis) -> QLaurent:
    out = basis.zero()
    for x in items:
        out = out + x
    return out
