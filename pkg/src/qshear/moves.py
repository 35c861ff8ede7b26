"""Flips of fat graphs, cluster mutations of lambda-lengths, tropical limits.

A flip of an inner edge Z with clockwise neighbourhoods (Z, A, B) and
(Z, C, D) produces vertices (Z', D, A) and (B, C, Z') and the coordinates

    A, C -> A + phi(Z),   B, D -> B - phi(-Z),   Z -> -Z,   phi(x) = log(1 + e^x).

A flip of the edge joining a loop (weight omega) to the vertex (Z, A, B)
swaps A and B around that vertex and shifts

    A -> A + log(1 + omega e^Z + e^2Z),   B -> B - log(1 + omega e^-Z + e^-2Z).

Shifts act per half-edge, so an edge meeting the flipped region twice takes
both.  The flipped edge keeps its name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .brackets import Seed, seed_from_graph
from .holonomy import compile_numeric
from .qtorus import QLaurent, hermitian_shift, qmul
from .surface import Edge, FatGraph, validate

__all__ = [
    "FlipError",
    "FlipEvent",
    "flip",
    "flip_inner",
    "flip_loop",
    "mutate_lambda",
    "exchange_numeric",
    "tropical_inner",
    "tropical_loop",
    "tropical_mutate",
    "Transcript",
    "replay",
]


class FlipError(ValueError):
    """The requested edge cannot be flipped or mutated."""


HalfEdge = tuple[str, int]  # (edge name, end index)
Dart = tuple[str, int]


def _phi(x: float) -> float:
    return math.log1p(math.exp(x)) if x < 30 else x + math.log1p(math.exp(-x))


def random_point(graph: FatGraph, rng: np.random.Generator, lo: float = -2.0, hi: float = 2.0):
    """Uniform shear coordinates and loop weights (hole perimeters drawn in [0.2, 2])."""
    values = {g: float(x) for g, x in zip(graph.generators, rng.uniform(lo, hi, len(graph.generators)))}
    omega = {}
    for w in sorted(graph.omegas):
        sym = graph.omegas[w]
        omega[w] = sym.value(float(rng.uniform(0.2, 2.0))) if sym.kind == "hole" else sym.value()
    return values, omega


@dataclass
class FlipEvent:
    kind: str  # "inner" or "loop"
    edge: str
    before: FatGraph
    after: FatGraph
    roles: dict[str, HalfEdge]  # A, B (and C, D) -> half-edge of the old graph
    loop: str | None = None

    # ---- coordinates
    def shifts(self, values: Mapping[str, float], omega: Mapping[str, float] | None = None) -> dict[HalfEdge, float]:
        z = values[self.edge]
        if self.kind == "inner":
            up, down = _phi(z), -_phi(-z)
        else:
            w = (omega or {})[self.loop]
            up = math.log(1 + w * math.exp(z) + math.exp(2 * z))
            down = -math.log(1 + w * math.exp(-z) + math.exp(-2 * z))
        return {h: (up if role in ("A", "C") else down) for role, h in self.roles.items()}

    def apply(self, values: Mapping[str, float], omega: Mapping[str, float] | None = None) -> dict[str, float]:
        """Coordinates on the new graph from those on the old one."""
        new = dict(values)
        for (e, _), s in self.shifts(values, omega).items():
            new[e] += s
        new[self.edge] = -values[self.edge]
        return new

    def substitution(self) -> list[str]:
        """Human-readable classical rule."""
        z = self.edge
        grow = "(1 + e^{%s})" % z if self.kind == "inner" else "(1 + %s e^{%s} + e^{2%s})" % (self.loop, z, z)
        shrink = "(1 + e^{-%s})" % z if self.kind == "inner" else "(1 + %s e^{-%s} + e^{-2%s})" % (self.loop, z, z)
        out = []
        for role in sorted(self.roles):
            e = self.roles[role][0]
            if role in ("A", "C"):
                out.append(f"{role}={e}: e^{{{e}'}} = {grow} e^{{{e}}}")
            else:
                out.append(f"{role}={e}: e^{{{e}'}} = {shrink}^(-1) e^{{{e}}}")
        out.append(f"e^{{{z}'}} = e^{{-{z}}}")
        return out

    def quantum_images(self) -> dict[str, QLaurent]:
        """Exponentiated images in the old quantum torus, as Hermitian polynomials.

        Keys are ``A'`` for growing edges (image of e^{A'}), ``-B'`` for
        shrinking ones (image of e^{-B'}) and the flipped edge.
        """
        basis = self.before.basis
        z = basis.vector({self.edge: 1})
        counts: dict[tuple[str, int], int] = {}
        for role, (e, _) in self.roles.items():
            sign = 1 if role in ("A", "C") else -1
            counts[(e, sign)] = counts.get((e, sign), 0) + 1
        out = {}
        for (e, sign), k in counts.items():
            base = basis.vector({e: sign})
            acc = basis.zero()
            for j, terms in enumerate(_poly_power(k, self.loop)):
                for om, c in terms.items():
                    n = tuple(b + sign * j * x for b, x in zip(base, z))
                    acc = acc + QLaurent(basis, {(n, 0, om): c})
            out[("" if sign > 0 else "-") + e + "'"] = acc
        out[self.edge + "'"] = basis.gen(self.edge, -1)
        return out

    # ---- paths
    def _region(self, graph: FatGraph) -> tuple[set[str], set[str]]:
        e = graph.edges[self.edge]
        inner = {self.edge} | ({self.loop} if self.loop else set())
        return {e.ends[0][0], e.ends[1][0]}, inner

    def transport(self, darts: Sequence[Dart], closed: bool, rng: np.random.Generator | None = None) -> list[Dart]:
        """Carry a path across the flip by matching local holonomies.

        Each stretch of the path inside the flipped neighbourhood is replaced
        by the stretch of the new graph with the same outer edges whose
        holonomy, corrected for the half-edge shifts, agrees at a random
        point.  The homotopy class fixes the stretch, so the match is unique.
        """
        rng = rng or np.random.default_rng(7)
        values, omega = random_point(self.before, rng, -1.5, 1.5)
        new_values = self.apply(values, omega)
        shifts = self.shifts(values, omega)
        old_verts, inner = self._region(self.before)
        new_verts, _ = self._region(self.after)
        darts = list(darts)
        m = len(darts)
        if closed:
            start = next((i for i in range(m) if darts[i][0] not in inner
                          and self.before.arrive(darts[i - 1])[0] not in old_verts), None)
            if start is None:
                start = next((i for i in range(m) if darts[i][0] not in inner), None)
            if start is None:
                raise ValueError("closed path lies inside the flipped region")
            darts = darts[start:] + darts[:start]
        out: list[Dart] = []
        i = 0
        while i < m:
            d = darts[i]
            out.append(d)
            if self.before.arrive(d)[0] not in old_verts or (i == m - 1 and not closed):
                i += 1
                continue
            j = i + 1
            while darts[j % m][0] in inner:
                j += 1
            d_out = darts[j % m]
            seg = [darts[k % m] for k in range(i, j + 1)]
            target = _local(self.before, seg, values, omega)
            s_in = shifts.get(d, 0.0)
            s_out = shifts.get((d_out[0], 1 - d_out[1]), 0.0)
            out.extend(_match(self.after, d, d_out, inner, target, new_values, omega,
                              s_in, s_out, len(seg) + 4))
            i = j
        return out

    def transport_word(self, darts: Sequence[Dart], closed: bool, rng=None):
        new = self.transport(darts, closed, rng)
        return new, self.after.word(new, closed)

    def back(self, darts: Sequence[Dart], closed: bool, rng=None) -> list[Dart]:
        """Carry a path on the new graph back to the old one (flip again, then relabel)."""
        again = flip(self.after, self.edge)
        moved = again.transport(darts, closed, rng)
        # the double flip returns the old graph with the flipped edge reversed
        return [(e, 1 - k) if e == self.edge and self.kind == "inner" else (e, k) for e, k in moved]


def _poly_power(k: int, loop: str | None) -> list[dict[tuple, int]]:
    """Coefficients of (1 + x)^k, or of (1 + omega x + x^2)^k, by power of x."""
    base = [{(): 1}, {(): 1}] if loop is None else [{(): 1}, {((loop, 1),): 1}, {(): 1}]
    poly: list[dict] = [{(): 1}]
    for _ in range(k):
        nxt: list[dict] = [{} for _ in range(len(poly) + len(base) - 1)]
        for a, ta in enumerate(poly):
            for b, tb in enumerate(base):
                for oa, xa in ta.items():
                    for ob, xb in tb.items():
                        om = _om_mul(oa, ob)
                        nxt[a + b][om] = nxt[a + b].get(om, 0) + xa * xb
        poly = nxt
    return poly


def _om_mul(a, b):
    d = dict(a)
    for k, v in b:
        d[k] = d.get(k, 0) + v
    return tuple(sorted(d.items()))


def _E(s: float) -> np.ndarray:
    return np.diag([math.exp(s / 2), math.exp(-s / 2)])


def _local(graph: FatGraph, seg, values, omega) -> np.ndarray:
    """Holonomy strictly between the first and last edge of a stretch."""
    full = compile_numeric(graph.segment_word(seg), values, omega)
    x_out = compile_numeric(f"X({seg[-1][0]})", values)
    x_in = compile_numeric(f"X({seg[0][0]})", values)
    return np.linalg.inv(x_out) @ full @ np.linalg.inv(x_in)


def _match(graph, d_in, d_out, inner, target, values, omega, s_in, s_out, depth):
    found = []

    def walk(path):
        for side in "RL":
            nxt = graph.turn(path[-1], side)
            if nxt[0] in inner:
                if len(path) < depth:
                    walk(path + [nxt])
            elif nxt == d_out:
                found.append(path[1:])

    walk([d_in])
    hits = []
    for mid in found:
        got = _E(-s_out) @ _local(graph, [d_in] + mid + [d_out], values, omega) @ _E(s_in)
        if np.allclose(got, target, rtol=1e-9, atol=1e-9):
            hits.append(mid)
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} matching passages from {d_in} to {d_out}")
    return hits[0]


# ---- graph surgery

def _rebuild(graph: FatGraph, new_ends: dict[str, tuple]) -> FatGraph:
    edges = []
    for name in graph.edge_order:
        e = graph.edges[name]
        edges.append(Edge(name, e.kind, new_ends.get(name, e.ends)))
    out = FatGraph(graph.vertices, edges, graph.omegas, graph.g, graph.s_h, graph.s_o, graph.n,
                   graph.clockwise, graph.name)
    rep = validate(out)
    if not rep.ok:
        raise FlipError("flip produced an invalid graph: " + "; ".join(rep.problems))
    return out


def _slot(graph: FatGraph, v: str, k: int) -> int:
    """Physical slot holding the k-th position clockwise."""
    return k % 3 if graph.clockwise else (-k) % 3


def _around(graph: FatGraph, h: tuple[str, int]) -> tuple[HalfEdge, HalfEdge]:
    """Half-edges following slot h clockwise."""
    v, s = h
    step = 1 if graph.clockwise else -1
    return graph.slots[(v, (s + step) % 3)], graph.slots[(v, (s + 2 * step) % 3)]


def flip_inner(graph: FatGraph, edge: str) -> FlipEvent:
    e = graph.edges.get(edge)
    if e is None:
        raise FlipError(f"no edge {edge}")
    if e.kind != "inner":
        raise FlipError(f"{edge} is a {e.kind} edge; only inner edges flip")
    (v1, s1), (v2, s2) = e.ends
    if v1 == v2:
        raise FlipError(f"{edge} joins a vertex to itself")
    if graph.loop_at(v1) or graph.loop_at(v2):
        raise FlipError(f"{edge} touches a loop; use flip_loop")
    A, B = _around(graph, (v1, s1))
    C, D = _around(graph, (v2, s2))
    ends: dict[str, list] = {}

    def put(h: HalfEdge, v: str, k: int):
        name, idx = h
        cur = ends.setdefault(name, list(graph.edges[name].ends))
        cur[idx] = (v, _slot(graph, v, k))

    # left vertex keeps v1: (Z, D, A); right keeps v2: (B, C, Z)
    put((edge, 0), v1, 0)
    put(D, v1, 1)
    put(A, v1, 2)
    put(B, v2, 0)
    put(C, v2, 1)
    put((edge, 1), v2, 2)
    after = _rebuild(graph, {k: tuple(v) for k, v in ends.items()})
    return FlipEvent("inner", edge, graph, after, {"A": A, "B": B, "C": C, "D": D})


def flip_loop(graph: FatGraph, edge: str) -> FlipEvent:
    e = graph.edges.get(edge)
    if e is None:
        raise FlipError(f"no edge {edge}")
    if e.kind != "inner":
        raise FlipError(f"{edge} is a {e.kind} edge; only inner edges flip")
    loops = [(i, graph.loop_at(h[0])) for i, h in enumerate(e.ends) if graph.loop_at(h[0])]
    if len(loops) != 1:
        raise FlipError(f"{edge} must touch exactly one loop")
    i, loop = loops[0]
    u, s = e.ends[1 - i]
    A, B = _around(graph, (u, s))
    ends: dict[str, list] = {}
    for h, target in ((A, B), (B, A)):
        name, idx = h
        cur = ends.setdefault(name, list(graph.edges[name].ends))
        cur[idx] = graph.edges[target[0]].ends[target[1]]
    after = _rebuild(graph, {k: tuple(v) for k, v in ends.items()})
    return FlipEvent("loop", edge, graph, after, {"A": A, "B": B}, loop)


def flip(graph: FatGraph, edge: str) -> FlipEvent:
    e = graph.edges.get(edge)
    if e is None:
        raise FlipError(f"no edge {edge}")
    if e.kind == "inner" and any(graph.loop_at(h[0]) for h in e.ends):
        return flip_loop(graph, edge)
    return flip_inner(graph, edge)


# ---- mutations of lambda-lengths

def _neighbours(seed: Seed, arc: str):
    graph = seed.graph
    if graph is None:
        raise FlipError("seed carries no dual graph")
    if arc not in seed.edge_of:
        raise FlipError(f"unknown arc {arc}")
    if seed.frozen[arc]:
        raise FlipError(f"{arc} is a bordering arc and never mutates")
    edge = seed.edge_of[arc]
    arc_of = {e: a for a, e in seed.edge_of.items()}
    ev = flip(graph, edge)
    return ev, {role: arc_of[h[0]] for role, h in ev.roles.items()}


def _weyl(t: QLaurent) -> QLaurent:
    """Rescale by the power of q that makes ``t`` Hermitian."""
    s = hermitian_shift(t)
    if s is None:
        raise FlipError("exchange term has no Hermitian normalisation")
    return t * t.basis.q(s) if s else t


def mutate_lambda(seed: Seed, arc: str, namer: Callable[[FatGraph, str, tuple], str] | None = None,
                  mode: str = "quantum") -> tuple[Seed, str, QLaurent]:
    """Exchange ``arc`` for the other diagonal of its quadrilateral (or monogon).

    Returns the new seed (dual to the flipped graph, lambda-lengths monomial
    in its own torus), the new arc's name and its lambda-length in the old
    seed's torus:

        inner:    l_f = [l_a l_e^-1 l_c] + [l_b l_e^-1 l_d]
        monogon:  l_d = l_a l_c^-1 l_a + l_b l_c^-1 l_b + omega q^((I(a,c)-I(b,c))/4) l_a l_c^-1 l_b

    Brackets mean the Hermitian rescaling; it is trivial when the three
    factors' commutators cancel, as on a quadrangle.  The monogon q-power has the sign that makes l_d Hermitian under the torus
    product q^(u eps v); see :func:`check_homogeneous` for the same reversal.
    """
    ev, nb = _neighbours(seed, arc)
    val = seed.values
    inv = val[arc].inverse()
    if ev.kind == "inner":
        a, b, c, d = (val[nb[r]] for r in "ABCD")
        new = _weyl(qmul(qmul(a, inv), c)) + _weyl(qmul(qmul(b, inv), d))
    else:
        a, b = val[nb["A"]], val[nb["B"]]
        inc = seed.incidence()
        p = inc[(nb["A"], arc)] - inc[(nb["B"], arc)]
        w = a.basis.omega(ev.loop)
        new = (qmul(qmul(a, inv), a) + qmul(qmul(b, inv), b)
               + w * a.basis.q(p) * qmul(qmul(a, inv), b))
    if mode == "classical":
        new = new.classical()
    names = {e: a for a, e in seed.edge_of.items()}
    if namer is None:
        names[ev.edge] = arc + "'"
        nxt = seed_from_graph(ev.after, names)
    else:
        nxt = seed_from_graph(ev.after, namer=namer)
    new_name = next(a for a, e in nxt.edge_of.items() if e == ev.edge)
    nxt.previous = seed
    nxt.event = ev
    return nxt, new_name, new


def exchange_numeric(kind: str, la: float, lb: float, lc: float, ld: float = 0.0,
                     le: float = 1.0, omega: float = 2.0) -> float:
    """Classical exchange relation on numbers: Ptolemy (inner) or the generalised one (monogon)."""
    if kind == "inner":
        return (la * lc + lb * ld) / le
    return (la * la + lb * lb + omega * la * lb) / lc


# ---- tropical limit

def tropical_inner(la: int, lb: int, lc: int, ld: int, le: int) -> int:
    return max(la + lc, lb + ld) - le


def tropical_loop(la: int, lb: int, le: int) -> int:
    return max(2 * la, 2 * lb) - le


def tropical_mutate(seed: Seed, lengths: Mapping[str, int], arc: str) -> dict[str, int]:
    """Max-plus shadow of :func:`mutate_lambda` on integer lamination lengths."""
    for k, v in lengths.items():
        if int(v) != v or v < 0:
            raise ValueError(f"length of {k} must be a nonnegative integer")
    ev, nb = _neighbours(seed, arc)
    L = lambda r: lengths[nb[r]]  # noqa: E731
    if ev.kind == "inner":
        new = tropical_inner(L("A"), L("B"), L("C"), L("D"), lengths[arc])
    else:
        new = tropical_loop(L("A"), L("B"), lengths[arc])
    out = {k: v for k, v in lengths.items() if k != arc}
    out[arc + "'"] = new
    return out


# ---- transcripts

@dataclass
class Transcript:
    """Replayable list of (edge, kind) flips applied to a named surface."""

    surface: str
    steps: list[tuple[str, str]] = field(default_factory=list)

    def to_text(self) -> str:
        return "\n".join([f"surface {self.surface}"] + [f"flip {e} {k}" for e, k in self.steps]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Transcript":
        lines = [x.split("#", 1)[0].strip() for x in text.splitlines()]
        lines = [x for x in lines if x]
        if not lines or not lines[0].startswith("surface "):
            raise ValueError("transcript must start with 'surface <name>'")
        t = cls(lines[0].split(None, 1)[1])
        for n, x in enumerate(lines[1:], 2):
            parts = x.split()
            if len(parts) != 3 or parts[0] != "flip" or parts[2] not in ("inner", "loop"):
                raise ValueError(f"line {n}: expected 'flip <edge> inner|loop'")
            t.steps.append((parts[1], parts[2]))
        return t


def replay(graph: FatGraph, transcript: Transcript) -> list[FlipEvent]:
    events = []
    for edge, kind in transcript.steps:
        ev = flip(graph, edge)
        if ev.kind != kind:
            raise FlipError(f"{edge} is a {ev.kind} flip, transcript says {kind}")
        events.append(ev)
        graph = ev.after
    return events
