"""Cusped fat graphs: parsing, validation, structure matrix and dual arcs.

Conventions
-----------
Each trivalent vertex lists its three half-edges in clockwise order as slots
0, 1, 2.  A path arriving through slot ``i`` turns right into slot ``i - 1``
and left into slot ``i + 1``.  The structure matrix gets +1 at
(J_i, J_{i+1}) for clockwise-consecutive generators at every vertex.

A dart ``(edge, end)`` traverses ``edge`` and arrives at ``edge.ends[end]``.
Open edges store the trivalent end first and the cusp second.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .holonomy import PathWord, Token
from .qtorus import Basis, QLaurent

__all__ = [
    "SurfaceError",
    "OmegaSymbol",
    "Edge",
    "FatGraph",
    "Report",
    "DualLamination",
    "parse_surface",
    "validate",
    "epsilon_matrix",
    "dual_lamination",
    "casimirs",
]

Dart = tuple[str, int]
HalfEdge = tuple[str, int]


class SurfaceError(ValueError):
    """Malformed surface description."""


@dataclass(frozen=True)
class OmegaSymbol:
    name: str
    kind: str  # "hole" or "orbifold"
    p: int | None = None

    def value(self, perimeter: float = 0.0) -> float:
        import math
        if self.kind == "orbifold":
            return 2 * math.cos(math.pi / self.p)
        return 2 * math.cosh(perimeter / 2)


@dataclass(frozen=True)
class Edge:
    name: str
    kind: str  # inner, open, loop
    ends: tuple[HalfEdge, HalfEdge]


@dataclass
class Report:
    problems: list[str] = field(default_factory=list)
    facts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.problems

    def lines(self) -> list[str]:
        out = [f"{k}={v}" for k, v in self.facts.items()]
        out += [f"problem: {p}" for p in self.problems]
        out.append("status=" + ("valid" if self.ok else "invalid"))
        return out


class FatGraph:
    """Fat graph with trivalent and cusp vertices.

    ``clockwise=False`` mirrors the surface: every cyclic order is read the
    other way, which negates the structure matrix and swaps turns.
    """

    def __init__(self, vertices: dict[str, str], edges: list[Edge], omegas: dict[str, OmegaSymbol],
                 g: int, s_h: int, s_o: int, n: int, clockwise: bool = True, name: str = ""):
        self.vertices = dict(vertices)
        self.edges = {e.name: e for e in edges}
        self.edge_order = [e.name for e in edges]
        self.omegas = dict(omegas)
        self.g, self.s_h, self.s_o, self.n = g, s_h, s_o, n
        self.clockwise = clockwise
        self.name = name
        self.slots: dict[HalfEdge, tuple[str, int]] = {}
        for e in edges:
            for i, h in enumerate(e.ends):
                if h in self.slots:
                    raise SurfaceError(f"slot {h[0]}.{h[1]} used twice")
                self.slots[h] = (e.name, i)
        self._basis = None

    # ---- derived data
    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(e for e in self.edge_order if self.edges[e].kind != "loop")

    @property
    def s(self) -> int:
        return self.s_h + self.s_o

    @property
    def basis(self) -> Basis:
        if self._basis is None:
            self._basis = epsilon_matrix(self)
        return self._basis

    def trivalent(self) -> list[str]:
        return [v for v, k in self.vertices.items() if k == "trivalent"]

    def cusps(self) -> list[str]:
        return [v for v, k in self.vertices.items() if k == "cusp"]

    def cyclic(self, v: str) -> tuple[str, str, str]:
        """Edge names at a trivalent vertex in clockwise order."""
        order = [self.slots[(v, i)][0] for i in range(3)]
        return tuple(order) if self.clockwise else (order[0], order[2], order[1])

    def loop_at(self, v: str) -> str | None:
        for i in range(3):
            e = self.slots.get((v, i))
            if e and self.edges[e[0]].kind == "loop":
                return e[0]
        return None

    def cusp_of(self, edge: str) -> str:
        return self.edges[edge].ends[1][0]

    def open_edge_at(self, cusp: str) -> str:
        return self.slots[(cusp, 0)][0]

    # ---- darts and turns
    def arrive(self, d: Dart) -> HalfEdge:
        return self.edges[d[0]].ends[d[1]]

    def depart(self, h: HalfEdge) -> Dart:
        e, i = self.slots[h]
        return (e, 1 - i)

    @staticmethod
    def reverse(d: Dart) -> Dart:
        return (d[0], 1 - d[1])

    def _step(self) -> int:
        return 1 if self.clockwise else -1

    def turn(self, d: Dart, side: str) -> Dart:
        v, s = self.arrive(d)
        if self.vertices[v] != "trivalent":
            raise ValueError(f"cannot turn at cusp {v}")
        delta = -self._step() if side == "R" else self._step()
        return self.depart((v, (s + delta) % 3))

    def turn_between(self, d1: Dart, d2: Dart) -> str:
        for side in "RL":
            if self.turn(d1, side) == d2:
                return side
        raise ValueError(f"darts {d1} and {d2} are not consecutive")

    def is_cusp_arrival(self, d: Dart) -> bool:
        return self.vertices[self.arrive(d)[0]] == "cusp"

    def right_walk(self, d: Dart, limit: int = 10_000) -> list[Dart]:
        """Darts after ``d`` obtained by turning right until a cusp is reached."""
        out = []
        cur = d
        while not self.is_cusp_arrival(cur):
            cur = self.turn(cur, "R")
            out.append(cur)
            if len(out) > limit:
                raise ValueError("right walk does not reach a cusp")
        return out

    def faces(self) -> list[list[Dart]]:
        """Boundary cycles: right turns at trivalent vertices, bounce at cusps."""
        seen = set()
        out = []
        for e in self.edge_order:
            for end in (0, 1):
                d0 = (e, end)
                if d0 in seen:
                    continue
                cyc = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    cyc.append(d)
                    d = self.reverse(d) if self.is_cusp_arrival(d) else self.turn(d, "R")
                out.append(cyc)
        return out

    # ---- words
    def word(self, darts: list[Dart], closed: bool = False) -> PathWord:
        """Holonomy word of a path given by consecutive darts."""
        darts = list(darts)
        if closed:
            darts = _rotate_closed(self, darts)
        toks = self._tokens(darts, closed)
        if not closed:
            if not (self.vertices[self.arrive(self.reverse(darts[0]))[0]] == "cusp"
                    and self.is_cusp_arrival(darts[-1])):
                raise ValueError("arc must start and end at cusps")
            toks = [Token("K")] + toks
        return PathWord(tuple(toks))

    def segment_word(self, darts: list[Dart]) -> PathWord:
        """Word of an open stretch of path, with no cusp factor."""
        return PathWord(tuple(self._tokens(list(darts), False)))

    def _tokens(self, darts: list[Dart], closed: bool) -> list[Token]:
        items: list[Token] = []
        m = len(darts)
        i = 0
        while True:
            d = darts[i]
            if self.edges[d[0]].kind == "loop":
                raise ValueError("path starts or ends inside a loop")
            items.append(Token("X", d[0]))
            j = i + 1
            if j == m:
                if closed:
                    items.append(Token(self.turn_between(d, darts[0])))
                break
            if self.edges[darts[j][0]].kind == "loop":
                while j < m and self.edges[darts[j][0]].kind == "loop":
                    j += 1
                if j == m:
                    raise ValueError("path ends inside a loop")
                entry = self.turn_between(d, darts[i + 1])
                self._check_winding(darts[i:j + 1], entry)
                if darts[j][0] != d[0]:
                    raise ValueError("loop must be entered and left along the same edge")
                # entering by a left turn winds like L X L, which is F; a right entry gives F^-1
                items.append(Token("F" if entry == "L" else "Finv", darts[i + 1][0], j - i - 1))
                i = j
                continue
            items.append(Token(self.turn_between(d, darts[j])))
            i = j
        return list(reversed(items))

    def _check_winding(self, seg: list[Dart], entry: str):
        other = "L" if entry == "R" else "R"
        if self.turn_between(seg[0], seg[1]) != entry:
            raise ValueError("bad loop entry")
        for a, b in zip(seg[1:-2], seg[2:-1]):
            if self.turn_between(a, b) != other:
                raise ValueError("loop windings must keep one sense")
        if self.turn_between(seg[-2], seg[-1]) != entry:
            raise ValueError("loop exit turn must match the entry turn")

    def path_from_word(self, word: PathWord) -> list[Dart]:
        """Recover darts from a word (read right to left); tries both senses of the first edge."""
        toks = [t for t in reversed(word.tokens) if t.kind != "K"]
        errors = []
        first = toks[0]
        if first.kind != "X":
            raise ValueError("word must start with an edge")
        for end in (0, 1):
            try:
                return self._follow(toks, (first.name, end), closed=word.closed)
            except ValueError as exc:
                errors.append(str(exc))
        raise ValueError("word is not a path on this graph: " + "; ".join(errors))

    def _follow(self, toks: list[Token], start: Dart, closed: bool) -> list[Dart]:
        darts = [start]
        i = 1
        while i < len(toks):
            t = toks[i]
            if t.kind in ("L", "R"):
                nxt = self.turn(darts[-1], t.kind)
                if i + 1 >= len(toks):
                    if closed and nxt == darts[0]:
                        return darts
                    raise ValueError("word does not close up")
                if toks[i + 1].kind != "X" or nxt[0] != toks[i + 1].name:
                    raise ValueError(f"turn {t.kind} after {darts[-1][0]} does not lead to "
                                     f"{toks[i + 1].name if toks[i + 1].kind == 'X' else toks[i + 1]}")
                darts.append(nxt)
                i += 2
            elif t.kind in ("F", "Finv"):
                entry = "L" if t.kind == "F" else "R"
                other = "L" if entry == "R" else "R"
                d = self.turn(darts[-1], entry)
                if self.edges[d[0]].kind != "loop" or d[0] != t.name:
                    raise ValueError(f"no loop {t.name} here")
                darts.append(d)
                for _ in range(t.k - 1):
                    d = self.turn(d, other)
                    darts.append(d)
                d = self.turn(d, entry)
                if i + 1 >= len(toks) or toks[i + 1].kind != "X" or toks[i + 1].name != d[0]:
                    raise ValueError("loop token must sit between two copies of its edge")
                darts.append(d)
                i += 2
            else:
                raise ValueError("edges must be separated by turns")
        if closed:
            raise ValueError("closed word lacks its closing turn")
        if not self.is_cusp_arrival(darts[-1]):
            raise ValueError("arc does not end at a cusp")
        return darts

    # ---- transformations
    def mirrored(self) -> "FatGraph":
        return FatGraph(self.vertices, [self.edges[e] for e in self.edge_order], self.omegas,
                        self.g, self.s_h, self.s_o, self.n, not self.clockwise, self.name)

    def to_text(self) -> str:
        lines = [f"surface g={self.g} s_h={self.s_h} s_o={self.s_o} n={self.n}"]
        if not self.clockwise:
            lines.append("orientation counterclockwise")
        for v, k in self.vertices.items():
            lines.append(f"vertex {v} {k}")
        for name in self.edge_order:
            e = self.edges[name]
            if e.kind == "loop":
                om = self.omegas[name]
                extra = f"omega=orbifold p={om.p}" if om.kind == "orbifold" else "omega=hole"
                lines.append(f"edge {name} loop {e.ends[0][0]} {extra}")
            elif e.kind == "open":
                lines.append(f"edge {name} open {e.ends[0][0]}.{e.ends[0][1]} {e.ends[1][0]}")
            else:
                lines.append(f"edge {name} inner {e.ends[0][0]}.{e.ends[0][1]} {e.ends[1][0]}.{e.ends[1][1]}")
        return "\n".join(lines) + "\n"


def _rotate_closed(graph: FatGraph, darts: list[Dart]) -> list[Dart]:
    m = len(darts)
    for r in range(m):
        cand = darts[r:] + darts[:r]
        if graph.edges[cand[0][0]].kind != "loop" and graph.edges[cand[-1][0]].kind != "loop":
            # a loop run must not wrap around the end
            return cand
    raise ValueError("closed path made only of loops")


# ---- parsing

_HEADER = re.compile(r"surface\s+g=(\d+)\s+s_h=(\d+)\s+s_o=(\d+)\s+n=(\d+)\s*$")
_HALF = re.compile(r"(\w+)\.(\d+)$")


def parse_surface(text: str, strict: bool = True, name: str = "") -> FatGraph:
    """Parse the line-oriented surface format; ``strict`` also runs :func:`validate`."""
    header = None
    vertices: dict[str, str] = {}
    edges: list[Edge] = []
    omegas: dict[str, OmegaSymbol] = {}
    loops: list[tuple[str, str, int]] = []
    clockwise = True
    used: dict[HalfEdge, int] = {}

    def fail(lineno: int, col: int, msg: str):
        raise SurfaceError(f"line {lineno}, column {col}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        parts = line.split()
        kw = parts[0]
        if kw == "surface":
            m = _HEADER.match(line.strip())
            if not m:
                fail(lineno, col, "expected 'surface g=<int> s_h=<int> s_o=<int> n=<int>'")
            if header:
                fail(lineno, col, "duplicate surface header")
            header = tuple(int(x) for x in m.groups())
        elif kw == "orientation":
            if len(parts) != 2 or parts[1] not in ("clockwise", "counterclockwise"):
                fail(lineno, col, "orientation must be clockwise or counterclockwise")
            clockwise = parts[1] == "clockwise"
        elif kw == "vertex":
            if len(parts) != 3 or parts[2] not in ("trivalent", "cusp"):
                fail(lineno, col, "expected 'vertex <name> trivalent|cusp'")
            if parts[1] in vertices:
                fail(lineno, col, f"duplicate vertex {parts[1]}")
            vertices[parts[1]] = parts[2]
        elif kw == "edge":
            if len(parts) < 4:
                fail(lineno, col, "expected 'edge <name> <kind> ...'")
            ename, kind = parts[1], parts[2]
            if any(e.name == ename for e in edges) or ename in omegas:
                fail(lineno, col, f"duplicate edge {ename}")

            def half(tok: str) -> HalfEdge:
                m = _HALF.match(tok)
                if not m:
                    fail(lineno, line.find(tok) + 1, f"expected vertex.slot, got {tok!r}")
                v, s = m.group(1), int(m.group(2))
                if v not in vertices:
                    fail(lineno, line.find(tok) + 1, f"unknown vertex {v}")
                if vertices[v] != "trivalent":
                    fail(lineno, line.find(tok) + 1, f"{v} is not trivalent")
                if not 0 <= s <= 2:
                    fail(lineno, line.find(tok) + 1, f"slot {s} out of range 0..2")
                if (v, s) in used:
                    fail(lineno, line.find(tok) + 1, f"slot {v}.{s} already used on line {used[(v, s)]}")
                used[(v, s)] = lineno
                return (v, s)

            if kind == "inner":
                if len(parts) != 5:
                    fail(lineno, col, "inner edge needs two vertex.slot ends")
                edges.append(Edge(ename, "inner", (half(parts[3]), half(parts[4]))))
            elif kind == "open":
                if len(parts) != 5:
                    fail(lineno, col, "open edge needs vertex.slot and a cusp")
                h = half(parts[3])
                c = parts[4]
                if vertices.get(c) != "cusp":
                    fail(lineno, line.find(c) + 1, f"{c} is not a cusp vertex")
                if (c, 0) in used:
                    fail(lineno, line.find(c) + 1, f"cusp {c} already has an edge")
                used[(c, 0)] = lineno
                edges.append(Edge(ename, "open", (h, (c, 0))))
            elif kind == "loop":
                v = parts[3]
                if vertices.get(v) != "trivalent":
                    fail(lineno, line.find(v) + 1, f"loop vertex {v} is not trivalent")
                opts = dict(p.split("=", 1) for p in parts[4:] if "=" in p)
                om = opts.get("omega")
                if om == "hole":
                    omegas[ename] = OmegaSymbol(ename, "hole")
                elif om == "orbifold":
                    try:
                        p = int(opts.get("p", ""))
                    except ValueError:
                        fail(lineno, col, "orbifold loop needs p=<int>")
                    if p < 2:
                        fail(lineno, col, "orbifold order must be at least 2")
                    omegas[ename] = OmegaSymbol(ename, "orbifold", p)
                else:
                    fail(lineno, col, "loop needs omega=hole or omega=orbifold p=<int>")
                loops.append((ename, v, lineno))
                edges.append(Edge(ename, "loop", ((v, -1), (v, -1))))
            else:
                fail(lineno, col, f"unknown edge kind {kind!r}")
        else:
            fail(lineno, col, f"unknown keyword {kw!r}")

    if header is None:
        raise SurfaceError("line 1, column 1: missing surface header")
    # loops take the two free slots of their vertex
    for ename, v, lineno in loops:
        free = [s for s in range(3) if (v, s) not in used]
        if len(free) != 2:
            raise SurfaceError(f"line {lineno}, column 1: vertex {v} has no room for loop {ename}")
        for s in free:
            used[(v, s)] = lineno
        idx = next(i for i, e in enumerate(edges) if e.name == ename)
        edges[idx] = Edge(ename, "loop", ((v, free[0]), (v, free[1])))
    for v, k in vertices.items():
        for s in (range(3) if k == "trivalent" else [0]):
            if (v, s) not in used:
                raise SurfaceError(f"dangling half-edge {v}.{s}" if k == "trivalent"
                                   else f"cusp {v} has no edge")
    graph = FatGraph(vertices, edges, omegas, *header, clockwise=clockwise, name=name)
    if strict:
        rep = validate(graph)
        if not rep.ok:
            raise SurfaceError("; ".join(rep.problems))
    return graph


# ---- validation and invariants

def validate(graph: FatGraph) -> Report:
    rep = Report()
    p = rep.problems
    g, n, s = graph.g, graph.n, graph.s
    for e in graph.edges.values():
        kinds = [graph.vertices.get(h[0]) for h in e.ends]
        if e.kind == "open" and kinds != ["trivalent", "cusp"]:
            p.append(f"open edge {e.name} must join a trivalent vertex to a cusp")
        if e.kind == "inner" and kinds != ["trivalent", "trivalent"]:
            p.append(f"inner edge {e.name} must join trivalent vertices")
        if e.kind == "loop" and (e.ends[0][0] != e.ends[1][0]):
            p.append(f"loop {e.name} must start and end at one vertex")
    for (v, sl), (e, _) in graph.slots.items():
        if graph.vertices.get(v) == "trivalent" and not 0 <= sl <= 2:
            p.append(f"bad slot {v}.{sl}")
    tri = len(graph.trivalent())
    cusps = len(graph.cusps())
    loops = [e for e in graph.edges.values() if e.kind == "loop"]
    orb = [e for e in loops if graph.omegas[e.name].kind == "orbifold"]
    faces = graph.faces()
    cusped = [f for f in faces if any(graph.is_cusp_arrival(d) for d in f)]
    monogons = [f for f in faces if len(f) == 1 and graph.edges[f[0][0]].kind == "loop"]
    s_c = len(cusped)
    rep.facts.update(trivalent=tri, cusps=cusps, edges=len(graph.edges), faces=len(faces),
                     cusped_holes=s_c, generators=len(graph.generators))
    if cusps != n:
        p.append(f"cusp count {cusps} != n={n}")
    if tri != 4 * g + 2 * s + n - 4:
        p.append(f"trivalent vertex count {tri} != 4g+2s+n-4 = {4 * g + 2 * s + n - 4}")
    if len(faces) != s:
        p.append(f"boundary cycle count {len(faces)} != s_h+s_o = {s}")
    euler = tri + cusps - len(graph.edges) + len(faces)
    if euler != 2 - 2 * g:
        p.append(f"Euler characteristic {euler} != 2-2g = {2 - 2 * g}")
    if len(orb) != graph.s_o:
        p.append(f"orbifold loop count {len(orb)} != s_o={graph.s_o}")
    if n >= 1:
        if len(monogons) != len(loops):
            p.append("every loop must bound a monogon")
        if len(faces) - s_c != len(loops):
            p.append(f"{len(faces) - s_c} uncusped holes/orbifold points but {len(loops)} loops")
        want = 6 * g - 6 + 2 * s + s_c + 2 * n
        if len(graph.generators) != want:
            p.append(f"generator count {len(graph.generators)} != 6g-6+2s+s_c+2n = {want}")
    rep.facts["lamination_size"] = 6 * g - 6 + 3 * s + 2 * n
    return rep


def epsilon_matrix(graph: FatGraph, include_loops: bool = False) -> Basis:
    """Structure matrix from clockwise-consecutive generators at trivalent vertices.

    With ``include_loops`` loop edges take part as extra generators; the
    returned basis then lists them too (used to check that they change nothing
    among the genuine generators).
    """
    names = list(graph.generators)
    if include_loops:
        names += [e for e in graph.edge_order if graph.edges[e].kind == "loop"]
    idx = {x: i for i, x in enumerate(names)}
    m = [[0] * len(names) for _ in names]
    for v in graph.trivalent():
        cyc = graph.cyclic(v)
        for i in range(3):
            a, b = cyc[i], cyc[(i + 1) % 3]
            if a in idx and b in idx:
                m[idx[a]][idx[b]] += 1
                m[idx[b]][idx[a]] -= 1
    kinds = tuple({"inner": "Z", "open": "pi", "loop": "omega"}[graph.edges[x].kind] for x in names)
    return Basis(tuple(names), m, kinds)


@dataclass
class DualLamination:
    arcs: list[str]
    words: dict[str, PathWord]
    paths: dict[str, list[Dart]]
    lambdas: dict[str, QLaurent]
    omega_cycles: list[str]
    ends: dict[str, tuple[str, str]]

    def __len__(self):
        return len(self.arcs) + len(self.omega_cycles)


def reverse_path(graph: FatGraph, darts: list[Dart]) -> list[Dart]:
    return [graph.reverse(d) for d in reversed(darts)]


def arc_path(graph: FatGraph, edge: str) -> list[Dart]:
    """Left turns from a cusp into ``edge``, then right turns to a cusp."""
    e = graph.edges[edge]
    if e.kind == "loop":
        raise ValueError("loops carry no arc")
    if e.kind == "open":
        d = (edge, 0)
        return [d] + graph.right_walk(d)
    d = (edge, 1)
    if graph.loop_at(e.ends[0][0]) and not graph.loop_at(e.ends[1][0]):
        d = (edge, 0)
    back = graph.right_walk(graph.reverse(d))
    return reverse_path(graph, back) + [d] + graph.right_walk(d)


def pass_count_monomial(graph: FatGraph, darts: list[Dart]) -> QLaurent:
    """exp(sum of traversed generators / 2), counting repeated passes."""
    counts: dict[str, Fraction] = {}
    for e, _ in darts:
        if graph.edges[e].kind != "loop":
            counts[e] = counts.get(e, 0) + Fraction(1, 2)
    return graph.basis.mono(counts)


def arc_name(graph: FatGraph, edge: str) -> str:
    return f"l_{edge}"


def dual_lamination(graph: FatGraph, names: dict[str, str] | None = None) -> DualLamination:
    """One arc per non-loop edge, plus the omega symbols."""
    if graph.n == 0:
        raise ValueError("dual arcs need at least one cusp")
    names = names or {}
    arcs, words, paths, lams, ends = [], {}, {}, {}, {}
    for e in graph.generators:
        a = names.get(e, arc_name(graph, e))
        path = arc_path(graph, e)
        arcs.append(a)
        paths[a] = path
        words[a] = graph.word(path)
        lams[a] = pass_count_monomial(graph, path)
        ends[a] = (graph.arrive(graph.reverse(path[0]))[0], graph.arrive(path[-1])[0])
    return DualLamination(arcs, words, paths, lams, sorted(graph.omegas), ends)


def casimirs(graph: FatGraph) -> list[QLaurent]:
    """Boundary sums of the cusped holes (each dart counts one half) and the omegas."""
    out = []
    basis = graph.basis
    for face in graph.faces():
        if not any(graph.is_cusp_arrival(d) for d in face):
            continue
        counts: dict[str, Fraction] = {}
        for e, _ in face:
            if graph.edges[e].kind != "loop":
                counts[e] = counts.get(e, 0) + Fraction(1, 2)
        out.append(basis.mono(counts))
    for w in sorted(graph.omegas):
        out.append(basis.omega(w))
    return out


def iter_closed_paths(graph: FatGraph, max_len: int) -> Iterator[list[Dart]]:
    """Reduced closed dart cycles of length <= max_len that avoid cusps (for tests)."""
    darts = [(e, i) for e in graph.edge_order for i in (0, 1)
             if graph.edges[e].kind != "open"]

    def extend(path):
        if len(path) > max_len:
            return
        last = path[-1]
        for side in "RL":
            nxt = graph.turn(last, side)
            if graph.edges[nxt[0]].kind == "open":
                continue
            if nxt == path[0] and len(path) > 1:
                yield list(path)
            elif len(path) < max_len:
                yield from extend(path + [nxt])

    for d in darts:
        if graph.edges[d[0]].kind == "loop":
            continue
        yield from extend([d])
