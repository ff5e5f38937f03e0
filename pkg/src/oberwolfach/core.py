"""Graph kernel: vertices, arcs, paths, directed cycles, 2-regular digraphs.

Vertices live on a two-row strip: row ``x`` and row ``y``, each indexed by a
non-negative block number.  All structures are immutable and hashable, so
they can be shared freely between threads and used as dict keys.  The text
forms used everywhere (serialisation, CLI, tables) are ``x3`` / ``y11`` for
vertices, ``(x0,x1,y2)`` for cycles and ``<x0,y1>`` for paths.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Union


class Vertex(NamedTuple):
    """A labelled vertex; sorts by row (``x`` before ``y``), then index."""

    side: str
    index: int

    def text(self) -> str:
        return f"{self.side}{self.index}"

    def __repr__(self) -> str:
        return self.text()


_VERTEX_RE = re.compile(r"^([xy])(\d+)$")


def parse_vertex(token: str) -> Vertex:
    m = _VERTEX_RE.match(token.strip())
    if not m:
        raise ValueError(f"bad vertex token: {token!r}")
    return Vertex(m.group(1), int(m.group(2)))


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex

    def reversed(self) -> "Arc":
        return Arc(self.head, self.tail)

    def __repr__(self) -> str:
        return f"{self.tail.text()}->{self.head.text()}"


def arc(tail: Vertex, head: Vertex) -> Arc:
    if tail == head:
        raise ValueError(f"loop arc at {tail}")
    return Arc(tail, head)


class DirectedPath:
    """A directed path given by its vertex sequence (no repeats)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Vertex]):
        vs = tuple(vertices)
        if not vs:
            raise ValueError("empty path")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in path {vs}")
        self.vertices = vs

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def terminal(self) -> Vertex:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def internal_vertices(self) -> frozenset:
        return frozenset(self.vertices[1:-1])

    def arcs(self) -> tuple:
        vs = self.vertices
        return tuple(Arc(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def text(self) -> str:
        return "<" + ",".join(v.text() for v in self.vertices) + ">"

    def __eq__(self, other) -> bool:
        return isinstance(other, DirectedPath) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(("P", self.vertices))

    def __repr__(self) -> str:
        return self.text()


class DirectedCycle:
    """A directed cycle, stored in canonical rotation (least vertex first)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Vertex]):
        vs = tuple(vertices)
        if len(vs) < 2:
            raise ValueError("cycle needs at least 2 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        k = vs.index(min(vs))
        self.vertices = vs[k:] + vs[:k]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> tuple:
        vs = self.vertices
        n = len(vs)
        return tuple(Arc(vs[i], vs[(i + 1) % n]) for i in range(n))

    def text(self) -> str:
        return "(" + ",".join(v.text() for v in self.vertices) + ")"

    def __eq__(self, other) -> bool:
        return isinstance(other, DirectedCycle) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(("C", self.vertices))

    def __repr__(self) -> str:
        return self.text()


class TwoRegularDigraph:
    """A vertex-disjoint union of directed cycles."""

    __slots__ = ("cycles",)

    def __init__(self, cycles: Iterable[DirectedCycle]):
        cs = tuple(sorted(cycles, key=lambda c: c.vertices))
        seen: set = set()
        for c in cs:
            for v in c.vertices:
                if v in seen:
                    raise ValueError(f"cycles share vertex {v}")
                seen.add(v)
        self.cycles = cs

    def vertices(self) -> frozenset:
        return frozenset(v for c in self.cycles for v in c.vertices)

    def arcs(self) -> frozenset:
        return frozenset(a for c in self.cycles for a in c.arcs())

    @property
    def order(self) -> int:
        return sum(c.length for c in self.cycles)

    def text(self) -> str:
        return "{" + ", ".join(c.text() for c in self.cycles) + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoRegularDigraph) and self.cycles == other.cycles

    def __hash__(self) -> int:
        return hash(("T", self.cycles))

    def __repr__(self) -> str:
        return self.text()


class CycleType:
    """Multiset of directed-cycle lengths, kept sorted non-decreasing."""

    __slots__ = ("lengths",)

    def __init__(self, lengths: Iterable[int]):
        ls = tuple(sorted(int(x) for x in lengths))
        if any(x < 2 for x in ls):
            raise ValueError(f"cycle lengths must be >= 2: {ls}")
        self.lengths = ls

    @property
    def order(self) -> int:
        return sum(self.lengths)

    def is_bipartite(self) -> bool:
        return all(x % 2 == 0 for x in self.lengths)

    def counts(self) -> list:
        """Distinct lengths with multiplicities, ascending."""
        out: list = []
        for x in self.lengths:
            if out and out[-1][0] == x:
                out[-1][1] += 1
            else:
                out.append([x, 1])
        return [(a, b) for a, b in out]

    def text(self) -> str:
        parts = []
        for length, mult in self.counts():
            parts.append(f"{length}^{mult}" if mult > 1 else str(length))
        return "[" + ",".join(parts) + "]"

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleType) and self.lengths == other.lengths

    def __hash__(self) -> int:
        return hash(("F", self.lengths))

    def __repr__(self) -> str:
        return self.text()


_SPEC_PART_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_cycle_type(text: str) -> CycleType:
    """Parse ``[2^3,4]`` or ``[2,2,2,4]`` into a canonical CycleType."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    lengths: list = []
    if s.strip():
        for part in s.split(","):
            m = _SPEC_PART_RE.match(part.strip())
            if not m:
                raise ValueError(f"bad factor spec component: {part!r}")
            length = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) else 1
            if mult < 1:
                raise ValueError(f"exponent must be >= 1 in {part!r}")
            lengths.extend([length] * mult)
    return CycleType(lengths)


class Digraph:
    """A plain digraph: a vertex set plus an arc set (no multiplicities)."""

    __slots__ = ("vertices", "arcs")

    def __init__(self, vertices: Iterable[Vertex], arcs: Iterable[Arc]):
        self.vertices = frozenset(vertices)
        self.arcs = frozenset(arcs)
        for a in self.arcs:
            if a.tail == a.head:
                raise ValueError(f"loop arc at {a.tail}")
            if a.tail not in self.vertices or a.head not in self.vertices:
                raise ValueError(f"arc endpoint outside vertex set: {a}")

    def out_degree(self, v: Vertex) -> int:
        return sum(1 for a in self.arcs if a.tail == v)

    def in_degree(self, v: Vertex) -> int:
        return sum(1 for a in self.arcs if a.head == v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash(("D", self.vertices, self.arcs))


Shiftable = Union[Digraph, TwoRegularDigraph, DirectedCycle, DirectedPath, Vertex]


def cycle_type_of(d: TwoRegularDigraph) -> CycleType:
    """The multiset of cycle lengths of ``d`` in canonical order."""
    return CycleType(c.length for c in d.cycles)


def shift_vertex(v: Vertex, k: int) -> Vertex:
    j = v.index + k
    if j < 0:
        raise ValueError(f"shift of {v} by {k} gives negative index")
    return Vertex(v.side, j)


def shift(g: Shiftable, k: int) -> Shiftable:
    """Translate every vertex index by ``k`` (absolute, no wraparound)."""
    if isinstance(g, Vertex):
        return shift_vertex(g, k)
    if isinstance(g, DirectedPath):
        return DirectedPath(shift_vertex(v, k) for v in g.vertices)
    if isinstance(g, DirectedCycle):
        return DirectedCycle(shift_vertex(v, k) for v in g.vertices)
    if isinstance(g, TwoRegularDigraph):
        return TwoRegularDigraph(shift(c, k) for c in g.cycles)
    if isinstance(g, Digraph):
        return Digraph(
            (shift_vertex(v, k) for v in g.vertices),
            (Arc(shift_vertex(a.tail, k), shift_vertex(a.head, k)) for a in g.arcs),
        )
    raise TypeError(f"cannot shift {type(g).__name__}")


def reverse_cycle(c: DirectedCycle) -> DirectedCycle:
    return DirectedCycle(reversed(c.vertices))


def concat(p: DirectedPath, q: DirectedPath):
    """Join two paths at t(p) = s(q).

    Returns a DirectedPath when that is the only shared vertex, and a
    DirectedCycle when additionally s(p) = t(q) with no other overlap.
    """
    if p.terminal != q.source:
        raise ValueError(f"cannot concatenate: t(p)={p.terminal} != s(q)={q.source}")
    shared = set(p.vertices) & set(q.vertices)
    closes = p.source == q.terminal
    expected = {p.terminal, p.source} if closes else {p.terminal}
    if shared != expected:
        raise ValueError(f"paths share unexpected vertices: {sorted(shared - expected)}")
    if closes:
        return DirectedCycle(p.vertices + q.vertices[1:-1])
    return DirectedPath(p.vertices + q.vertices[1:])


def two_regular_from_arcs(arcs: Iterable[Arc]) -> TwoRegularDigraph:
    """Assemble an arc set into vertex-disjoint cycles.

    Raises if any saturated vertex does not have in-degree = out-degree = 1.
    """
    succ: dict = {}
    heads: set = set()
    for a in arcs:
        if a.tail in succ:
            raise ValueError(f"out-degree > 1 at {a.tail}")
        if a.head in heads:
            raise ValueError(f"in-degree > 1 at {a.head}")
        succ[a.tail] = a.head
        heads.add(a.head)
    if set(succ) != heads:
        extra = set(succ) ^ heads
        raise ValueError(f"unbalanced degrees at {sorted(extra)}")
    cycles = []
    remaining = set(succ)
    while remaining:
        start = min(remaining)
        walk = [start]
        v = succ[start]
        while v != start:
            walk.append(v)
            v = succ[v]
        remaining.difference_update(walk)
        cycles.append(DirectedCycle(walk))
    return TwoRegularDigraph(cycles)


def path_from_text(text: str) -> DirectedPath:
    s = text.strip()
    if s.startswith("<") and s.endswith(">"):
        s = s[1:-1]
    return DirectedPath(parse_vertex(t) for t in re.split(r"[,\s]+", s.strip()) if t)


def cycle_from_text(text: str) -> DirectedCycle:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return DirectedCycle(parse_vertex(t) for t in re.split(r"[,\s]+", s.strip()) if t)
