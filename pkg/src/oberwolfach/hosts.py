"""Builders for the four host digraphs and the fold map between two of them.

All hosts are symmetric digraphs (both arcs on every edge of an underlying
graph) over strip-labelled vertices:

* ``complete_symmetric(n)``  -- every ordered pair of distinct vertices.
* ``h_star(m)``    -- blow each vertex of an m-cycle into a pair {x_i, y_i};
  consecutive blocks are joined completely, there are no within-block arcs.
* ``w_star(m)``    -- same blow-up of the circulant with jumps {1, 2} mod m,
  plus both within-block (rung) arcs x_i <-> y_i.
* ``j_star(m)``    -- the opened, non-wrapping variant of ``w_star`` on
  blocks 0..m+1: jump-1 and jump-2 junctions for 0 <= i <= m-1 only, rungs
  only for 1 <= i <= m.

``fold`` closes ``j_star(m)`` back onto ``w_star(m)`` by reducing block
indices mod m; it is an arc bijection for m >= 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Arc, Digraph, TwoRegularDigraph, Vertex


@dataclass(frozen=True)
class HostDescriptor:
    kind: str  # CompleteSymmetric | HStar | WStar | JStar
    m_or_n: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "m": self.m_or_n}


def _both(u: Vertex, v: Vertex) -> list:
    return [Arc(u, v), Arc(v, u)]


def complete_symmetric(n: int) -> Digraph:
    """K*_n: both arcs on every pair.  Even n uses blocks x_i, y_i, i < n/2."""
    if n < 2:
        raise ValueError(f"complete_symmetric needs n >= 2, got {n}")
    vertices = [Vertex("x", i) for i in range((n + 1) // 2)]
    vertices += [Vertex("y", i) for i in range(n // 2)]
    arcs = []
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            arcs += _both(u, v)
    return Digraph(vertices, arcs)


def h_star(m: int) -> Digraph:
    """Doubled blow-up of the m-cycle: 4-in/out-regular, no rung arcs."""
    if m < 3:
        raise ValueError(f"h_star needs m >= 3, got {m}")
    vertices = [Vertex(s, i) for i in range(m) for s in ("x", "y")]
    arcs = []
    for i in range(m):
        j = (i + 1) % m
        for s in ("x", "y"):
            for t in ("x", "y"):
                arcs += _both(Vertex(s, i), Vertex(t, j))
    return Digraph(vertices, arcs)


def w_star(m: int) -> Digraph:
    """Doubled blow-up of the circulant with jumps {1,2} mod m, plus rungs."""
    if m < 5:
        raise ValueError(f"w_star needs m >= 5, got {m}")
    vertices = [Vertex(s, i) for i in range(m) for s in ("x", "y")]
    arcs = []
    for i in range(m):
        arcs += _both(Vertex("x", i), Vertex("y", i))
        for d in (1, 2):
            j = (i + d) % m
            for s in ("x", "y"):
                for t in ("x", "y"):
                    arcs += _both(Vertex(s, i), Vertex(t, j))
    return Digraph(vertices, arcs)


def _j_arcs(m: int) -> frozenset:
    """Arc set of the opened host on blocks 0..m+1 (valid for any m >= 1)."""
    arcs = []
    for i in range(1, m + 1):
        arcs += _both(Vertex("x", i), Vertex("y", i))
    for i in range(m):
        for d in (1, 2):
            for s in ("x", "y"):
                for t in ("x", "y"):
                    arcs += _both(Vertex(s, i), Vertex(t, i + d))
    return frozenset(arcs)


def j_star(m: int) -> Digraph:
    """Opened strip host on 2(m+2) vertices with 18m arcs."""
    if m < 3:
        raise ValueError(f"j_star needs m >= 3, got {m}")
    vertices = [Vertex(s, i) for i in range(m + 2) for s in ("x", "y")]
    return Digraph(vertices, _j_arcs(m))


def fold(g: Union[Digraph, TwoRegularDigraph], m: int):
    """Reduce block indices mod m, mapping the opened host into w_star(m).

    Raises if any folded arc is not an arc of ``w_star(m)`` (malformed input
    or m < 5, where the arc correspondence breaks down).
    """
    target = w_star(m)

    def phi(v: Vertex) -> Vertex:
        return Vertex(v.side, v.index % m)

    if isinstance(g, TwoRegularDigraph):
        from .core import DirectedCycle

        folded = TwoRegularDigraph(
            DirectedCycle(phi(v) for v in c.vertices) for c in g.cycles
        )
        bad = folded.arcs() - target.arcs
        if bad:
            raise ValueError(f"folded arcs outside host: {sorted(bad)[:3]}")
        return folded
    if isinstance(g, Digraph):
        arcs = frozenset(Arc(phi(a.tail), phi(a.head)) for a in g.arcs)
        bad = arcs - target.arcs
        if bad:
            raise ValueError(f"folded arcs outside host: {sorted(bad)[:3]}")
        return Digraph((phi(v) for v in g.vertices), arcs)
    raise TypeError(f"cannot fold {type(g).__name__}")
