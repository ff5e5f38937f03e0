"""Cap-and-splice machinery for admissible decompositions of the opened host.

An *admissible* 2-regular subdigraph of the opened host on blocks 0..m+1 has
order 2m, takes exactly one vertex from each boundary pair {x0,xm},
{x1,xm+1}, {y0,ym}, {y1,ym+1}, and therefore saturates every middle block.
Nine arc-disjoint admissible factors covering all 18m arcs form an
admissible decomposition; folding block indices mod m turns such a
decomposition into a 2-factorization of the circulant blow-up host.

Decompositions are built from three kinds of nine-element path systems
(left caps, right caps, centre pieces; see :mod:`oberwolfach.tables`) glued
end to end with the index shift, and from splicing whole decompositions
whose boundary patterns agree entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import tables
from .core import (
    CycleType,
    TwoRegularDigraph,
    Vertex,
    concat,
    cycle_type_of,
    shift,
    shift_vertex,
    two_regular_from_arcs,
)
from .hosts import _j_arcs, fold, w_star

BOUNDARY = (Vertex("x", 0), Vertex("x", 1), Vertex("y", 0), Vertex("y", 1))


def external_pattern(d: TwoRegularDigraph) -> frozenset:
    """The subset of {x0, x1, y0, y1} that ``d`` meets."""
    return frozenset(BOUNDARY) & d.vertices()


def is_admissible(d: TwoRegularDigraph, m: int) -> bool:
    """Order 2m, one vertex per boundary pair, all middle blocks saturated."""
    vs = d.vertices()
    if len(vs) != 2 * m:
        return False
    if not d.arcs() <= _j_arcs(m):
        return False
    for side, i in (("x", 0), ("x", 1), ("y", 0), ("y", 1)):
        pair = {Vertex(side, i), Vertex(side, i + m)}
        if len(pair & vs) != 1:
            return False
    for i in range(2, m):
        if Vertex("x", i) not in vs or Vertex("y", i) not in vs:
            return False
    return True


@dataclass(frozen=True)
class AdmissibleDecomposition:
    """Nine admissible factors partitioning the arcs of the opened host."""

    m: int
    factors: tuple  # 9 TwoRegularDigraph

    def patterns(self) -> tuple:
        return tuple(external_pattern(f) for f in self.factors)

    def cycle_types(self) -> tuple:
        return tuple(cycle_type_of(f) for f in self.factors)


class InternalPatternEntry(NamedTuple):
    """Normalised (source-end, terminal-end, absent-set) seam description."""

    first: Vertex
    second: Vertex
    absent: frozenset


@dataclass(frozen=True)
class LeftCap:
    """Nine arc-disjoint paths whose union is the width-``ell`` opened host
    minus the arc x_ell -> y_ell; path endpoints sit in blocks ell, ell+1."""

    ell: int
    paths: tuple  # 9 DirectedPath


@dataclass(frozen=True)
class RightCap:
    """Nine arc-disjoint path-plus-cycles pieces whose union is the
    width-``r`` opened host plus the arc x0 -> y0."""

    r: int
    t: int
    side_lengths: tuple  # lengths of the t side cycles
    elements: tuple  # 9 of (DirectedPath, tuple[DirectedCycle, ...])


@dataclass(frozen=True)
class CentrePiece:
    """Nine pairs of vertex-disjoint paths bridging ``c`` blocks; the union
    is the width-``c`` opened host plus x0 -> y0 minus x_c -> y_c."""

    c: int
    pairs: tuple  # 9 of (Q, U)


def internal_pattern(piece, i: int) -> InternalPatternEntry:
    """Entry ``i`` (1-based) of the seam pattern of a cap or centre piece."""
    if isinstance(piece, LeftCap):
        path = piece.paths[i - 1]
        seam = {Vertex(s, piece.ell + j) for s in "xy" for j in (0, 1)}
        absent = frozenset(
            shift_vertex(v, -piece.ell) for v in path.internal_vertices() & seam
        )
        return InternalPatternEntry(
            shift_vertex(path.source, -piece.ell),
            shift_vertex(path.terminal, -piece.ell),
            absent,
        )
    if isinstance(piece, RightCap):
        path, cycles = piece.elements[i - 1]
        present = set(path.vertices)
        for c in cycles:
            present.update(c.vertices)
        return InternalPatternEntry(
            path.terminal, path.source, frozenset(BOUNDARY) - present
        )
    if isinstance(piece, CentrePiece):
        q, u = piece.pairs[i - 1]
        present = set(q.vertices) | set(u.vertices)
        return InternalPatternEntry(
            u.terminal, q.source, frozenset(BOUNDARY) - present
        )
    raise TypeError(f"no internal pattern for {type(piece).__name__}")


def internal_patterns(piece) -> tuple:
    return tuple(internal_pattern(piece, i) for i in range(1, 10))


def left_cap_patterns(cap: LeftCap) -> tuple:
    return tuple(
        frozenset(BOUNDARY) & set(p.vertices) for p in cap.paths
    )


def concat_centre(piece: CentrePiece, k: int) -> CentrePiece:
    """Chain ``k`` shifted copies of a length-4 centre piece into length 4k."""
    if piece.c != 4:
        raise ValueError("only length-4 centre pieces are chained")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return piece
    pairs = []
    for q, u in piece.pairs:
        big_q = q
        for step in range(1, k):
            big_q = concat(big_q, shift(q, 4 * step))
        big_u = shift(u, 4 * (k - 1))
        for step in range(k - 2, -1, -1):
            big_u = concat(big_u, shift(u, 4 * step))
        if set(big_q.vertices) & set(big_u.vertices):
            raise ValueError("chained centre paths are not vertex-disjoint")
        pairs.append((big_q, big_u))
    return CentrePiece(4 * k, tuple(pairs))


def assemble(
    left: LeftCap,
    centre: Optional[CentrePiece],
    k: int,
    right: RightCap,
) -> AdmissibleDecomposition:
    """Glue left cap + k centre blocks + right cap into a decomposition.

    Factor i is the arc union of the left path, the shifted chained centre
    pair, and the shifted right element; the result is an admissible
    decomposition of the opened host on ell + 4k + r blocks whose factor i
    is one cycle of length m0 + 8k (m0 = len(L_i) + len(P_i)) together with
    the right cap's side cycles.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > 0 and centre is None:
        raise ValueError("k > 0 requires a centre piece")
    if internal_patterns(left) != internal_patterns(right):
        raise ValueError("left and right caps have different seam patterns")
    if centre is not None and internal_patterns(left) != internal_patterns(centre):
        raise ValueError("centre piece does not match the caps' seam patterns")
    m0s = {
        left.paths[i].length + right.elements[i][0].length for i in range(9)
    }
    if len(m0s) != 1:
        raise ValueError(f"len(L_i) + len(P_i) is not constant: {sorted(m0s)}")
    m0 = m0s.pop()
    chained = concat_centre(centre, k) if k > 0 else None
    m = left.ell + 4 * k + right.r
    expected = CycleType([m0 + 8 * k, *right.side_lengths])
    factors = []
    for i in range(9):
        arcs = set(left.paths[i].arcs())
        if chained is not None:
            q, u = chained.pairs[i]
            arcs.update(shift(q, left.ell).arcs())
            arcs.update(shift(u, left.ell).arcs())
        path, cycles = right.elements[i]
        offset = left.ell + 4 * k
        arcs.update(shift(path, offset).arcs())
        for c in cycles:
            arcs.update(shift(c, offset).arcs())
        factor = two_regular_from_arcs(arcs)
        if cycle_type_of(factor) != expected:
            raise ValueError(
                f"factor {i + 1} has type {cycle_type_of(factor)}, wanted {expected}"
            )
        if not is_admissible(factor, m):
            raise ValueError(f"factor {i + 1} is not admissible")
        factors.append(factor)
    return AdmissibleDecomposition(m, tuple(factors))


def splice(
    a: AdmissibleDecomposition, b: AdmissibleDecomposition
) -> AdmissibleDecomposition:
    """Join compatible decompositions: factor j becomes A_j + shifted B_j."""
    if a.patterns() != b.patterns():
        raise ValueError("decompositions are not compatible (patterns differ)")
    m = a.m + b.m
    factors = []
    for fa, fb in zip(a.factors, b.factors):
        shifted = shift(fb, a.m)
        factor = TwoRegularDigraph(tuple(fa.cycles) + tuple(shifted.cycles))
        if not is_admissible(factor, m):
            raise ValueError("spliced factor is not admissible")
        factors.append(factor)
    return AdmissibleDecomposition(m, tuple(factors))


# Cap-family dispatch: family key, anchors present in the tables, and the
# strip length consumed by the right cap as a function of the anchor.
_FAMILIES = {
    "L": (4, 5, 6, 7),
    "L2": (4, 5, 6, 7),
    "L22": (4, 5, 6, 7),
    "L4": (5, 6, 7, 8),
}


def _family_of(lengths: tuple):
    """Return (family, s) if the sorted length tuple fits a cap family."""
    if len(lengths) == 1 and lengths[0] >= 8:
        return "L", lengths[0] // 2
    if len(lengths) == 2 and lengths[0] == 2 and lengths[1] >= 8:
        return "L2", lengths[1] // 2
    if (
        len(lengths) == 3
        and lengths[0] == lengths[1] == 2
        and lengths[2] >= 8
    ):
        return "L22", lengths[2] // 2
    if len(lengths) == 2 and lengths[0] == 4 and lengths[1] >= 10:
        return "L4", lengths[1] // 2
    return None


def general_factor(ftype: CycleType) -> AdmissibleDecomposition:
    """Decomposition for one long cycle plus at most two short side cycles.

    Covers the shapes [2s] (s>=4), [2s,2] (s>=4), [2s,2,2] (s>=4) and
    [2s,4] (s>=5), via the embedded cap tables and centre chaining.
    """
    fit = _family_of(ftype.lengths)
    if fit is None:
        raise ValueError(f"{ftype} is not a cap-family shape")
    family, s = fit
    anchors = _FAMILIES[family]
    anchor = next(a for a in anchors if a % 4 == s % 4)
    if s < anchor:
        raise ValueError(f"{ftype} is below the smallest table in its family")
    k = (s - anchor) // 4
    dec = assemble(
        tables.left_cap(),
        tables.centre_piece() if k > 0 else None,
        k,
        tables.right_cap(family, anchor),
    )
    if dec.cycle_types() != (ftype,) * 9:
        raise ValueError(f"assembled type mismatch for {ftype}")
    return dec


def small_factor(ftype: CycleType) -> AdmissibleDecomposition:
    """One of the embedded small decompositions (including the supplemental
    [2,4,4] brick)."""
    key = tuple(ftype.lengths)
    if key in tables.SMALL_DECOMPS:
        return tables.small_decomposition(key)
    if key == (2, 4, 4):
        return tables.supplemental_2_4_4()
    raise ValueError(f"no small decomposition for {ftype}")


def _single(length: int) -> AdmissibleDecomposition:
    if length == 6:
        return small_factor(CycleType([6]))
    return general_factor(CycleType([length]))


def _splice_all(decs: list) -> AdmissibleDecomposition:
    out = decs[0]
    for d in decs[1:]:
        out = splice(out, d)
    return out


def j_decompose(ftype: CycleType) -> AdmissibleDecomposition:
    """Admissible decomposition of the opened host for any bipartite type of
    order >= 8 other than the all-2s type, with the shared boundary pattern."""
    if not ftype.is_bipartite():
        raise ValueError(f"{ftype} has an odd cycle length")
    if ftype.order % 2 != 0 or ftype.order < 8:
        raise ValueError(f"order {ftype.order} out of range (need >= 8)")
    if set(ftype.lengths) == {2}:
        raise ValueError("the all-2s type has no admissible decomposition here")
    dec = _decompose(ftype.lengths)
    if dec.patterns() != tables.X_PATTERN:
        raise ValueError("decomposition lost the shared boundary pattern")
    if dec.cycle_types() != (ftype,) * 9:
        raise ValueError("decomposition has wrong cycle type")
    return dec


def _decompose(lengths: tuple) -> AdmissibleDecomposition:
    key = tuple(sorted(lengths))
    if key in tables.SMALL_DECOMPS or key == (2, 4, 4):
        return small_factor(CycleType(key))
    if _family_of(key) is not None:
        return general_factor(CycleType(key))

    smallest = key[0]
    mult = key.count(smallest)
    rest = key[mult:]

    if smallest >= 6:
        return _splice_all([_single(x) for x in key])

    if smallest == 4:
        if mult == 1:
            # one 4-cycle: peel a [4, next] brick
            nxt = rest[0]
            if nxt in (6, 8):
                head = small_factor(CycleType([4, nxt]))
            else:
                head = general_factor(CycleType([4, nxt]))
            decs = [head] + ([_decompose(rest[1:])] if rest[1:] else [])
            return _splice_all(decs)
        # two or more 4-cycles: 2*beta + 3*gamma copies
        gamma, beta = (1, (mult - 3) // 2) if mult % 2 else (0, mult // 2)
        decs = [small_factor(CycleType([4, 4]))] * beta
        decs += [small_factor(CycleType([4, 4, 4]))] * gamma
        if rest:
            decs.append(_decompose(rest))
        return _splice_all(decs)

    # smallest == 2
    nxt = rest[0]
    residue = mult % 3
    if residue == 0:
        if rest == (4,):
            decs = [small_factor(CycleType([2, 2, 2, 4]))]
            decs += [small_factor(CycleType([2, 2, 2]))] * (mult // 3 - 1)
        else:
            decs = [small_factor(CycleType([2, 2, 2]))] * (mult // 3)
            decs.append(_decompose(rest))
        return _splice_all(decs)
    if residue == 1:
        if rest == (4, 4):
            decs = [small_factor(CycleType([2, 4, 4]))]
        else:
            head = (
                small_factor(CycleType([2, nxt]))
                if nxt in (4, 6)
                else general_factor(CycleType([2, nxt]))
            )
            decs = [head] + ([_decompose(rest[1:])] if rest[1:] else [])
        decs += [small_factor(CycleType([2, 2, 2]))] * ((mult - 1) // 3)
        return _splice_all(decs)
    # residue == 2
    if rest == (4, 4):
        decs = [small_factor(CycleType([2, 2, 4, 4]))]
    else:
        head = (
            small_factor(CycleType([2, 2, nxt]))
            if nxt in (4, 6)
            else general_factor(CycleType([2, 2, nxt]))
        )
        decs = [head] + ([_decompose(rest[1:])] if rest[1:] else [])
    decs += [small_factor(CycleType([2, 2, 2]))] * ((mult - 2) // 3)
    return _splice_all(decs)


def w_star_factorization(ftype: CycleType) -> list:
    """Fold an opened-host decomposition into 9 verified 2-factors of the
    circulant blow-up host of the same order."""
    m = ftype.order // 2
    if m < 5:
        raise ValueError(
            "folding needs m >= 5: below that the opened host has more arcs "
            "than the circulant blow-up and the arc correspondence collapses"
        )
    dec = j_decompose(ftype)
    folded = [fold(f, m) for f in dec.factors]
    host = w_star(m)
    for f in folded:
        if f.vertices() != host.vertices:
            raise ValueError("folded factor does not span")
        if cycle_type_of(f) != ftype:
            raise ValueError("folded factor changed cycle type")
    return folded
