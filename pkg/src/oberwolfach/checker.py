"""Independent verification of solver output, plus a brute-force oracle.

Every constructive routine in this package is re-checked from first
principles here: arc-disjointness, exact coverage, spanning, cycle types,
admissibility, boundary patterns, and the defining clauses of the cap and
centre-piece tables.  ``brute_force_factorization`` is an exhaustive
backtracking search over tiny hosts, used to confirm nonexistence claims
and to cross-check the solver at order 6.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .caps import (
    BOUNDARY,
    AdmissibleDecomposition,
    CentrePiece,
    LeftCap,
    RightCap,
    internal_patterns,
    is_admissible,
    left_cap_patterns,
)
from .core import (
    Arc,
    CycleType,
    Digraph,
    DirectedCycle,
    TwoRegularDigraph,
    Vertex,
    cycle_type_of,
)
from .hosts import _j_arcs


class BudgetExceeded(RuntimeError):
    """Search stopped by its node budget; distinct from Nonexistent."""


@dataclass(frozen=True)
class Nonexistent:
    reason: str = ""


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)  # (name, ok, detail)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks
            ],
        }

    def __str__(self) -> str:
        lines = [f"passed={self.passed}"]
        for n, ok, d in self.checks:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {n}" + (f": {d}" if d else ""))
        return "\n".join(lines)


def verify_factorization(
    host: Digraph, factors: Iterable[TwoRegularDigraph], ftype: CycleType
) -> VerificationReport:
    """Check that ``factors`` is an ftype-factorization of ``host``."""
    fs = list(factors)
    report = VerificationReport()
    all_arcs: list = []
    for f in fs:
        all_arcs.extend(f.arcs())
    union = set(all_arcs)
    report.add(
        "arc_disjoint",
        len(all_arcs) == len(union),
        f"{len(all_arcs)} arcs used, {len(union)} distinct",
    )
    report.add(
        "coverage",
        union == set(host.arcs),
        f"missing {len(set(host.arcs) - union)}, extra {len(union - set(host.arcs))}",
    )
    spanning = [i for i, f in enumerate(fs) if f.vertices() != host.vertices]
    report.add("spanning", not spanning, f"non-spanning factors: {spanning}")
    wrong = [
        (i, str(cycle_type_of(f)))
        for i, f in enumerate(fs)
        if cycle_type_of(f) != ftype
    ]
    report.add("cycle_type", not wrong, f"mismatches: {wrong}")
    return report


def verify_arc_partition(
    host: Digraph, arc_sets: Iterable[frozenset], ftype: CycleType
) -> VerificationReport:
    """Like :func:`verify_factorization`, but from raw arc sets, so damaged
    certificates that are no longer 2-regular still yield a report."""
    sets = [frozenset(s) for s in arc_sets]
    report = VerificationReport()
    factors = []
    broken = []
    for i, arcs in enumerate(sets):
        try:
            from .core import two_regular_from_arcs

            factors.append(two_regular_from_arcs(arcs))
        except ValueError as exc:
            broken.append((i, str(exc)))
    report.add("factor_wellformed", not broken, f"broken factors: {broken[:3]}")
    if broken:
        return report
    inner = verify_factorization(host, factors, ftype)
    report.checks.extend(inner.checks)
    return report


def verify_admissible_decomposition(
    m: int,
    dec: AdmissibleDecomposition,
    expected_patterns: Optional[tuple] = None,
) -> VerificationReport:
    report = VerificationReport()
    report.add("nine_factors", len(dec.factors) == 9, f"{len(dec.factors)} factors")
    report.add("width", dec.m == m, f"declared {dec.m}, expected {m}")
    bad = [i for i, f in enumerate(dec.factors) if not is_admissible(f, m)]
    report.add("admissible", not bad, f"inadmissible factors: {bad}")
    all_arcs: list = []
    for f in dec.factors:
        all_arcs.extend(f.arcs())
    union = set(all_arcs)
    host_arcs = _j_arcs(m)
    report.add(
        "arc_disjoint",
        len(all_arcs) == len(union),
        f"{len(all_arcs)} arcs used, {len(union)} distinct",
    )
    report.add(
        "coverage",
        union == set(host_arcs),
        f"missing {len(set(host_arcs) - union)}, extra {len(union - set(host_arcs))}",
    )
    if expected_patterns is not None:
        got = dec.patterns()
        diff = [
            i
            for i, (a, b) in enumerate(zip(got, tuple(expected_patterns)))
            if a != b
        ]
        report.add("pattern", not diff, f"pattern mismatch at entries {diff}")
    return report


def verify_cap_complementarity(
    left: LeftCap, right: RightCap, centre: Optional[CentrePiece] = None
) -> VerificationReport:
    """Check every defining clause of the cap (and centre piece) tables."""
    report = VerificationReport()
    x0y0 = Arc(Vertex("x", 0), Vertex("y", 0))

    # Left cap clauses.
    ell = left.ell
    seam = {Vertex(s, ell + j) for s in "xy" for j in (0, 1)}
    larcs: list = []
    ok = True
    for p in left.paths:
        larcs.extend(p.arcs())
        if not (p.source in seam and p.terminal in seam):
            ok = False
    report.add("left_endpoints", ok, "sources/terminals in the seam blocks")
    middles_ok = all(
        {Vertex("x", j), Vertex("y", j)} <= set(p.vertices)
        for p in left.paths
        for j in range(2, ell)
    )
    report.add("left_middles", middles_ok)
    expected_left = set(_j_arcs(ell)) - {Arc(Vertex("x", ell), Vertex("y", ell))}
    report.add(
        "left_union",
        len(larcs) == len(set(larcs)) and set(larcs) == expected_left,
        f"{len(larcs)} arcs vs {len(expected_left)} expected",
    )

    # Right cap clauses.
    r = right.r
    rarcs: list = []
    shapes_ok = True
    boundary_ok = True
    ends_ok = True
    middles_ok = True
    for idx, (path, cycles) in enumerate(right.elements):
        rarcs.extend(path.arcs())
        seen = set(path.vertices)
        for c in cycles:
            rarcs.extend(c.arcs())
            if set(c.vertices) & seen:
                shapes_ok = False
            seen.update(c.vertices)
        if tuple(sorted(c.length for c in cycles)) != tuple(
            sorted(right.side_lengths)
        ):
            shapes_ok = False
        ext = left_cap_patterns(left)[idx]
        for side, j in (("x", 0), ("x", 1), ("y", 0), ("y", 1)):
            inner = Vertex(side, j)
            outer = Vertex(side, r + j)
            if (outer in seen) != (inner not in ext):
                boundary_ok = False
        if not (path.source in set(BOUNDARY) and path.terminal in set(BOUNDARY)):
            ends_ok = False
        for j in range(2, r):
            if not {Vertex("x", j), Vertex("y", j)} <= seen:
                middles_ok = False
    report.add("right_shapes", shapes_ok, "one path plus the declared side cycles")
    report.add("right_boundary", boundary_ok, "outer blocks complement the pattern")
    report.add("right_endpoints", ends_ok)
    report.add("right_middles", middles_ok)
    expected_right = set(_j_arcs(r)) | {x0y0}
    report.add(
        "right_union",
        len(rarcs) == len(set(rarcs)) and set(rarcs) == expected_right,
        f"{len(rarcs)} arcs vs {len(expected_right)} expected",
    )

    # Matching seam patterns and the constant joined length.
    report.add(
        "patterns_match",
        internal_patterns(left) == internal_patterns(right),
        "left/right seam patterns",
    )
    m0s = {
        left.paths[i].length + right.elements[i][0].length for i in range(9)
    }
    report.add("m0_constant", len(m0s) == 1, f"m0 values {sorted(m0s)}")

    if centre is not None:
        c = centre.c
        carcs: list = []
        pair_ok = True
        length_ok = True
        ends_ok = True
        one_of_ok = True
        middles_ok = True
        for q, u in centre.pairs:
            carcs.extend(q.arcs())
            carcs.extend(u.arcs())
            if set(q.vertices) & set(u.vertices):
                pair_ok = False
            if q.length + u.length != 2 * c:
                length_ok = False
            if q.source not in set(BOUNDARY):
                ends_ok = False
            if q.terminal != Vertex(q.source.side, q.source.index + c):
                ends_ok = False
            if u.source not in {Vertex(s, c + j) for s in "xy" for j in (0, 1)}:
                ends_ok = False
            if u.terminal != Vertex(u.source.side, u.source.index - c):
                ends_ok = False
            present = set(q.vertices) | set(u.vertices)
            for w in BOUNDARY:
                if w in (q.source, u.terminal):
                    continue
                far = Vertex(w.side, w.index + c)
                if (w in present) == (far in present):
                    one_of_ok = False
            for j in range(2, c):
                for s in "xy":
                    if (Vertex(s, j) in set(q.vertices)) == (
                        Vertex(s, j) in set(u.vertices)
                    ):
                        middles_ok = False
        report.add("centre_disjoint_pairs", pair_ok)
        report.add("centre_lengths", length_ok, "len(Q)+len(U) = 2c")
        report.add("centre_endpoints", ends_ok)
        report.add("centre_one_of_pair", one_of_ok)
        report.add("centre_middles", middles_ok)
        expected_centre = (set(_j_arcs(c)) | {x0y0}) - {
            Arc(Vertex("x", c), Vertex("y", c))
        }
        report.add(
            "centre_union",
            len(carcs) == len(set(carcs)) and set(carcs) == expected_centre,
            f"{len(carcs)} arcs vs {len(expected_centre)} expected",
        )
        report.add(
            "centre_patterns_match",
            internal_patterns(centre) == internal_patterns(left),
            "centre seam patterns",
        )
    return report


# ---------------------------------------------------------------------------
# Exhaustive oracle


def _adjacency(arcs: Iterable[Arc]) -> dict:
    adj: dict = {}
    for a in arcs:
        adj.setdefault(a.tail, set()).add(a.head)
    return adj


def factors_through_arc(
    arcs: frozenset, vertices: frozenset, lengths: tuple, first: Arc
):
    """Yield every spanning 2-regular subdigraph of the given arc set with
    the given cycle-length multiset that uses ``first``.

    Each factor is produced exactly once: the cycle through ``first`` is
    rooted at its tail, every other cycle at its least uncovered vertex.
    """
    adj = _adjacency(arcs)
    n = len(vertices)
    if sum(lengths) != n:
        return

    def distinct(ls: tuple):
        return sorted(set(ls))

    def grow(path: list, target_len: int, used: set, rest: tuple, cycles: list):
        v = path[-1]
        if len(path) == target_len:
            if path[0] in adj.get(v, ()):
                yield from next_cycle(used, rest, cycles + [tuple(path)])
            return
        for w in sorted(adj.get(v, ())):
            if w in used:
                continue
            # anchoring: later cycles must start at the least vertex they use
            if cycles and w < path[0]:
                continue
            used.add(w)
            path.append(w)
            yield from grow(path, target_len, used, rest, cycles)
            path.pop()
            used.remove(w)

    def next_cycle(used: set, rest: tuple, cycles: list):
        if not rest:
            if len(used) == n:
                yield [DirectedCycle(c) for c in cycles]
            return
        anchor = min(vertices - used)
        for length in distinct(rest):
            remaining = list(rest)
            remaining.remove(length)
            used.add(anchor)
            yield from grow([anchor], length, used, tuple(remaining), cycles)
            used.remove(anchor)

    tail, head = first
    if tail not in vertices or head not in adj.get(tail, ()):
        return
    for length in distinct(lengths):
        remaining = list(lengths)
        remaining.remove(length)
        used = {tail, head}
        yield from grow([tail, head], length, used, tuple(remaining), [])


def brute_force_factorization(
    host: Digraph, ftype: CycleType, budget: int = 2_000_000, cap: int = 10
):
    """Exhaustive search for an ftype-factorization of a tiny host.

    Returns a list of TwoRegularDigraph on success and ``Nonexistent`` only
    after the whole search space is exhausted.  Raises BudgetExceeded if the
    node budget runs out first.
    """
    if len(host.vertices) > cap:
        raise ValueError(f"host too large for the oracle ({len(host.vertices)} > {cap})")
    if ftype.order != len(host.vertices):
        raise ValueError(
            f"type order {ftype.order} != host order {len(host.vertices)}"
        )
    nodes = 0

    def search(remaining: frozenset, acc: list):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"oracle budget {budget} exhausted")
        if not remaining:
            return list(acc)
        first = min(remaining)
        for cycles in factors_through_arc(
            remaining, host.vertices, ftype.lengths, first
        ):
            factor = TwoRegularDigraph(cycles)
            result = search(remaining - factor.arcs(), acc + [factor])
            if result is not None:
                return result
        return None

    result = search(frozenset(host.arcs), [])
    if result is None:
        return Nonexistent(f"exhaustive search over {nodes} nodes")
    return result
