"""Top-level pipeline: verified F-factorizations of the complete symmetric
digraph for orders n = 2 (mod 4) and bipartite F.

Dispatch:

* F all 2-cycles: the circle-method round robin, every edge doubled.
* n = 6: exhaustive search (order 6 carries the single nonexistent type [6]).
* n = 10: the circulant blow-up host *is* the complete digraph here, so the
  cap machinery solves it directly; search remains as a fallback.
* n >= 14: split the host into one circulant blow-up plus (m-5)/2 cycle
  blow-ups along Hamiltonian block cycles, and factor each part.

Every returned factorization carries a full verification report.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from dataclasses import dataclass
from typing import Optional, Union

from .caps import w_star_factorization
from .checker import (
    BudgetExceeded,
    Nonexistent,
    VerificationReport,
    brute_force_factorization,
    factors_through_arc,
    verify_factorization,
)
from .core import CycleType, DirectedCycle, Digraph, TwoRegularDigraph, Vertex
from .hosts import complete_symmetric
from .hstar import factorize_h_star


class DomainError(ValueError):
    """Input outside the solvable domain (not a nonexistence result)."""


class SearchTimeout(RuntimeError):
    """A search hit its time budget; distinct from Nonexistent."""


@dataclass(frozen=True)
class WHDecomposition:
    """Split of the order-2m complete host: the jump-{1,2} circulant blow-up
    (implicit, identity labels) plus Hamiltonian block cycles at jumps >= 3,
    each to be blown up into a copy of the cycle blow-up host."""

    m: int
    h_block_cycles: tuple  # (m-5)/2 tuples over blocks 0..m-1


@dataclass(frozen=True)
class Factorization:
    n: int
    ftype: CycleType
    factors: tuple
    report: VerificationReport
    seed: int


def _pair_jumps(m: int, distances: list):
    """Split the jump set into coprime singles and connected pairs.

    Jumps d with gcd(d, m) > 1 have no single-jump Hamiltonian cycle, so
    each is paired with a partner e such that gcd(d, e, m) = 1 (the pair
    circulant is then connected, 4-regular, and Hamilton-decomposable).
    Partners coprime to m are preferred; pairing is found by backtracking.
    """
    singles = [d for d in distances if math.gcd(d, m) == 1]
    awkward = [d for d in distances if math.gcd(d, m) > 1]
    if not awkward:
        return singles, []

    def match(todo: list, free: list):
        if not todo:
            return []
        d = todo[0]
        # coprime partners first, then compatible awkward ones
        candidates = [e for e in free if math.gcd(e, m) == 1] + [
            e for e in todo[1:] if math.gcd(math.gcd(d, e), m) == 1
        ]
        for e in candidates:
            rest_todo = [x for x in todo if x not in (d, e)]
            rest_free = [x for x in free if x != e]
            tail = match(rest_todo, rest_free)
            if tail is not None:
                return [(d, e)] + tail
        return None

    pairs = match(awkward, sorted(singles))
    if pairs is None:
        raise RuntimeError(f"cannot pair the jump set {distances} for m={m}")
    used = {e for pair in pairs for e in pair}
    return [d for d in singles if d not in used], pairs


def _decompose_pair_circulant(m: int, d: int, e: int):
    """Two Hamiltonian cycles partitioning the edges of the block circulant
    with jump set {d, e}; seeded randomized search with restarts."""
    edges: set = set()
    adj: dict = {i: [] for i in range(m)}
    for x in (d, e):
        for i in range(m):
            j = (i + x) % m
            key = frozenset((i, j))
            if key not in edges:
                edges.add(key)
                adj[i].append(j)
                adj[j].append(i)

    def complement_cycle(path: list):
        hedges = {frozenset((path[i], path[(i + 1) % m])) for i in range(m)}
        comp = edges - hedges
        cadj: dict = {}
        for fe in comp:
            a, b = tuple(fe)
            cadj.setdefault(a, []).append(b)
            cadj.setdefault(b, []).append(a)
        if len(cadj) != m or any(len(v) != 2 for v in cadj.values()):
            return None
        walk = [0]
        prev, cur = None, 0
        while True:
            step = next(w for w in cadj[cur] if w != prev)
            if step == 0:
                break
            walk.append(step)
            prev, cur = cur, step
            if len(walk) > m:
                return None
        return tuple(walk) if len(walk) == m else None

    rng = random.Random(m * 1_000_003 + d * 1_009 + e)
    nodes = 0

    def extend(path: list, used: set, budget: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded
        v = path[-1]
        if len(path) == m:
            if path[0] in adj[v]:
                comp = complement_cycle(path)
                if comp is not None:
                    return tuple(path), comp
            return None
        nbrs = adj[v][:]
        rng.shuffle(nbrs)
        for w in nbrs:
            if w not in used:
                used.add(w)
                path.append(w)
                found = extend(path, used, budget)
                if found:
                    return found
                path.pop()
                used.remove(w)
        return None

    for _ in range(5000):
        nodes = 0
        try:
            found = extend([0], {0}, 20_000)
        except BudgetExceeded:
            continue
        if found:
            return found
    raise RuntimeError(
        f"no Hamiltonian decomposition found for jumps {{{d},{e}}} on {m} blocks"
    )


def _hamilton_cycles_decomposition(m: int, distances: list) -> list:
    """Split the block circulant on the given jump set into Hamiltonian
    cycles, one per jump."""
    singles, pairs = _pair_jumps(m, distances)
    cycles = [tuple((i * d) % m for i in range(m)) for d in sorted(singles)]
    for d, e in pairs:
        cycles.extend(_decompose_pair_circulant(m, d, e))
    return cycles


def wh_decompose(m: int) -> WHDecomposition:
    """Reserve rungs and jumps 1, 2 for the circulant blow-up; split the
    remaining jumps 3..(m-1)/2 into Hamiltonian block cycles.

    Jumps coprime to m get closed-form cycles; the rest are handled in
    pairs by a capped randomized search.  Instant for m <= 33, seconds up
    to m ~ 45, minutes beyond; the caps guarantee an explicit error rather
    than an unbounded search.
    """
    if m < 7 or m % 2 == 0:
        raise DomainError(f"need odd m >= 7, got {m}")
    distances = list(range(3, (m - 1) // 2 + 1))
    cycles = _hamilton_cycles_decomposition(m, distances)
    for cyc in cycles:
        if len(set(cyc)) != m:
            raise RuntimeError("block cycle is not Hamiltonian")
        for i in range(m):
            step = (cyc[(i + 1) % m] - cyc[i]) % m
            if min(step, m - step) < 3:
                raise RuntimeError("block cycle uses a reserved jump")
    return WHDecomposition(m, tuple(cycles))


def round_robin_two_cycles(n: int, seed: int = 0) -> Factorization:
    """Circle-method 1-factorization of the complete graph, each edge
    replaced by a directed 2-cycle: n-1 factors of type [2^(n/2)]."""
    if n < 2 or n % 2:
        raise DomainError(f"need even n >= 2, got {n}")
    host = complete_symmetric(n)
    slots = sorted(host.vertices)
    pivot = slots[-1]
    wheel = slots[:-1]
    factors = []
    for r in range(n - 1):
        pairs = [(pivot, wheel[r])]
        for i in range(1, (n - 1) // 2 + 1):
            u = wheel[(r + i) % (n - 1)]
            v = wheel[(r - i) % (n - 1)]
            pairs.append((u, v))
        factors.append(TwoRegularDigraph(DirectedCycle(p) for p in pairs))
    ftype = CycleType([2] * (n // 2))
    report = verify_factorization(host, factors, ftype)
    if not report.passed:
        raise RuntimeError(f"round robin failed verification: {report.failures()}")
    return Factorization(n, ftype, tuple(factors), report, seed)


def _randomized_extraction(
    host: Digraph,
    ftype: CycleType,
    rng: random.Random,
    deadline: Optional[float],
) -> Optional[list]:
    """Extract type-F factors one at a time with restarts."""
    n = len(host.vertices)
    for _ in range(10_000):
        if deadline is not None and time.monotonic() > deadline:
            raise SearchTimeout("factor extraction timed out")
        remaining = set(host.arcs)
        factors = []
        while remaining:
            first = rng.choice(sorted(remaining))
            found = None
            for cycles in factors_through_arc(
                frozenset(remaining), host.vertices, ftype.lengths, first
            ):
                found = TwoRegularDigraph(cycles)
                break
            if found is None:
                break
            factors.append(found)
            remaining -= found.arcs()
        if not remaining and len(factors) == n - 1:
            return factors
    return None


def _cache_path() -> Optional[str]:
    return os.environ.get("OBERWOLFACH_CACHE")


def _cache_load(key: str) -> Optional[list]:
    path = _cache_path()
    if not path or not os.path.exists(path):
        return None
    # the cache is best-effort: anything malformed is treated as a miss
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        entry = data.get(key)
        if entry is None:
            return None
        from .core import parse_vertex

        return [
            TwoRegularDigraph(
                DirectedCycle(parse_vertex(t) for t in cyc) for cyc in factor
            )
            for factor in entry
        ]
    except (OSError, ValueError, AttributeError, TypeError):
        return None


def _cache_store(key: str, factors: list) -> None:
    path = _cache_path()
    if not path:
        return
    data = {}
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            if not isinstance(data, dict):
                data = {}
        except (OSError, ValueError):
            data = {}
    data[key] = [
        [[v.text() for v in c.vertices] for c in f.cycles] for f in factors
    ]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True)


def small_order_solve(
    n: int, ftype: CycleType, seed: int = 0, timeout_ms: Optional[int] = None
) -> Union[Factorization, Nonexistent]:
    """Orders 6 and 10, below the host-splitting threshold."""
    if n not in (6, 10):
        raise DomainError(f"small-order path handles n in {{6, 10}}, got {n}")
    if ftype.order != n:
        raise DomainError(f"type order {ftype.order} != n = {n}")
    if set(ftype.lengths) == {2}:
        return round_robin_two_cycles(n, seed)
    host = complete_symmetric(n)

    key = f"{n}:{ftype.text()}"
    cached = _cache_load(key)
    if cached is not None:
        report = verify_factorization(host, cached, ftype)
        if report.passed:
            return Factorization(n, ftype, tuple(cached), report, seed)

    if n == 6:
        result = brute_force_factorization(host, ftype)
        if isinstance(result, Nonexistent):
            return result
        factors = result
    else:
        try:
            # the jump-{1,2} circulant blow-up on 5 blocks is the whole host
            factors = w_star_factorization(ftype)
        except (ValueError, RuntimeError):
            deadline = (
                time.monotonic() + timeout_ms / 1000.0
                if timeout_ms is not None
                else None
            )
            factors = _randomized_extraction(host, ftype, random.Random(seed), deadline)
            if factors is None:
                raise SearchTimeout(f"no factorization found for {ftype} at n={n}")
    report = verify_factorization(host, factors, ftype)
    if not report.passed:
        raise RuntimeError(f"construction failed verification: {report.failures()}")
    _cache_store(key, factors)
    return Factorization(n, ftype, tuple(factors), report, seed)


def _relabel(factor: TwoRegularDigraph, block_cycle: tuple) -> TwoRegularDigraph:
    return TwoRegularDigraph(
        DirectedCycle(Vertex(v.side, block_cycle[v.index]) for v in c.vertices)
        for c in factor.cycles
    )


def solve(
    n: int, ftype: CycleType, seed: int = 0, timeout_ms: Optional[int] = None
) -> Union[Factorization, Nonexistent]:
    """Verified F-factorization of the order-n complete symmetric digraph,
    or Nonexistent for the single impossible case (n, F) = (6, [6])."""
    if n % 4 != 2:
        raise DomainError(f"n = {n} is not 2 (mod 4)")
    if not ftype.is_bipartite():
        raise DomainError(f"{ftype} contains an odd cycle length")
    if ftype.order != n:
        raise DomainError(f"cycle lengths sum to {ftype.order}, not {n}")

    if set(ftype.lengths) == {2}:
        return round_robin_two_cycles(n, seed)
    if n in (6, 10):
        return small_order_solve(n, ftype, seed, timeout_ms)

    m = n // 2
    wh = wh_decompose(m)
    factors = list(w_star_factorization(ftype))
    hfact = factorize_h_star(ftype, m)
    for block_cycle in wh.h_block_cycles:
        factors.extend(_relabel(f, block_cycle) for f in hfact.factors)

    host = complete_symmetric(n)
    report = verify_factorization(host, factors, ftype)
    if not report.passed:
        raise RuntimeError(f"solve failed verification: {report.failures()}")
    return Factorization(n, ftype, tuple(factors), report, seed)
