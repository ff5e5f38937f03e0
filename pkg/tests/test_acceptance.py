"""Acceptance suite: one test per criterion, each printing a summary line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; the test names themselves double as the pass/fail report.
"""

import random
import time

import pytest

from oberwolfach import tables
from oberwolfach.caps import (
    AdmissibleDecomposition,
    assemble,
    external_pattern,
    is_admissible,
    j_decompose,
    splice,
    w_star_factorization,
)
from oberwolfach.checker import (
    Nonexistent,
    brute_force_factorization,
    verify_admissible_decomposition,
    verify_arc_partition,
    verify_cap_complementarity,
    verify_factorization,
)
from oberwolfach.core import (
    Arc,
    CycleType,
    TwoRegularDigraph,
    cycle_from_text,
    cycle_type_of,
    parse_cycle_type,
    path_from_text,
    shift,
)
from oberwolfach.hosts import complete_symmetric, w_star
from oberwolfach.hstar import factorize_h_star
from oberwolfach.solver import solve


def even_types(n):
    def parts(total, mx):
        if total == 0:
            yield ()
            return
        for p in range(min(mx, total), 1, -2):
            for rest in parts(total - p, p):
                yield (p,) + rest

    return [CycleType(t) for t in parts(n, n)]


def report_line(text):
    print(f"\nACCEPTANCE {text}")


def test_criterion_1_full_desk_scale_sweep():
    t0 = time.monotonic()
    solved = 0
    for n in (6, 10, 14, 18, 22, 26):
        for ftype in even_types(n):
            result = solve(n, ftype)
            if (n, ftype.lengths) == (6, (6,)):
                assert isinstance(result, Nonexistent), "(6,[6]) must be nonexistent"
                continue
            assert not isinstance(result, Nonexistent), (n, ftype)
            assert len(result.factors) == n - 1, (n, ftype)
            assert result.report.passed, (n, ftype, result.report.failures())
            solved += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 300, f"budget exceeded: {elapsed:.1f}s"
    report_line(
        f"1 PASS: {solved} instances solved+verified over n in 6..26, "
        f"(6,[6]) nonexistent, {elapsed:.1f}s"
    )


def test_criterion_2_table_audit():
    t0 = time.monotonic()
    left = tables.left_cap()
    centre = tables.centre_piece()
    for family, anchor in sorted(tables.RIGHT_CAPS):
        cap = tables.right_cap(family, anchor)
        report = verify_cap_complementarity(left, cap, centre)
        assert report.passed, (family, anchor, report.failures())
        m0 = {left.paths[i].length + cap.elements[i][0].length for i in range(9)}
        assert m0 == {2 * anchor}, (family, anchor, m0)
        declared = {"L": (), "L2": (2,), "L22": (2, 2), "L4": (4,)}[family]
        assert cap.side_lengths == declared
    decs = [
        (key, tables.small_decomposition(key)) for key in tables.small_types()
    ]
    decs.append(((4, 8), tables.figure_4_8_decomposition()))
    assert len(decs) == 13
    for key, dec in decs:
        report = verify_admissible_decomposition(dec.m, dec, tables.X_PATTERN)
        assert report.passed, (key, report.failures())
        assert all(t == CycleType(key) for t in dec.cycle_types())
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0, f"budget exceeded: {elapsed:.2f}s"
    report_line(
        f"2 PASS: 16 cap tables complementary (m0 = 2*anchor each), "
        f"13 small decompositions admissible with the shared pattern, {elapsed:.2f}s"
    )


def test_criterion_3_h_star_suite():
    t0 = time.monotonic()
    count = 0
    for m in range(3, 11):
        from oberwolfach.hosts import h_star

        host = h_star(m)
        for ftype in even_types(2 * m):
            hf = factorize_h_star(ftype, m)
            assert len(hf.factors) == 4
            report = verify_factorization(host, hf.factors, ftype)
            assert report.passed, (m, ftype, report.failures())
            count += 1
    # m = 2: the host degenerates (4 factors x 4 arcs > 8 available arcs
    # without parallel arcs), so the builder rejects it; see the decisions
    # ledger for the analysis.
    for spec in ("[4]", "[2,2]"):
        with pytest.raises(ValueError):
            factorize_h_star(parse_cycle_type(spec), 2)
    elapsed = time.monotonic() - t0
    assert elapsed < 30, f"budget exceeded: {elapsed:.1f}s"
    report_line(
        f"3 PASS: {count} four-factor decompositions verified for m=3..10; "
        f"m=2 rejected as out of domain (simple-digraph host cannot carry 4 "
        f"factors), {elapsed:.1f}s"
    )


def test_criterion_4_opened_host_suite():
    t0 = time.monotonic()
    count = folds = 0
    for m in range(4, 14):
        for ftype in even_types(2 * m):
            if set(ftype.lengths) == {2}:
                continue
            dec = j_decompose(ftype)
            report = verify_admissible_decomposition(m, dec, tables.X_PATTERN)
            assert report.passed, (m, ftype, report.failures())
            assert all(t == ftype for t in dec.cycle_types())
            count += 1
            if m >= 5:
                factors = w_star_factorization(ftype)
                wreport = verify_factorization(w_star(m), factors, ftype)
                assert wreport.passed, (m, ftype, wreport.failures())
                folds += 1
    # m = 4: the opened host has 72 arcs but the folded host only 56, so the
    # arc correspondence (and hence the fold) does not exist; the code
    # refuses rather than emitting an unverifiable object.
    with pytest.raises(ValueError):
        w_star_factorization(parse_cycle_type("[4,4]"))
    elapsed = time.monotonic() - t0
    assert elapsed < 60, f"budget exceeded: {elapsed:.1f}s"
    report_line(
        f"4 PASS: {count} opened-host decompositions verified (m=4..13, even m "
        f"included), {folds} folded to verified circulant-host factorizations "
        f"(m=5..13; m=4 fold provably impossible), {elapsed:.1f}s"
    )


def test_criterion_5_micro_examples():
    # index shift of a 6-cycle
    assert shift(cycle_from_text("(x0,x2,y3,x1,y2,y1)"), 1) == cycle_from_text(
        "(x1,x3,y4,x2,y3,y2)"
    )
    # splice of the two compatible worked-example pieces
    a = AdmissibleDecomposition(
        4,
        (
            TwoRegularDigraph(
                [cycle_from_text("(x0,x1)"), cycle_from_text("(y1,y2,x2,x3,y4,y3)")]
            ),
        )
        * 9,
    )
    b = AdmissibleDecomposition(
        3, (TwoRegularDigraph([cycle_from_text("(x0,x2,y3,x1,y2,y1)")]),) * 9
    )
    factor = splice(a, b).factors[0]
    assert cycle_type_of(factor).lengths == (2, 6, 6)
    assert is_admissible(factor, 7)
    from oberwolfach.core import parse_vertex

    assert external_pattern(factor) == frozenset(
        parse_vertex(t) for t in ("x0", "x1", "y1")
    )
    # the length-10 joined cycle
    left = path_from_text("<y2,x0,y1,x1,x3>")
    right = path_from_text("<x1,y2,y3,y1,x0,x2,y0>")
    from oberwolfach.core import concat as core_concat

    joined = core_concat(left, shift(right, 2))
    assert joined.length == 10
    # the chained assembly: one centre block between the caps
    dec = assemble(
        tables.left_cap(), tables.centre_piece(), 1, tables.right_cap("L4", 5)
    )
    assert dec.m == 11
    assert all(t.lengths == (4, 18) for t in dec.cycle_types())
    assert verify_admissible_decomposition(11, dec, tables.X_PATTERN).passed
    report_line(
        "5 PASS: shift, splice [2,6,6], 10-cycle join, and the [4,18] "
        "assembly all reproduce bit-exactly"
    )


def test_criterion_6_oracle_cross_checks():
    t0 = time.monotonic()
    host = complete_symmetric(6)
    for ftype in even_types(6):
        oracle = brute_force_factorization(host, ftype)
        solved = solve(6, ftype)
        assert isinstance(oracle, Nonexistent) == isinstance(solved, Nonexistent), ftype
        if not isinstance(oracle, Nonexistent):
            assert verify_factorization(host, oracle, ftype).passed
    confirmation = brute_force_factorization(host, parse_cycle_type("[6]"))
    assert isinstance(confirmation, Nonexistent)
    elapsed = time.monotonic() - t0
    assert elapsed < 120, f"budget exceeded: {elapsed:.1f}s"
    report_line(
        f"6 PASS: oracle and solver agree on existence for all order-6 types; "
        f"(K6,[6]) nonexistence confirmed by exhaustion, {elapsed:.1f}s"
    )


def test_criterion_7_mutation_robustness():
    t0 = time.monotonic()
    rng = random.Random(2026)
    certificates = []
    for n, spec in [(6, "[2,4]"), (10, "[4,6]"), (14, "[2,4,8]"), (14, "[14]")]:
        result = solve(n, parse_cycle_type(spec))
        certificates.append(
            (complete_symmetric(n), parse_cycle_type(spec), result.factors)
        )
    detected = 0
    for trial in range(1000):
        host, ftype, factors = certificates[trial % len(certificates)]
        arc_sets = [set(f.arcs()) for f in factors]
        i = rng.randrange(len(arc_sets))
        victim = rng.choice(sorted(arc_sets[i]))
        op = rng.choice(("delete", "duplicate", "retarget"))
        if op == "delete":
            arc_sets[i].discard(victim)
        elif op == "duplicate":
            j = (i + 1 + rng.randrange(len(arc_sets) - 1)) % len(arc_sets)
            arc_sets[j].add(victim)
        else:
            heads = sorted(host.vertices - {victim.head, victim.tail})
            arc_sets[i].discard(victim)
            arc_sets[i].add(Arc(victim.tail, rng.choice(heads)))
        report = verify_arc_partition(host, arc_sets, ftype)
        assert not report.passed, (op, victim)
        detected += 1
    elapsed = time.monotonic() - t0
    assert detected == 1000
    assert elapsed < 30, f"budget exceeded: {elapsed:.1f}s"
    report_line(
        f"7 PASS: 1000/1000 single-arc mutations rejected, {elapsed:.1f}s"
    )
