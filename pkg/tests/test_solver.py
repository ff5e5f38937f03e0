import json

import pytest

from oberwolfach.checker import Nonexistent
from oberwolfach.core import cycle_type_of, parse_cycle_type
from oberwolfach.serialize import document_for_solution, to_json
from oberwolfach.solver import (
    DomainError,
    round_robin_two_cycles,
    small_order_solve,
    solve,
    wh_decompose,
)


def test_wh_decompose_m7():
    wh = wh_decompose(7)
    assert wh.h_block_cycles == ((0, 3, 6, 2, 5, 1, 4),)


def test_wh_decompose_m11_step_cycles():
    wh = wh_decompose(11)
    assert len(wh.h_block_cycles) == 3
    assert wh.h_block_cycles[0] == tuple((3 * i) % 11 for i in range(11))


def test_wh_decompose_m9_needs_search():
    wh = wh_decompose(9)
    assert len(wh.h_block_cycles) == 2
    seen = set()
    for cyc in wh.h_block_cycles:
        assert sorted(cyc) == list(range(9))
        for i in range(9):
            step = (cyc[(i + 1) % 9] - cyc[i]) % 9
            assert min(step, 9 - step) in (3, 4)
            seen.add(frozenset((cyc[i], cyc[(i + 1) % 9])))
    assert len(seen) == 18


@pytest.mark.parametrize("m", [15, 21])
def test_wh_decompose_composite_m(m):
    """Jump sets with several non-coprime members go through the pairing
    path; the result must still be a clean split into Hamiltonian cycles."""
    wh = wh_decompose(m)
    assert len(wh.h_block_cycles) == (m - 5) // 2
    seen = set()
    for cyc in wh.h_block_cycles:
        assert sorted(cyc) == list(range(m))
        for i in range(m):
            step = (cyc[(i + 1) % m] - cyc[i]) % m
            assert 3 <= min(step, m - step) <= (m - 1) // 2
            seen.add(frozenset((cyc[i], cyc[(i + 1) % m])))
    assert len(seen) == m * (m - 5) // 2


def test_pair_jumps_validity():
    from math import gcd

    from oberwolfach.solver import _pair_jumps

    for m in (9, 15, 21, 27, 45, 51):
        distances = list(range(3, (m - 1) // 2 + 1))
        singles, pairs = _pair_jumps(m, distances)
        assert sorted(singles + [x for p in pairs for x in p]) == distances
        assert all(gcd(d, m) == 1 for d in singles)
        assert all(gcd(gcd(d, e), m) == 1 for d, e in pairs)


@pytest.mark.parametrize("m", [7, 9, 11, 13])
def test_wh_arc_accounting(m):
    wh = wh_decompose(m)
    assert 18 * m + 8 * m * len(wh.h_block_cycles) == 2 * m * (2 * m - 1)
    assert len(wh.h_block_cycles) == (m - 5) // 2


def test_wh_domain():
    with pytest.raises(DomainError):
        wh_decompose(5)
    with pytest.raises(DomainError):
        wh_decompose(8)


def test_round_robin_n2():
    result = round_robin_two_cycles(2)
    assert len(result.factors) == 1
    assert result.factors[0].text() == "{(x0,y0)}"


def test_round_robin_n6():
    result = round_robin_two_cycles(6)
    assert len(result.factors) == 5
    assert all(len(f.cycles) == 3 for f in result.factors)
    assert sum(len(f.arcs()) for f in result.factors) == 30


def test_small_order_nonexistent():
    result = small_order_solve(6, parse_cycle_type("[6]"))
    assert isinstance(result, Nonexistent)


def test_small_order_solves():
    result = small_order_solve(6, parse_cycle_type("[2,4]"))
    assert len(result.factors) == 5
    assert result.report.passed
    result = small_order_solve(10, parse_cycle_type("[4,6]"))
    assert len(result.factors) == 9
    assert result.report.passed


def test_solve_dispatch():
    cases = [(14, "[14]"), (18, "[2,4,4,8]"), (10, "[2,8]"), (6, "[2^3]"), (2, "[2]")]
    for n, spec in cases:
        result = solve(n, parse_cycle_type(spec))
        assert not isinstance(result, Nonexistent)
        assert len(result.factors) == n - 1
        assert result.report.passed


def test_solve_six_six_nonexistent():
    assert isinstance(solve(6, parse_cycle_type("[6]")), Nonexistent)


def test_solve_domain_errors():
    with pytest.raises(DomainError):
        solve(12, parse_cycle_type("[12]"))
    with pytest.raises(DomainError):
        solve(14, parse_cycle_type("[3,11]"))
    with pytest.raises(DomainError):
        solve(14, parse_cycle_type("[2,4]"))


def test_solve_h_embeddings_keep_type():
    ftype = parse_cycle_type("[4,10]")
    result = solve(14, ftype)
    assert all(cycle_type_of(f) == ftype for f in result.factors)


def test_determinism_bytes():
    a = solve(14, parse_cycle_type("[2,4,8]"), seed=3)
    b = solve(14, parse_cycle_type("[2,4,8]"), seed=3)
    assert to_json(document_for_solution(a)) == to_json(document_for_solution(b))


def test_determinism_across_processes():
    import subprocess
    import sys

    snippet = (
        "from oberwolfach.solver import solve;"
        "from oberwolfach.core import parse_cycle_type;"
        "from oberwolfach.serialize import document_for_solution, to_json;"
        "import sys;"
        "sys.stdout.write(to_json(document_for_solution("
        "solve(14, parse_cycle_type('[4,10]'), seed=1))))"
    )
    outputs = set()
    for hashseed in ("1", "2", "40351"):
        proc = subprocess.run(
            [sys.executable, "-c", snippet],
            capture_output=True,
            text=True,
            env={"PYTHONHASHSEED": hashseed, "PATH": "/usr/bin:/bin"},
        )
        assert proc.returncode == 0, proc.stderr
        outputs.add(proc.stdout)
    assert len(outputs) == 1, "output bytes depend on the process hash seed"


def test_corrupt_cache_is_a_miss(tmp_path, monkeypatch):
    path = tmp_path / "cache.json"
    path.write_text("{broken json")
    monkeypatch.setenv("OBERWOLFACH_CACHE", str(path))
    result = small_order_solve(6, parse_cycle_type("[2,4]"))
    assert result.report.passed
    json.loads(path.read_text())  # rewritten as valid JSON


def test_cache_roundtrip(tmp_path, monkeypatch):
    path = tmp_path / "cache.json"
    monkeypatch.setenv("OBERWOLFACH_CACHE", str(path))
    first = small_order_solve(6, parse_cycle_type("[2,4]"))
    assert path.exists()
    data = json.loads(path.read_text())
    assert "6:[2,4]" in data
    second = small_order_solve(6, parse_cycle_type("[2,4]"))
    assert second.report.passed
    assert [f.text() for f in first.factors] == [f.text() for f in second.factors]
