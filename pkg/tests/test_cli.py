import json
import subprocess
import sys
from pathlib import Path

from oberwolfach.cli import main
from oberwolfach.serialize import from_json, to_json

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "j12_4_8_decomposition.json"


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "oberwolfach.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_solve_json_verified(tmp_path):
    out = tmp_path / "out.json"
    proc = run_cli(
        "solve", "--n", "14", "--factor", "[2,4,8]", "--format", "json",
        "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    data = json.loads(out.read_text())
    assert data["n"] == 14
    assert data["verified"] is True
    assert data["factor_type"] == [2, 4, 8]
    assert len(data["factors"]) == 13


def test_solve_verify_roundtrip(tmp_path):
    out = tmp_path / "out.json"
    assert run_cli(
        "solve", "--n", "10", "--factor", "[2^2,6]", "--out", str(out)
    ).returncode == 0
    proc = run_cli("verify", str(out))
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["passed"] is True


def test_json_roundtrip_byte_identical(tmp_path):
    out = tmp_path / "out.json"
    run_cli("solve", "--n", "6", "--factor", "[2,4]", "--out", str(out))
    text = out.read_text()
    assert to_json(from_json(text)) == text


def test_verify_detects_mutation(tmp_path):
    out = tmp_path / "out.json"
    run_cli("solve", "--n", "6", "--factor", "[2,4]", "--out", str(out))
    data = json.loads(out.read_text())
    # retarget one vertex of one cycle
    data["factors"][0][0][0] = "y2"
    out.write_text(json.dumps(data))
    proc = run_cli("verify", str(out))
    assert proc.returncode == 1


def test_verify_fixture():
    proc = run_cli("verify", str(FIXTURE))
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert json.loads(proc.stdout)["passed"] is True


def test_nonexistent_exit_code():
    proc = run_cli("solve", "--n", "6", "--factor", "[6]")
    assert proc.returncode == 2
    assert "nonexistent" in proc.stderr


def test_domain_error_exit_code():
    assert run_cli("solve", "--n", "12", "--factor", "[12]").returncode == 1
    assert run_cli("solve", "--n", "14", "--factor", "[3,11]").returncode == 1
    assert run_cli("solve", "--n", "14", "--factor", "(nonsense)").returncode == 1


def test_dot_output_one_statement_per_arc():
    proc = run_cli("solve", "--n", "6", "--factor", "[2,4]", "--format", "dot")
    assert proc.returncode == 0
    statements = [l for l in proc.stdout.splitlines() if "->" in l]
    assert len(statements) == 30  # 5 factors x 6 arcs


def test_edges_output():
    proc = run_cli("solve", "--n", "6", "--factor", "[2^3]", "--format", "edges")
    lines = [l for l in proc.stdout.splitlines() if l]
    assert len(lines) == 30
    assert lines[0].split()[0] == "1"


def test_tables_check():
    proc = run_cli("tables", "--check")
    assert proc.returncode == 0
    assert "16 cap rows + 13 decomposition rows" in proc.stdout


def test_tables_dump_parses():
    proc = run_cli("tables", "--dump")
    data = json.loads(proc.stdout)
    assert len(data["right_caps"]) == 16
    assert len(data["small_decompositions"]) == 12


def test_selftest_small():
    proc = run_cli("selftest", "--max-n", "6")
    assert proc.returncode == 0
    assert "3 types, 2 solved, 1 nonexistent, 0 failed" in proc.stdout


def test_main_callable_directly(capsys, tmp_path):
    out = tmp_path / "x.json"
    assert main(["solve", "--n", "6", "--factor", "[2,4]", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["verified"] is True


def test_verify_other_host_kinds(capsys, tmp_path):
    from oberwolfach.core import parse_cycle_type
    from oberwolfach.hosts import HostDescriptor
    from oberwolfach.hstar import factorize_h_star
    from oberwolfach.serialize import FactorizationDocument

    ftype = parse_cycle_type("[4,6]")
    hf = factorize_h_star(ftype, 5)
    doc = FactorizationDocument(
        n=10,
        ftype=ftype,
        host=HostDescriptor("HStar", 5),
        factors=hf.factors,
        verified=True,
        seed=0,
    )
    path = tmp_path / "hstar.json"
    path.write_text(to_json(doc))
    assert main(["verify", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True
