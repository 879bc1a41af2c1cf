"""Command-line surface: verbs, records file, catalog ingestion."""

import json
import subprocess
import sys

import pytest

from regionknot.cli import main

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_regions(capsys):
    code, out = run(capsys, "regions", "--pd", TREFOIL)
    assert code == 0
    assert "regions=5" in out and "irreducible=True" in out


def test_regions_round_diagram(capsys):
    code, out = run(capsys, "regions", "--pd", "")
    assert code == 0
    assert "regions=2" in out and "|B|=1" in out and "|W|=1" in out


def test_solve_four_solutions(capsys):
    code, out = run(capsys, "solve", "--pd", TREFOIL, "--crossings", "c1,c2")
    assert code == 0
    assert out.count("solution") == 4
    assert "minimum" in out


def test_solve_avoiding(capsys):
    code, out = run(capsys, "solve", "--pd", TREFOIL, "--crossings", "c1", "--avoid", "R1,R2")
    assert code == 0
    assert "unique solution" in out


def test_splice(capsys):
    code, out = run(capsys, "splice", "--pd", TREFOIL, "--crossing", "c2")
    assert code == 0
    assert "matches linear solve: True" in out


def test_ur(capsys):
    code, out = run(capsys, "ur", "--pd", TREFOIL)
    assert code == 0
    assert "u_R = 1" in out
    assert "<=(c+1)/2: yes" in out


def test_certify(capsys):
    code, out = run(capsys, "certify", "--pd", TREFOIL)
    assert code == 0
    assert "unknots: True" in out


def test_boolcheck(capsys):
    code, out = run(capsys, "boolcheck", "--pd", TREFOIL)
    assert code == 0
    assert "6 excluded pair(s): all ok" in out


def test_records_jsonl(tmp_path, capsys):
    records = tmp_path / "out.jsonl"
    run(capsys, "--records", str(records), "ur", "--pd", TREFOIL)
    run(capsys, "--records", str(records), "regions", "--pd", TREFOIL)
    lines = records.read_text().strip().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert first["command"] == "ur"
    assert first["ur"] == 1
    assert first["pd"] == TREFOIL
    assert "elapsed_ms" in first
    second = json.loads(lines[1])
    assert second["command"] == "regions"
    assert second["regions"] == 5


def test_catalog_file_and_env(tmp_path, capsys, monkeypatch):
    cat = tmp_path / "small.txt"
    cat.write_text(f"# two entries\n3_1\t{TREFOIL}\ntrefoil_again\t{TREFOIL}\n")
    code, out = run(capsys, "catalog", "--path", str(cat))
    assert code == 0
    assert "3_1" in out and "trefoil_again" in out

    monkeypatch.setenv("REGIONKNOT_CATALOG", str(cat))
    records = tmp_path / "records.jsonl"
    code, out = run(capsys, "--records", str(records), "catalog")
    assert code == 0
    recs = [json.loads(line) for line in records.read_text().strip().splitlines()]
    assert len(recs) == 2
    assert all(r["bounds_ok"] for r in recs)
    assert all(r["splice_ok"] for r in recs)
    assert all(r["rank"] == r["crossings"] for r in recs)


def test_bad_crossing_exits_nonzero(capsys):
    with pytest.raises(SystemExit):
        main(["solve", "--pd", TREFOIL, "--crossings", "c9"])


def test_catalog_full_bundled_table(tmp_path, capsys):
    records = tmp_path / "full.jsonl"
    code, out = run(capsys, "--records", str(records), "catalog")
    assert code == 0
    recs = [json.loads(line) for line in records.read_text().strip().splitlines()]
    assert len(recs) == 35
    assert all(r["bounds_ok"] for r in recs)
    assert all(r["splice_ok"] for r in recs)
    assert all(r["bool_ok"] for r in recs)
    assert all(r["certificate"]["le_half_c_plus_1"] for r in recs)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "regionknot.cli", "regions", "--pd", TREFOIL],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "regions=5" in proc.stdout
