"""Command-line front end: verbs, exit codes, determinism."""

import json
import os

import pytest

from dmrep.cli import main


def _run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def _solve(capsys, cdir, lattice="t3-p10-k2", *extra):
    return _run(capsys, "solve", "--lattice", lattice,
                "--cache-dir", cdir, *extra)


def test_solve_writes_report_and_prints_json(tmp_path, capsys):
    cdir = str(tmp_path)
    rc, out, err = _solve(capsys, cdir)
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "dmrep.report/1"
    assert doc["row"]["total"] == 16
    path = os.path.join(cdir, "reports", "t3-p10-k2.report.json")
    with open(path) as f:
        assert f.read() == out


def test_solve_determinism_byte_identical(tmp_path, capsys):
    d1, d2 = str(tmp_path / "a"), str(tmp_path / "b")
    rc1, out1, _ = _solve(capsys, d1, "t3-p7-k2", "--seed", "1")
    rc2, out2, _ = _solve(capsys, d2, "t3-p7-k2", "--seed", "1")
    assert rc1 == rc2 == 0
    assert out1 == out2
    # warm rerun in the same cache dir: also byte-identical
    rc3, out3, _ = _solve(capsys, d1, "t3-p7-k2", "--seed", "1")
    assert rc3 == 0 and out3 == out1


def test_compare_match_and_diff_exit_codes(tmp_path, capsys):
    cdir = str(tmp_path)
    _solve(capsys, cdir)
    rc, out, _ = _run(capsys, "compare", "--lattice", "t3-p10-k2",
                      "--cache-dir", cdir)
    assert rc == 0
    doc = json.loads(out)
    assert doc["rows"][0]["match"] is True
    assert any("unverified" in n for n in doc["rows"][0]["notes"])

    # tamper the stored report -> diff reported, exit 1
    path = os.path.join(cdir, "reports", "t3-p10-k2.report.json")
    rep = json.load(open(path))
    rep["row"]["total"] = 99
    json.dump(rep, open(path, "w"))
    rc, out, _ = _run(capsys, "compare", "--lattice", "t3-p10-k2",
                      "--cache-dir", cdir, "--format", "markdown")
    assert rc == 1
    assert "total" in out


def test_verify_pass_and_fail(tmp_path, capsys):
    cdir = str(tmp_path)
    _solve(capsys, cdir)
    path = os.path.join(cdir, "reports", "t3-p10-k2.report.json")
    rc, out, _ = _run(capsys, "verify", path)
    assert rc == 0 and out.startswith("ok:")

    rep = json.load(open(path))
    rep["orbits"][0]["point"]["coords"]["w1"][0][0] += 7
    bad = str(tmp_path / "bad.json")
    json.dump(rep, open(bad, "w"))
    rc, out, _ = _run(capsys, "verify", bad)
    assert rc == 1 and out.startswith("FAIL")

    rc, _, err = _run(capsys, "verify", str(tmp_path / "missing.json"))
    assert rc == 3


def test_table_renders_and_empty_selection_is_ok(tmp_path, capsys):
    cdir = str(tmp_path)
    _solve(capsys, cdir)
    rc, out, _ = _run(capsys, "table", "--lattice", "t3-p10-k2",
                      "--cache-dir", cdir)
    assert rc == 0 and out.splitlines()[0].startswith("| (p,k)")
    rc, out, _ = _run(capsys, "table", "--lattice", "t3-p10-k2",
                      "--cache-dir", cdir, "--format", "csv")
    assert rc == 0 and out.splitlines()[0].startswith("lattice,")
    # nothing solved yet in a fresh dir -> empty table, zero exit
    rc, out, _ = _run(capsys, "table", "--all",
                      "--cache-dir", str(tmp_path / "fresh"))
    assert rc == 0
    assert all(not line or line.startswith("|") for line in out.splitlines())


def test_budget_exit_code_and_resume(tmp_path, capsys):
    cdir = str(tmp_path)
    rc, out, err = _run(capsys, "solve", "--lattice", "t2-p3-k7",
                        "--cache-dir", cdir, "--budget-steps", "150")
    assert rc == 2
    assert "resume" in err
    assert os.path.exists(os.path.join(cdir, "resume", "t2-p3-k7.json"))


def test_cache_gc_verb(tmp_path, capsys):
    cdir = str(tmp_path)
    _solve(capsys, cdir)
    rc, _, err = _run(capsys, "cache-gc", "--cache-dir", cdir)
    assert rc == 0 and "kept" in err
    rc, _, err = _run(capsys, "cache-gc", "--cache-dir", cdir, "--all")
    assert rc == 0 and "removed" in err


def test_usage_errors(tmp_path, capsys):
    assert _run(capsys, "solve", "--lattice", "nope")[0] == 3
    assert _run(capsys, "solve", "--cache-dir", str(tmp_path))[0] == 3
    assert _run(capsys, "frobnicate")[0] == 3
    assert _run(capsys, "compare", "--lattice", "t3-p7-k2",
                "--cache-dir", str(tmp_path / "void"))[0] == 3
