"""Branch cache: hits, byte-stable reloads, resume tokens, gc."""

import json
import os

import pytest

from dmrep.budget import Budget
from dmrep.cache import (gc, load_branch, load_resume, resume_path,
                         solve_lattice_cached, store_branch)
from dmrep.classify import assemble_row, orbit_assemble
from dmrep.errors import BudgetExceeded
from dmrep.lattices import catalog
from dmrep.report import solution_report, to_canonical_json
from dmrep.variety import enumerate_branches


def _spec(p, k):
    return [s for s in catalog() if (s.p, s.k) == (p, k)][0]


def _report_text(spec, solution, seed):
    reports = orbit_assemble(spec, solution.points)
    row = assemble_row(spec, reports)
    doc = solution_report(spec, solution, reports, row,
                          {"seed": seed, "precision": 30,
                           "peripheral_preset": None})
    return to_canonical_json(doc)


def test_cold_then_warm_identical_reports(tmp_path):
    spec = _spec(7, 2)
    cdir = str(tmp_path)
    sol1, stats1 = solve_lattice_cached(spec, seed=3, cache_dir=cdir)
    assert stats1 == {"hits": 0, "misses": 7}
    sol2, stats2 = solve_lattice_cached(spec, seed=3, cache_dir=cdir)
    assert stats2 == {"hits": 7, "misses": 0}
    assert _report_text(spec, sol1, 3) == _report_text(spec, sol2, 3)


def test_cache_is_seed_specific(tmp_path):
    spec = _spec(7, 2)
    cdir = str(tmp_path)
    solve_lattice_cached(spec, seed=3, cache_dir=cdir)
    _, stats = solve_lattice_cached(spec, seed=4, cache_dir=cdir)
    assert stats["hits"] == 0


def test_load_rejects_stale_version(tmp_path):
    spec = _spec(7, 2)
    cdir = str(tmp_path)
    solve_lattice_cached(spec, seed=0, cache_dir=cdir)
    branch = enumerate_branches(spec)[0]
    assert load_branch(cdir, spec, branch, 0) is not None
    # corrupt the version field in place
    root = os.path.join(cdir, "branches", spec.id)
    for name in os.listdir(root):
        path = os.path.join(root, name)
        doc = json.load(open(path))
        doc["version"] = "0.0.0-stale"
        json.dump(doc, open(path, "w"))
    assert load_branch(cdir, spec, branch, 0) is None
    kept, removed = gc(cdir)
    assert kept == 0 and removed == 7


def test_budget_writes_resume_token(tmp_path):
    spec = _spec(3, 7)          # the degree-36 lattice: big branches
    cdir = str(tmp_path)
    with pytest.raises(BudgetExceeded):
        solve_lattice_cached(spec, seed=0, budget=Budget(max_steps=150),
                             cache_dir=cdir)
    tok = load_resume(cdir, spec.id)
    assert tok is not None
    assert tok["lattice"] == spec.id
    assert tok["completed_branches"] == ["eta1-id"]
    assert "eta3-full" in tok["pending_branches"]
    # completed branches are already cached: a bigger budget resumes
    branch = enumerate_branches(spec)[0]
    assert load_branch(cdir, spec, branch, 0) is not None


def test_gc_wipe_all(tmp_path):
    spec = _spec(7, 2)
    cdir = str(tmp_path)
    solve_lattice_cached(spec, seed=0, cache_dir=cdir)
    kept, removed = gc(cdir, wipe_all=True)
    assert kept == 0 and removed == 7
    _, stats = solve_lattice_cached(spec, seed=0, cache_dir=cdir)
    assert stats["misses"] == 7
