"""On-disk memo of solved branches, plus resume tokens.

Entries are keyed by (package version, lattice, branch, seed); a version
bump invalidates everything, which `gc` then collects.  Loading a cached
branch reconstructs the exact BranchResult — field moduli and coordinate
vectors are stored as rational coefficient lists — so a warm run emits
byte-identical reports to a cold one.
"""

import hashlib
import json
import os
import random

from . import __version__
from .errors import BudgetExceeded
from .report import point_blob, point_from_blob, to_canonical_json
from .variety import (BranchResult, LatticeSolution, UNLIMITED,
                      enumerate_branches, solve_branch)

SCHEMA = "dmrep.cache/1"


def _entry_key(spec, branch, seed):
    raw = "%s|%s|%s|%s" % (__version__, spec.id, branch.key, seed)
    return hashlib.sha256(raw.encode()).hexdigest()[:16]


def _branch_path(cache_dir, spec, branch, seed):
    return os.path.join(cache_dir, "branches", spec.id,
                        "%s-%s.json" % (branch.key,
                                        _entry_key(spec, branch, seed)))


def report_path(cache_dir, lattice_id):
    return os.path.join(cache_dir, "reports", "%s.report.json" % lattice_id)


def resume_path(cache_dir, lattice_id):
    return os.path.join(cache_dir, "resume", "%s.json" % lattice_id)


def _write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as f:
        f.write(text)
    os.replace(tmp, path)


def store_branch(cache_dir, spec, branch, seed, result):
    doc = {
        "schema": SCHEMA,
        "version": __version__,
        "lattice": spec.id,
        "branch": branch.key,
        "seed": seed,
        "points": [point_blob(pt) for pt in result.points],
        "evidence": result.evidence,
    }
    _write(_branch_path(cache_dir, spec, branch, seed),
           to_canonical_json(doc))


def load_branch(cache_dir, spec, branch, seed):
    """The cached BranchResult, or None on any miss (absent, stale
    version, unreadable)."""
    path = _branch_path(cache_dir, spec, branch, seed)
    try:
        with open(path) as f:
            doc = json.load(f)
    except (OSError, ValueError):
        return None
    if doc.get("schema") != SCHEMA or doc.get("version") != __version__ \
            or doc.get("branch") != branch.key or doc.get("seed") != seed:
        return None
    points = [point_from_blob(spec, blob) for blob in doc["points"]]
    return BranchResult(branch, points, doc["evidence"])


def solve_lattice_cached(spec, seed=0, budget=UNLIMITED, cache_dir=None):
    """solve_lattice with a branch-level cache.  Returns (solution,
    stats); on budget exhaustion a resume token recording the completed
    branches is written before the exception propagates."""
    stats = {"hits": 0, "misses": 0}
    if cache_dir is None:
        results = []
        for branch in enumerate_branches(spec):
            rng = random.Random("%s:%s" % (seed, branch.key))
            results.append(solve_branch(spec, branch, rng, budget))
            stats["misses"] += 1
        return LatticeSolution(spec, results), stats

    results = []
    completed = []
    try:
        for branch in enumerate_branches(spec):
            cached = load_branch(cache_dir, spec, branch, seed)
            if cached is not None:
                stats["hits"] += 1
                results.append(cached)
            else:
                rng = random.Random("%s:%s" % (seed, branch.key))
                res = solve_branch(spec, branch, rng, budget)
                store_branch(cache_dir, spec, branch, seed, res)
                stats["misses"] += 1
                results.append(res)
            completed.append(branch.key)
    except BudgetExceeded as e:
        write_resume(cache_dir, spec, seed, completed,
                     [b.key for b in enumerate_branches(spec)
                      if b.key not in completed], e)
        raise
    tok = resume_path(cache_dir, spec.id)
    if os.path.exists(tok):
        os.remove(tok)
    return LatticeSolution(spec, results), stats


def write_resume(cache_dir, spec, seed, completed, pending, exc):
    """Record where a budgeted run stopped (completed branches stay
    cached, so the next run picks up from the token)."""
    token = {
        "schema": "dmrep.resume/1",
        "version": __version__,
        "lattice": spec.id,
        "seed": seed,
        "completed_branches": list(completed),
        "pending_branches": list(pending),
        "checkpoint": getattr(exc, "checkpoint", None),
        "steps": getattr(exc, "steps", None),
    }
    _write(resume_path(cache_dir, spec.id), to_canonical_json(token))


def load_resume(cache_dir, lattice_id):
    try:
        with open(resume_path(cache_dir, lattice_id)) as f:
            return json.load(f)
    except (OSError, ValueError):
        return None


def gc(cache_dir, wipe_all=False):
    """Collect stale cache entries (version mismatch or unreadable);
    with wipe_all, everything goes.  Returns (kept, removed)."""
    kept = removed = 0
    root = os.path.join(cache_dir, "branches")
    for dirpath, _, names in os.walk(root):
        for name in names:
            path = os.path.join(dirpath, name)
            stale = wipe_all
            if not stale:
                try:
                    with open(path) as f:
                        doc = json.load(f)
                    stale = (doc.get("schema") != SCHEMA
                             or doc.get("version") != __version__)
                except (OSError, ValueError):
                    stale = True
            if stale:
                os.remove(path)
                removed += 1
            else:
                kept += 1
    if wipe_all:
        for sub in ("reports", "resume"):
            d = os.path.join(cache_dir, sub)
            if os.path.isdir(d):
                for name in os.listdir(d):
                    os.remove(os.path.join(d, name))
                    removed += 1
    return kept, removed
