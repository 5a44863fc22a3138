"""Report serialization, verification-from-data, rendering, comparison."""

import copy
import json

import pytest

from dmrep.classify import assemble_row, orbit_assemble
from dmrep.lattices import catalog
from dmrep.report import (compare_report, compare_row, load_report,
                          point_blob, point_from_blob, rows_from_csv,
                          rows_to_csv, rows_to_markdown, solution_report,
                          to_canonical_json, trace_invariants, verify_report)
from dmrep.reference import reference_row
from dmrep.variety import solve_lattice

_CACHE = {}


def _doc(p, k, seed=0):
    if (p, k, seed) not in _CACHE:
        spec = [s for s in catalog() if (s.p, s.k) == (p, k)][0]
        sol = solve_lattice(spec, seed=seed)
        reports = orbit_assemble(spec, sol.points)
        row = assemble_row(spec, reports)
        doc = solution_report(spec, sol, reports, row,
                              {"seed": seed, "precision": 30,
                               "peripheral_preset": None})
        _CACHE[(p, k, seed)] = (spec, sol, doc)
    return _CACHE[(p, k, seed)]


def test_canonical_json_round_trip():
    spec, sol, doc = _doc(10, 2)
    text = to_canonical_json(doc)
    doc2 = load_report(text)
    assert doc2 == json.loads(text)
    assert to_canonical_json(doc2) == text
    assert "schema" in doc2 and doc2["schema"] == "dmrep.report/1"
    with pytest.raises(ValueError):
        load_report(json.dumps({"schema": "bogus/9"}))


def test_point_blob_round_trip():
    spec, sol, doc = _doc(10, 2)
    for pt in sol.points:
        back = point_from_blob(spec, point_blob(pt))
        assert back.field.modulus == pt.field.modulus
        assert back.branch == pt.branch
        assert set(back.coords) == set(pt.coords)
        for name in pt.coords:
            assert back.coords[name] == pt.coords[name]


def test_verify_report_passes_and_catches_tampering():
    spec, sol, doc = _doc(10, 2)
    assert verify_report(doc) == []

    bad = copy.deepcopy(doc)
    bad["orbits"][0]["point"]["coords"]["w0"][0][0] += 1
    fails = verify_report(bad)
    assert len(fails) == 1 and "orbit 0" in fails[0]

    # a reducible modulus must be rejected by the field reconstruction
    bad = copy.deepcopy(doc)
    idx = [i for i, o in enumerate(bad["orbits"]) if o["degree"] >= 2][0]
    deg = bad["orbits"][idx]["degree"]
    bad["orbits"][idx]["point"]["modulus"] = \
        [[0, 1]] * deg + [[1, 1]]          # x^deg, visibly reducible
    fails = verify_report(bad)
    assert fails and "modulus" in fails[0]

    bad = copy.deepcopy(doc)
    bad["orbits"][0]["classification"] = "reducible-degenerate"
    fails = verify_report(bad)
    assert fails and "irreducibility" in fails[0]


def test_compare_zero_diffs_on_matching_rows():
    for (p, k) in ((10, 2), (7, 2)):
        spec, sol, doc = _doc(p, k)
        diffs, notes = compare_report(doc)
        assert diffs == []
        assert any("unverified" in n for n in notes)


def test_compare_detects_tampering():
    spec, sol, doc = _doc(10, 2)
    row = copy.deepcopy(doc["row"])
    row["total"] = 15
    row["cells"][0]["irreducible"] = 2
    row["boldface"] = ["cyc", 5]
    diffs, _ = compare_row(row, reference_row(spec.id))
    kinds = sorted(d["kind"] for d in diffs)
    assert kinds == ["boldface", "irreducible-count", "total"]


def test_compare_notes_internal_inconsistency():
    # reference row (8,3): Total column 46 but cells sum to 44
    ref = reference_row("t4-p8-k3")
    fake = {"lattice_id": "t4-p8-k3", "total": 44, "galois_orbits": 5,
            "boldface": ["cyc", 72],
            "cells": [{"key": ["cyc", 72], "poly": None, "conductor": 72,
                       "degree": 24, "irreducible": 1,
                       "reducible": [0, 0], "factors": None, "bold": True}]}
    diffs, notes = compare_row(fake, ref)
    assert any("internally inconsistent" in n for n in notes)
    assert any(d["kind"] == "total" for d in diffs)


def test_compare_attaches_evidence():
    spec, sol, doc = _doc(10, 2)
    row = copy.deepcopy(doc["row"])
    row["cells"][0]["irreducible"] = 7
    ev = {("cyc", 15): [{"branch": "eta10-full", "degree": 8}]}
    diffs, _ = compare_row(row, reference_row(spec.id), orbit_evidence=ev)
    hit = [d for d in diffs if d["kind"] == "irreducible-count"][0]
    assert hit["evidence"][0]["branch"] == "eta10-full"


def test_trace_invariants_exact_and_orbit_level():
    spec, sol, doc = _doc(10, 2)
    pt = [p for p in sol.points if p.degree == 4][0]
    inv = trace_invariants(spec, pt)
    assert len(inv) == 8
    for coeffs in inv.values():
        assert all(isinstance(c, int) for c in coeffs)
        assert len(coeffs) - 1 <= pt.degree


def test_csv_round_trip_and_markdown():
    spec, sol, doc = _doc(10, 2)
    rows = [doc["row"]]
    assert rows_from_csv(rows_to_csv(rows)) == rows
    md = rows_to_markdown(rows)
    assert md.splitlines()[1].startswith("|---")
    assert "*" in md                       # boldface marker column
    assert "t3-p10-k2" in md
    with pytest.raises(ValueError):
        rows_from_csv("nonsense,header\n1,2\n")
