"""Report serialization, table rendering and reference comparison.

A solve run is captured in a single JSON document (schema
``dmrep.report/1``) holding, for every branch, the solver evidence and,
for every Galois orbit, enough exact data (field modulus and coordinate
vectors as rational coefficient lists) to re-run certification without
the solver.  Serialization is canonical — keys sorted, no timestamps —
so identical configuration and seed produce identical bytes.
"""

import csv
import io
import json

from .errors import CertificationError
from .exactnum import Rational
from .lattices import Word
from .nfield import NumberField
from .reference import (cell_degree, field_key_from_coeffs, reference_row,
                        row_consistency)
from .upoly import UPoly
from .variety import SolutionPoint, enumerate_branches, fingerprint_words

SCHEMA = "dmrep.report/1"


# -- exact scalars <-> JSON -------------------------------------------------

def _q(x):
    x = Rational(x)
    return [x.numerator, x.denominator]


def _q_list(poly):
    return [_q(c) for c in poly.coeffs]


def _upoly_from_q(pairs):
    return UPoly([Rational(n, d) for n, d in pairs])


def _key_blob(key):
    return None if key is None else list(key)


def _key_from_blob(blob):
    if blob is None:
        return None
    kind, val = blob
    return (kind, val if kind == "cyc" else tuple(val))


# -- solution points <-> JSON ----------------------------------------------

def point_blob(pt):
    return {
        "branch": pt.branch.key,
        "modulus": _q_list(pt.field.modulus),
        "coords": {name: _q_list(el.rep) for name, el in pt.coords.items()},
        "multiplicity": pt.multiplicity,
    }


def point_from_blob(spec, blob, check=False):
    """Rebuild a SolutionPoint.  With check=True the modulus is verified
    irreducible (the independent-verification path)."""
    branches = {b.key: b for b in enumerate_branches(spec)}
    if blob["branch"] not in branches:
        raise CertificationError("unknown branch %r" % blob["branch"])
    field = NumberField(_upoly_from_q(blob["modulus"]), check=check)
    coords = {name: field.element(_upoly_from_q(rep))
              for name, rep in blob["coords"].items()}
    return SolutionPoint(field, coords, branches[blob["branch"]],
                         blob.get("multiplicity", 1))


# -- orbit reports / table rows <-> JSON ------------------------------------

def _witness_blob(witness):
    if witness is None:
        return None
    out = {"kind": witness["kind"]}
    for k in ("j", "normal_j"):
        if k in witness:
            out[k] = witness[k]
    return out


def orbit_blob(report):
    return {
        "point": point_blob(report.point),
        "degree": report.point.degree,
        "min_poly": report.min_poly.int_coeffs(),
        "cyclotomic_id": report.cyclotomic_id,
        "orbit_size": report.orbit_size,
        "classification": report.classification,
        "witness": _witness_blob(report.witness),
        "signatures": ([list(s) for s in report.signatures]
                       if report.signatures is not None else None),
        "complex_hyperbolic": report.complex_hyperbolic,
        "principal": report.principal,
        "factors_flag": report.factors_flag,
        "evidence": report.evidence,
    }


def row_blob(row):
    cells = []
    for c in row.cells:
        cells.append({
            "key": _key_blob(c["key"]),
            "poly": c["poly"].int_coeffs() if c["poly"] is not None else None,
            "conductor": c["conductor"],
            "degree": c["degree"],
            "irreducible": c["irreducible"],
            "reducible": list(c["reducible"]),
            "factors": c["factors"],
            "bold": c["bold"],
        })
    return {
        "lattice_id": row.lattice_id,
        "total": row.total,
        "galois_orbits": row.galois_orbits,
        "boldface": _key_blob(row.boldface),
        "cells": cells,
    }


def solution_report(spec, solution, orbit_reports, row, config):
    """Assemble the full report document for one lattice."""
    branches = []
    for res in solution.results:
        branches.append({
            "key": res.branch.key,
            "stratum": res.branch.stratum,
            "eta_order": res.branch.eta_order,
            "n_points": len(res.points),
            "evidence": res.evidence,
        })
    return {
        "schema": SCHEMA,
        "lattice": {
            "id": spec.id, "type": spec.type, "p": spec.p, "k": spec.k,
            "l": spec.l, "d": spec.d, "compact": spec.compact,
        },
        "config": dict(config),
        "branches": branches,
        "orbits": [orbit_blob(r) for r in orbit_reports],
        "row": row_blob(row),
    }


def to_canonical_json(doc):
    """Deterministic byte form: sorted keys, fixed separators, one
    trailing newline, no timestamps."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      allow_nan=False) + "\n"


def load_report(text):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError("unexpected report schema %r" % doc.get("schema"))
    return doc


# -- conjugacy-invariant audit evidence --------------------------------------

def trace_invariants(spec, point):
    """Exact audit data for one orbit: for each fingerprint word W, the
    minimal polynomial (integer coefficients) of tr(W)^3 / det(W), which
    is invariant under conjugation and under rescaling the matrix lift."""
    from .variety import word_value
    out = {}
    for word in fingerprint_words():
        M = word_value(spec, point, word)
        tr = M[0][0] + M[1][1] + M[2][2]
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        inv = (tr * tr * tr) / det
        out[word.to_text()] = \
            inv.min_poly().content_primitive()[1].int_coeffs()
    return out


# -- comparison against the published tables ---------------------------------

def _ref_cells_by_key(ref_row):
    cells = {}
    for c in ref_row["cells"]:
        coeffs = tuple(c["poly"]) if c["poly"] is not None else None
        key = field_key_from_coeffs(coeffs)
        if key in cells:
            raise ValueError("reference row %s has two cells with field %r"
                             % (ref_row["lattice"], key))
        cells[key] = c
    return cells


def compare_row(computed_row, ref_row, orbit_evidence=None):
    """Cell-by-cell diff of a computed TableRow blob against a published
    row.  Returns (diffs, notes); an empty diff list means the row
    matches.  The Factors column is never compared ("unverified")."""
    diffs, notes = [], []
    evidence = orbit_evidence or {}
    consistency = row_consistency(ref_row)
    if not consistency["total_consistent"]:
        notes.append(
            "reference row is internally inconsistent: Total column %d but "
            "cells sum to %d" % (ref_row["total"],
                                 consistency["cells_total"]))
    if not consistency["orbits_consistent"]:
        notes.append(
            "reference row is internally inconsistent: Galois Orbits "
            "column %d but cells carry %d orbits"
            % (ref_row["galois_orbits"], consistency["cells_orbits"]))

    def diff(kind, key, computed, ref):
        entry = {"kind": kind, "field": _key_blob(key),
                 "computed": computed, "reference": ref}
        if key is not None and key in evidence:
            entry["evidence"] = evidence[key]
        diffs.append(entry)

    if computed_row["total"] != ref_row["total"]:
        diff("total", None, computed_row["total"], ref_row["total"])
    if computed_row["galois_orbits"] != ref_row["galois_orbits"]:
        diff("galois-orbits", None, computed_row["galois_orbits"],
             ref_row["galois_orbits"])

    ref_cells = _ref_cells_by_key(ref_row)
    got_cells = {}
    for c in computed_row["cells"]:
        got_cells[_key_from_blob(c["key"])] = c

    for key, rc in sorted(ref_cells.items(), key=lambda kv: str(kv[0])):
        if key not in got_cells:
            diff("missing-field", key, None,
                 {"irreducible": rc["irreducible"],
                  "reducible": rc["reducible"],
                  "degree": cell_degree(rc)})
            continue
        gc = got_cells[key]
        if gc["degree"] != cell_degree(rc):
            diff("field-degree", key, gc["degree"], cell_degree(rc))
        if gc["irreducible"] != rc["irreducible"]:
            diff("irreducible-count", key, gc["irreducible"],
                 rc["irreducible"])
        if list(gc["reducible"]) != list(rc["reducible"]):
            diff("reducible-pair", key, list(gc["reducible"]),
                 list(rc["reducible"]))
    for key, gc in sorted(got_cells.items(), key=lambda kv: str(kv[0])):
        if key not in ref_cells:
            diff("extra-field", key,
                 {"irreducible": gc["irreducible"],
                  "reducible": gc["reducible"],
                  "degree": gc["degree"]}, None)

    ref_bold = None
    for c in ref_row["cells"]:
        if c["bold"]:
            coeffs = tuple(c["poly"]) if c["poly"] is not None else None
            ref_bold = field_key_from_coeffs(coeffs)
    got_bold = _key_from_blob(computed_row["boldface"])
    if got_bold != ref_bold:
        diff("boldface", None, _key_blob(got_bold), _key_blob(ref_bold))

    notes.append("factors column: unverified (peripheral word not pinned)")
    return diffs, notes


def compare_report(doc, orbit_evidence=None):
    """Compare a solve report against the embedded reference tables."""
    ref = reference_row(doc["lattice"]["id"])
    return compare_row(doc["row"], ref, orbit_evidence)


# -- rendering ---------------------------------------------------------------

_CSV_COLUMNS = ["lattice", "total", "galois_orbits", "field", "degree",
                "conductor", "irreducible", "reducible_m", "reducible_n",
                "factors", "bold"]


def _poly_text(coeffs):
    if coeffs is None:
        return "Q"
    return " ".join(str(c) for c in coeffs)


def _poly_from_text(text):
    if text == "Q":
        return None
    return [int(c) for c in text.split()]


def rows_to_csv(row_blobs):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_COLUMNS)
    for row in row_blobs:
        for c in row["cells"]:
            w.writerow([
                row["lattice_id"], row["total"], row["galois_orbits"],
                _poly_text(c["poly"]), c["degree"],
                "" if c["conductor"] is None else c["conductor"],
                c["irreducible"], c["reducible"][0], c["reducible"][1],
                "" if c["factors"] is None else c["factors"],
                1 if c["bold"] else 0,
            ])
    return buf.getvalue()


def rows_from_csv(text):
    """Inverse of rows_to_csv (round-trips the JSON row schema)."""
    rows = {}
    order = []
    rdr = csv.reader(io.StringIO(text))
    header = next(rdr)
    if header != _CSV_COLUMNS:
        raise ValueError("unexpected csv header %r" % header)
    for rec in rdr:
        (lat, total, orbits, ptext, degree, conductor,
         irr, m, n, factors, bold) = rec
        if lat not in rows:
            rows[lat] = {"lattice_id": lat, "total": int(total),
                         "galois_orbits": int(orbits), "boldface": None,
                         "cells": []}
            order.append(lat)
        poly = _poly_from_text(ptext)
        cond = int(conductor) if conductor else None
        if cond is not None:
            key = ["cyc", cond]
        elif poly is not None:
            key = ["poly", poly]
        else:
            key = ["cyc", 1]
        cell = {"key": key, "poly": poly, "conductor": cond,
                "degree": int(degree), "irreducible": int(irr),
                "reducible": [int(m), int(n)],
                "factors": int(factors) if factors else None,
                "bold": bold == "1"}
        rows[lat]["cells"].append(cell)
        if cell["bold"]:
            rows[lat]["boldface"] = key
    return [rows[lat] for lat in order]


def _poly_pretty(coeffs):
    if coeffs is None:
        return "Q"
    return UPoly(coeffs).to_text()


def rows_to_markdown(row_blobs, factors_column=None):
    """Markdown rendering in the published column layout; boldface is a
    marker column.  The Factors column is included when any row carries
    factors data (or as forced by factors_column)."""
    has_factors = factors_column if factors_column is not None else \
        any(c["factors"] is not None
            for row in row_blobs for c in row["cells"])
    head = ["(p,k)", "Total", "Galois Orbits", "Q-extension", "Bold",
            "Irreducible", "Reducible"]
    if has_factors:
        head.append("Factors")
    lines = ["| " + " | ".join(head) + " |",
             "|" + "|".join("---" for _ in head) + "|"]
    for row in row_blobs:
        first = True
        for c in row["cells"]:
            m, n = c["reducible"]
            red = "0" if (m, n) == (0, 0) else "(%d,%d)" % (m, n)
            rec = [row["lattice_id"] if first else "",
                   str(row["total"]) if first else "",
                   str(row["galois_orbits"]) if first else "",
                   _poly_pretty(c["poly"]),
                   "*" if c["bold"] else "",
                   str(c["irreducible"]), red]
            if has_factors:
                rec.append("" if c["factors"] is None else str(c["factors"]))
            lines.append("| " + " | ".join(rec) + " |")
            first = False
    return "\n".join(lines) + "\n"


# -- independent verification -------------------------------------------------

def verify_report(doc, spec=None):
    """Re-run certification from the serialized data alone: no solver,
    no Groebner machinery.  Returns a list of failure strings (empty
    means every orbit passed); each failure names the check or relator
    that broke."""
    from .classify import certify, configuration_class, irreducibility
    from .lattices import catalog

    if spec is None:
        by_id = {s.id: s for s in catalog()}
        if doc["lattice"]["id"] not in by_id:
            return ["unknown lattice %r" % doc["lattice"]["id"]]
        spec = by_id[doc["lattice"]["id"]]

    failures = []
    for i, blob in enumerate(doc["orbits"]):
        label = "orbit %d (%s, degree %d)" % (i, blob["point"]["branch"],
                                              blob["degree"])
        try:
            pt = point_from_blob(spec, blob["point"], check=True)
        except (CertificationError, ValueError) as e:
            failures.append("%s: modulus rejected: %s" % (label, e))
            continue
        try:
            cert = certify(pt, spec)
        except CertificationError as e:
            failures.append("%s: %s" % (label, e))
            continue
        verdict, _ = irreducibility(cert)
        recorded = blob["classification"]
        if (verdict == "irreducible") != (recorded == "irreducible"):
            failures.append("%s: irreducibility re-check gives %s but the "
                            "report says %s" % (label, verdict, recorded))
            continue
        config = configuration_class(cert)
        if recorded == "irreducible" and config != "non-degenerate":
            failures.append("%s: irreducible orbit with %s configuration"
                            % (label, config))
        if recorded.startswith("reducible"):
            want = ("reducible-nondegenerate" if config == "non-degenerate"
                    else "reducible-degenerate")
            if recorded != want:
                failures.append("%s: configuration re-check gives %s but "
                                "the report says %s" % (label, want,
                                                        recorded))
        if pt.degree != blob["degree"]:
            failures.append("%s: field degree %d does not match recorded %d"
                            % (label, pt.degree, blob["degree"]))
    return failures
