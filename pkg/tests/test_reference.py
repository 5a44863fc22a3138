"""Embedded reference tables: shape, canonicalization, consistency."""

import pytest

from dmrep.lattices import catalog
from dmrep.reference import (canonical_conductor, cell_degree, cell_orbits,
                             field_key_from_coeffs, load_reference,
                             recognize_cyclotomic, reference_row,
                             row_consistency)
from dmrep.ufactor import factor_rational
from dmrep.upoly import UPoly, cyclotomic_poly


def test_one_row_per_catalog_entry():
    rows = load_reference()
    assert len(rows) == 27
    assert [r["lattice"] for r in rows] == [s.id for s in catalog()]
    for row, spec in zip(rows, catalog()):
        assert row["compact"] == spec.compact
        assert row["type"] == spec.type


def test_every_polynomial_parses_and_is_irreducible():
    for row in load_reference():
        bold = 0
        for c in row["cells"]:
            bold += c["bold"]
            if c["poly"] is None:
                continue
            poly = UPoly(c["poly"])
            assert poly.degree >= 1
            facs = factor_rational(poly)
            assert len(facs) == 1 and facs[0][1] == 1, \
                (row["lattice"], poly.to_text())
        assert bold == 1


def test_factors_column_only_on_noncompact_rows():
    for row in load_reference():
        has = any(c["factors"] is not None for c in row["cells"])
        assert has == (not row["compact"])


def test_recognize_cyclotomic():
    assert recognize_cyclotomic((1, 1, 1)) == 3            # Phi_3
    assert recognize_cyclotomic((1, -1, 1)) == 3           # Phi_6 -> 3
    assert recognize_cyclotomic((1, 0, 1)) == 4
    assert recognize_cyclotomic((1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0,
                                 1)) == 36
    assert recognize_cyclotomic((1, 0, 0, 1, 0, 0, 1)) == 9        # Phi_9
    assert recognize_cyclotomic((1, 0, 0, -1, 0, 0, 1)) == 9       # Phi_18
    assert recognize_cyclotomic((3, 0, 1)) is None
    # x^18 - x^6 + 1 (a printed field) is not any Phi_n
    coeffs = [0] * 19
    coeffs[0], coeffs[6], coeffs[18] = 1, -1, 1
    assert recognize_cyclotomic(tuple(coeffs)) is None


def test_canonical_conductor():
    assert canonical_conductor(6) == 3
    assert canonical_conductor(18) == 9
    assert canonical_conductor(12) == 12
    assert canonical_conductor(7) == 7


def test_field_keys():
    assert field_key_from_coeffs(None) == ("cyc", 1)
    assert field_key_from_coeffs((1, -1, 1)) == ("cyc", 3)
    assert field_key_from_coeffs((3, 0, 1)) == ("poly", (3, 0, 1))


def test_known_rows():
    r = reference_row("t3-p7-k2")
    assert (r["total"], r["galois_orbits"]) == (18, 2)
    assert [cell_degree(c) for c in r["cells"]] == [12, 6]
    assert r["cells"][0]["bold"]
    assert row_consistency(r)["total_consistent"]

    r = reference_row("t2-p6-k4")
    assert (r["total"], r["galois_orbits"]) == (46, 9)
    assert [c["factors"] for c in r["cells"]] == [1, 2, 1, 2, 2]
    assert row_consistency(r)["total_consistent"]

    r = reference_row("t4-p8-k3")
    assert (r["total"], r["galois_orbits"]) == (46, 5)
    assert r["cells"][-1]["reducible"] == [0, 2]

    with pytest.raises(KeyError):
        reference_row("t9-p9-k9")


def test_internal_consistency_audit():
    # the printed Totals disagree with their own cells on exactly these
    # rows; Galois-orbit counts are consistent everywhere
    bad = [r["lattice"] for r in load_reference()
           if not row_consistency(r)["total_consistent"]]
    assert bad == ["t2-p3-k9", "t2-p4-k5", "t2-p4-k6", "t2-p5-k5",
                   "t3-p12-k2", "t4-p7-k3", "t4-p8-k3", "t4-p9-k3",
                   "t4-p10-k3", "t4-p10-k5", "t4-p18-k3"]
    for r in load_reference():
        assert row_consistency(r)["orbits_consistent"], r["lattice"]


def test_bold_fields_are_mostly_cyclotomic():
    keys = {}
    for row in load_reference():
        for c in row["cells"]:
            if c["bold"]:
                coeffs = tuple(c["poly"]) if c["poly"] else None
                keys[row["lattice"]] = field_key_from_coeffs(coeffs)
    assert keys["t3-p7-k2"] == ("cyc", 21)
    assert keys["t3-p10-k2"] == ("cyc", 15)
    assert keys["t3-p18-k2"] == ("cyc", 27)
    assert keys["t2-p6-k4"] == ("cyc", 36)
    # the lone non-cyclotomic printed field
    noncyc = [k for k in keys.values() if k[0] == "poly"]
    assert len(noncyc) == 1 and keys["t2-p3-k9"] == noncyc[0]
