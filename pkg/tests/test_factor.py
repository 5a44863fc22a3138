import random

from dmrep.exactnum import Rational
from dmrep.ufactor import factor_rational, gf_factor_sqf, zassenhaus
from dmrep.upoly import UPoly, cyclotomic_poly


def test_spec_examples():
    fs = factor_rational(UPoly.from_text("x^4 - 1"))
    assert [(g.to_text(), m) for g, m in fs] == [("x - 1", 1), ("x + 1", 1), ("x^2 + 1", 1)]

    fs = factor_rational(UPoly.from_text("x^12 - x^6 + 1"))
    assert len(fs) == 1 and fs[0][1] == 1
    assert fs[0][0] == cyclotomic_poly(36)

    fs = factor_rational(UPoly.from_text("x^6 - 1"))
    assert sorted(g.to_text() for g, _ in fs) == sorted(
        ["x - 1", "x + 1", "x^2 + x + 1", "x^2 - x + 1"])


def test_multiplicities():
    f = UPoly.from_text("x - 1") ** 2 * UPoly.from_text("x^2 + 1") ** 3
    fs = factor_rational(f)
    assert sorted((g.to_text(), m) for g, m in fs) == [("x - 1", 2), ("x^2 + 1", 3)]


def test_reconstruction_identity_fuzz():
    # product of the returned factors (with multiplicity) matches the monic
    # part of the input, on >= 50 random products
    rng = random.Random(42)
    pool = [
        UPoly.from_text("x - 1"), UPoly.from_text("x + 1"),
        UPoly.from_text("x + 3"), UPoly.from_text("2*x + 1"),
        UPoly.from_text("x^2 + 1"), UPoly.from_text("x^2 - 2"),
        UPoly.from_text("x^2 + x + 1"), UPoly.from_text("x^3 - x - 1"),
        UPoly.from_text("x^4 - x^2 + 1"), UPoly.from_text("x^2 - x + 1"),
    ]
    for trial in range(55):
        f = UPoly([Rational(rng.randrange(1, 7))])
        nfac = rng.randrange(1, 5)
        for _ in range(nfac):
            f = f * pool[rng.randrange(len(pool))] ** rng.randrange(1, 3)
        fs = factor_rational(f)
        prod = UPoly([1])
        for g, m in fs:
            assert g.is_monic()
            # irreducibility spot-check: factoring a factor returns itself
            assert factor_rational(g) == [(g, 1)]
            prod = prod * g ** m
        assert prod == f.monic(), "trial %d: %s" % (trial, f.to_text())


def test_cyclotomics_factor_irreducible():
    for n in (7, 9, 12, 21, 27, 36):
        phi = cyclotomic_poly(n)
        assert factor_rational(phi) == [(phi, 1)]


def test_xn_minus_1_factors_into_cyclotomics():
    from dmrep.exactnum import divisors
    for n in (6, 10, 12, 21):
        f = UPoly([-1] + [0] * (n - 1) + [1])
        fs = factor_rational(f)
        assert sorted(g.to_text() for g, _ in fs) == sorted(
            cyclotomic_poly(d).to_text() for d in divisors(n))


def test_zassenhaus_large_coefficients():
    # forces a real Hensel lift (several digits of precision needed)
    f = UPoly.from_text("x^4 - 10000*x^2 + 1") * UPoly.from_text("x^2 - 99991")
    fs = factor_rational(f)
    prod = UPoly([1])
    for g, m in fs:
        prod = prod * g ** m
    assert prod == f.monic()
    assert sorted(g.degree for g, _ in fs) == [2, 4]


def test_gf_factor_sqf_reconstructs():
    rng = random.Random(13)
    for q in (5, 13, 32003):
        for _ in range(10):
            coeffs = [rng.randrange(q) for _ in range(rng.randrange(2, 7))] + [1]
            from dmrep.ufactor import gf_is_squarefree, gf_mul, _trim
            f = _trim(coeffs)
            if len(f) < 2 or not gf_is_squarefree(f, q):
                continue
            facs = gf_factor_sqf(f, q)
            prod = [1]
            for g in facs:
                assert g[-1] == 1
                prod = gf_mul(prod, g, q)
            assert prod == f


def test_determinism():
    f = UPoly([-1] + [0] * 35 + [1])  # x^36 - 1
    assert factor_rational(f) == factor_rational(f)
    assert zassenhaus([-1, 0, 0, 0, 0, 0, 1]) == zassenhaus([-1, 0, 0, 0, 0, 0, 1])
