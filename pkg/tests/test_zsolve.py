import random

import pytest

from dmrep.errors import MultiplePointError, ShapePositionError
from dmrep.exactnum import Rational
from dmrep.groebner import buchberger
from dmrep.mpoly import GREVLEX, LEX, PolyRing
from dmrep.upoly import UPoly, cyclotomic_poly
from dmrep.zsolve import Component, eliminant, solve_zero_dim


def gb_of(gens, order=GREVLEX):
    return buchberger(gens, order)


def test_eliminant_examples():
    r = PolyRing(["x"])
    x, = r.gens()
    assert eliminant(gb_of([x - 2]), x) == UPoly.from_text("x - 2")
    assert eliminant(gb_of([x * x - 2]), x) == UPoly.from_text("x^2 - 2")

    r2 = PolyRing(["x", "y"], LEX)
    x, y = r2.gens()
    gb = gb_of([x * x - 1, x * y - 1], LEX)
    # form x + 2y on points (1,1), (-1,-1) takes values 3, -3
    assert eliminant(gb, x + 2 * y) == UPoly.from_text("x^2 - 9")


def test_solve_single_variable():
    r = PolyRing(["x"])
    x, = r.gens()
    comps = solve_zero_dim(gb_of([x * x - 2]), random.Random(1))
    assert len(comps) == 1
    c = comps[0]
    assert c.field.modulus == UPoly.from_text("x^2 - 2")
    assert c.coords[0] == c.field.gen()
    assert c.multiplicity == 1

    comps = solve_zero_dim(gb_of([x * x + x + 1]), random.Random(1))
    assert len(comps) == 1
    assert comps[0].field.modulus == cyclotomic_poly(3)


def test_solve_two_rational_points():
    r = PolyRing(["x", "y"])
    x, y = r.gens()
    comps = solve_zero_dim(gb_of([x * x - 1, x * y - 1]), random.Random(2))
    assert len(comps) == 2
    pts = set()
    for c in comps:
        assert c.degree == 1
        pts.add((c.coords[0].rational_value(), c.coords[1].rational_value()))
    assert pts == {(1, 1), (-1, -1)}


def test_solve_mixed_degrees():
    # (x^2 - 2)(x - 3) = 0, y = x^2: components of degree 2 and 1
    r = PolyRing(["x", "y"])
    x, y = r.gens()
    gens = [(x * x - 2) * (x - 3), y - x * x]
    comps = solve_zero_dim(gb_of(gens), random.Random(3))
    assert sorted(c.degree for c in comps) == [1, 2]
    for c in comps:
        if c.degree == 1:
            assert c.coords[0].rational_value() == 3
            assert c.coords[1].rational_value() == 9
        else:
            assert c.coords[0].min_poly() == UPoly.from_text("x^2 - 2")
            assert c.coords[1] == 2


def test_solve_galois_orbit_stays_whole():
    # x^4 - 2 is irreducible: one component of degree 4
    r = PolyRing(["x"])
    x, = r.gens()
    comps = solve_zero_dim(gb_of([x ** 4 - 2]), random.Random(4))
    assert len(comps) == 1 and comps[0].degree == 4


def test_multiple_point_detected():
    r = PolyRing(["x", "y"])
    x, y = r.gens()
    with pytest.raises(MultiplePointError):
        solve_zero_dim(gb_of([x * x, y - 1]), random.Random(5))


def test_empty_and_nonzero_dimensional():
    r = PolyRing(["x", "y"])
    x, y = r.gens()
    assert solve_zero_dim(gb_of([x, x - 1]), random.Random(6)) == []
    with pytest.raises(ValueError):
        solve_zero_dim(gb_of([x - y]), random.Random(7))


def test_verification_by_substitution():
    # random small radical systems: all components substitute to zero
    rng = random.Random(8)
    r = PolyRing(["x", "y"])
    x, y = r.gens()
    for a in (2, 3, 5):
        gens = [x * x - a, y * y - x - 1]
        comps = solve_zero_dim(gb_of(gens), rng)
        total = sum(c.degree for c in comps)
        assert total == 4
        for c in comps:
            for g in gens:
                v = g.evaluate(c.coords)
                assert (v == 0) if isinstance(v, Rational) else v.is_zero()


def test_determinism_same_seed():
    r = PolyRing(["x", "y"])
    x, y = r.gens()
    gens = [x * x - 5, y * y - x]
    a = solve_zero_dim(gb_of(gens), random.Random(9))
    b = solve_zero_dim(gb_of(gens), random.Random(9))
    assert [c.field.modulus for c in a] == [c.field.modulus for c in b]
    assert all(ca.coords == cb.coords for ca, cb in zip(a, b))
