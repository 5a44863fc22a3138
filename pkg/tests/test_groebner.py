import random

import pytest

from dmrep.budget import Budget
from dmrep.errors import BudgetExceeded
from dmrep.exactnum import Rational
from dmrep.groebner import (buchberger, is_zero_dimensional, normal_form,
                            quotient_basis, quotient_dim_mod_q)
from dmrep.mpoly import GREVLEX, LEX, PolyRing


def test_normal_form_examples():
    r = PolyRing(["x", "y"], LEX)
    x, y = r.gens()
    assert normal_form(x * x + 1, [x], LEX) == r.one()
    assert normal_form(x * y - 1, [x - y], LEX) == y * y - 1
    assert normal_form(r.zero(), [x], LEX).is_zero()


def test_normal_form_rational_scales():
    r = PolyRing(["x", "y"], LEX)
    x, y = r.gens()
    f = Rational(3, 2) * x * y - Rational(1, 2)
    nf = normal_form(f, [x - y], LEX)
    assert nf == Rational(3, 2) * y * y - Rational(1, 2)


def test_buchberger_examples():
    r = PolyRing(["x", "y"], LEX)
    x, y = r.gens()
    gb = buchberger([x * x - 1, x * y - 1], LEX)
    assert [g.to_text() for g in gb.generators] == ["x - y", "y^2 - 1"]

    gb = buchberger([x, y], LEX)
    assert [g.to_text() for g in gb.generators] == ["x", "y"]

    gb = buchberger([x - 1, x - 2], LEX)
    assert [g.to_text() for g in gb.generators] == ["1"]


def test_zero_dimensional_and_staircase():
    r = PolyRing(["x", "y"], LEX)
    x, y = r.gens()
    gb = buchberger([x, y], LEX)
    assert is_zero_dimensional(gb)
    assert quotient_basis(gb) == [(0, 0)]

    gb = buchberger([x - y], LEX)
    assert not is_zero_dimensional(gb)
    with pytest.raises(ValueError):
        quotient_basis(gb)

    gb = buchberger([x * x - 1, x * y - 1], LEX)
    assert is_zero_dimensional(gb)
    assert quotient_basis(gb) == [(0, 0), (0, 1)]

    gb = buchberger([x ** 2, y ** 3], LEX)
    assert len(quotient_basis(gb)) == 6


def rand_poly(ring, rng, nterms=4, maxe=2):
    out = ring.zero()
    for _ in range(rng.randrange(1, nterms + 1)):
        m = tuple(rng.randrange(maxe + 1) for _ in range(ring.n))
        out = out + ring.monomial(m, rng.randrange(-5, 6))
    return out


def test_order_canonical_and_membership_fuzz():
    # permuting input generators yields the identical reduced basis, and
    # normal_form flags exactly the ideal members
    rng = random.Random(29)
    for trial in range(20):
        nv = rng.randrange(2, 4)
        r = PolyRing(["x%d" % i for i in range(nv)], GREVLEX)
        gens = [rand_poly(r, rng) for _ in range(rng.randrange(2, 4))]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb1 = buchberger(gens, GREVLEX)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        gb2 = buchberger(shuffled, GREVLEX)
        assert gb1.generators == gb2.generators, "trial %d" % trial
        # random combination of generators is in the ideal
        combo = r.zero()
        for g in gens:
            combo = combo + rand_poly(r, rng, 3, 1) * g
        assert normal_form(combo, gb1.generators, GREVLEX).is_zero()
        # S-polynomial reduction: every pair of basis elements reduces to 0
        for i in range(len(gb1.generators)):
            for j in range(i + 1, len(gb1.generators)):
                gi, gj = gb1.generators[i], gb1.generators[j]
                from dmrep.mpoly import mono_div, mono_lcm
                mi, _ = gi.leading(GREVLEX)
                mj, _ = gj.leading(GREVLEX)
                L = mono_lcm(mi, mj)
                s = (r.monomial(mono_div(L, mi)) * gi
                     - r.monomial(mono_div(L, mj)) * gj)
                assert normal_form(s, gb1.generators, GREVLEX).is_zero()


def test_reduced_basis_properties():
    r = PolyRing(["x", "y", "z"], GREVLEX)
    x, y, z = r.gens()
    gb = buchberger([x * y - z, y * z - x, z * x - y], GREVLEX)
    lts = gb.leading_monomials()
    for i, g in enumerate(gb.generators):
        assert g.leading(GREVLEX)[1] == 1  # monic
        for m in g.terms:
            for j, lt in enumerate(lts):
                if i != j:
                    from dmrep.mpoly import mono_divides
                    assert not mono_divides(lt, m)


def test_quotient_dim_mod_q_matches_char0():
    r = PolyRing(["x", "y"], GREVLEX)
    x, y = r.gens()
    gens = [x * x - 1, x * y - 1]
    gb = buchberger(gens, GREVLEX)
    d0 = len(quotient_basis(gb))
    for q in (32003, 32009):
        assert quotient_dim_mod_q(gens, q, GREVLEX) == d0


def test_budget_trips():
    r = PolyRing(["x", "y", "z"], GREVLEX)
    x, y, z = r.gens()
    gens = [x + y + z, x * y + y * z + z * x, x * y * z - 1]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, GREVLEX, budget=Budget(max_steps=3))


def test_unit_ideal_quotient():
    r = PolyRing(["x"], GREVLEX)
    x, = r.gens()
    gb = buchberger([x, x - 1], GREVLEX)
    assert is_zero_dimensional(gb)
    assert quotient_basis(gb) == []
    assert quotient_dim_mod_q([x, x - 1], 32003) == 0
