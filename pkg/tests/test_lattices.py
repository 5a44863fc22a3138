import random

import pytest

from dmrep.exactnum import Rational
from dmrep.lattices import (Word, ball_tuple, catalog, derive_d, derive_l,
                            lattice_by_id, parse_id, word_P, word_big)


def test_derive_l_examples():
    assert derive_l(6, 4) == 12
    assert derive_l(3, 8) == 24
    assert derive_l(5, 5) == 10


def test_derive_d_examples():
    assert derive_d(7) == 14
    assert derive_d(8) == 8
    assert derive_d(12) == 4


def test_derive_rejects_bad_parameters():
    with pytest.raises(ValueError):
        derive_l(7, 2)   # 1/2 - 1/7 - 1/2 < 0
    with pytest.raises(ValueError):
        derive_d(6)      # 1/2 - 3/6 = 0
    with pytest.raises(ValueError):
        derive_l(5, 7)   # 1/2 - 1/5 - 1/7 = 11/70, not a unit fraction


def test_ball_tuple_example():
    t = ball_tuple(7, 2)
    assert t == (Rational(5, 14), Rational(5, 14), Rational(5, 14),
                 Rational(1, 7), Rational(11, 14))
    assert sum(t) == 2


def test_ball_tuple_whole_catalog():
    for spec in catalog():
        t = spec.ball_tuple()
        assert sum(t) == 2
        assert all(0 < m < 1 for m in t)


def test_catalog_shape():
    cat = catalog()
    assert len(cat) == 27
    assert len({spec.id for spec in cat}) == 27
    by_type = {}
    for spec in cat:
        by_type.setdefault(spec.type, []).append(spec)
    assert len(by_type[2]) == 12
    assert len(by_type[3]) == 6
    assert len(by_type[4]) == 9
    noncompact = [spec.pk for spec in cat if not spec.compact]
    assert noncompact == [(6, 4), (6, 6)]


def test_catalog_parameters():
    spec = parse_id("t3-p7-k2")
    assert spec.type == 3 and spec.d == 14 and spec.l is None
    spec = parse_id("t2-p6-k6")
    assert spec.l == 6 and spec.d is None and not spec.compact
    spec = parse_id("t4-p12-k6")
    assert spec.l == 4 and spec.d == 4
    with pytest.raises(ValueError):
        parse_id("t9-p7")
    with pytest.raises(ValueError):
        parse_id("t3-p6-k2")  # d undefined for p=6


def test_word_canonicalization():
    w = Word([("J", 2), ("J", 1), ("R1", 1), ("R1", -1), ("J", 4)])
    assert w.letters == (("J", 1),)
    w = Word([("R1", 3), ("J", 3), ("R1", 2)])
    assert w.letters == (("R1", 5),)
    assert (word_P() ** 2).syllables() == 8


def test_word_instantiate():
    w = Word([("R1", -1), ("J", 1)])
    assert w.instantiate(7) == (("R1", 6), ("J", 1))
    assert w.instantiate(3) == (("R1", 2), ("J", 1))
    w = Word([("R1", 7), ("J", 1)])
    assert w.instantiate(7) == (("J", 1),)


def test_big_word_exponent_sums():
    # the long relator lies in the kernel of both abelianized coordinates:
    # J-exponents sum to 0 mod 3 and R1-exponents to 0 mod p
    w = word_big()
    jsum = sum(e for g, e in w.letters if g == "J")
    assert jsum % 3 == 0
    for p in (3, 5, 7, 12):
        rsum = sum(e for g, e in w.instantiate(p) if g == "R1")
        assert rsum % p == 0
    assert w.syllables() == 12


def test_relation_words_by_type():
    rels = parse_id("t3-p7-k2").relation_words()
    assert [(w.to_text(), n) for w, n in rels] == [
        ("R1 J", 4),
        ("R1 J R1 J^2", 42),
        ("R1 J R1 J^2 R1 J R1^-1 J^2 R1^-1 J R1^-1 J^2", 1),
    ]
    rels = parse_id("t2-p6-k4").relation_words()
    assert [(w.to_text(), n) for w, n in rels] == [
        ("R1 J", 8),
        ("R1 J^2", 24),
        ("R1 J R1 J^2 R1 J R1^-1 J^2 R1^-1 J R1^-1 J^2", 1),
    ]
    rels = parse_id("t4-p8-k3").relation_words()
    assert [(w.to_text(), n) for w, n in rels] == [
        ("R1 J", 6),
        ("R1 J^2", 48),
        ("R1 J R1 J^2", 24),
        ("R1 J R1 J^2 R1 J R1^-1 J^2 R1^-1 J R1^-1 J^2", 1),
    ]


def test_word_algebra_random(seed=0):
    rng = random.Random(seed)
    for _ in range(40):
        letters = [(rng.choice(["J", "R1"]), rng.randint(-3, 3))
                   for _ in range(rng.randint(0, 8))]
        w = Word(letters)
        # canonical: no zero exponents, no adjacent repeats, J exps in {1,2}
        for i, (g, e) in enumerate(w.letters):
            assert e != 0
            if g == "J":
                assert e in (1, 2)
            if i:
                assert w.letters[i - 1][0] != g
        # multiplying by the formal inverse of the tail shortens the word
        assert (w * Word([])) == w


def test_lattice_by_id_alias():
    assert lattice_by_id("t3-p7-k2") == parse_id("t3-p7-k2")
