"""Presentation data for the lattice families.

Each lattice is addressed by (type, p, k).  The generators are an order-3
regular element J and an order-p complex reflection R1; the relation words
common to all types are (R1 J)^{2k} and the long word

    W = R1 J R1 J^2 R1 J R1^{p-1} J^2 R1^{p-1} J R1^{p-1} J^2 ,

with (R1 J^2)^{2l} added for types 2 and 4 and (R1 J R1 J^2)^{3d} for
types 3 and 4, where 1/l = 1/2 - 1/p - 1/k and 1/d = 1/2 - 3/p.  Every
relation is imposed as "evaluates to a scalar matrix".
"""

from dataclasses import dataclass
from typing import Optional

from .exactnum import Rational

__all__ = ["Word", "LatticeSpec", "derive_l", "derive_d", "ball_tuple",
           "word_P", "word_big", "catalog", "parse_id", "lattice_by_id"]


class Word:
    """Product of powers of the two generators, e.g. R1 J R1^-1 J^2.

    Letters are (gen, exp) with gen in {"J", "R1"} and nonzero integer exp;
    adjacent letters always carry distinct generators (canonical form).
    Negative R1 exponents stay symbolic until a concrete p is bound
    (R1^-1 = R1^(p-1) in the image); J exponents are reduced mod 3.
    """

    __slots__ = ("letters",)

    def __init__(self, letters):
        out = []
        for gen, exp in letters:
            if gen not in ("J", "R1"):
                raise ValueError("unknown generator %r" % gen)
            if gen == "J":
                exp %= 3
            if exp == 0:
                continue
            if out and out[-1][0] == gen:
                exp += out.pop()[1]
                if gen == "J":
                    exp %= 3
                if exp == 0:
                    continue
            out.append((gen, exp))
        self.letters = tuple(out)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative word power")
        return Word(self.letters * n)

    def instantiate(self, p):
        """Letters with R1 exponents normalized into [1, p-1]."""
        out = []
        for gen, exp in self.letters:
            if gen == "R1":
                exp %= p
                if exp == 0:
                    continue
            out.append((gen, exp))
        return tuple(out)

    def syllables(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def to_text(self):
        if not self.letters:
            return "1"
        parts = []
        for gen, exp in self.letters:
            parts.append(gen if exp == 1 else "%s^%d" % (gen, exp))
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return "Word(%s)" % self.to_text()


def word_P():
    """P = R1 (J R1 J^2), the base of the order-3d relator."""
    return Word([("R1", 1), ("J", 1), ("R1", 1), ("J", 2)])


def word_big():
    """The long relator word, R1 exponent -1 standing for p-1."""
    return Word([("R1", 1), ("J", 1), ("R1", 1), ("J", 2), ("R1", 1), ("J", 1),
                 ("R1", -1), ("J", 2), ("R1", -1), ("J", 1), ("R1", -1), ("J", 2)])


def derive_l(p, k):
    """l with 1/l = 1/2 - 1/p - 1/k."""
    inv = Rational(1, 2) - Rational(1, p) - Rational(1, k)
    if inv <= 0 or inv.numerator != 1:
        raise ValueError("(%d,%d) is not a type two/four lattice parameter "
                         "(1/2 - 1/p - 1/k = %s)" % (p, k, inv))
    return inv.denominator


def derive_d(p):
    """d with 1/d = 1/2 - 3/p."""
    inv = Rational(1, 2) - Rational(3, p)
    if inv <= 0 or inv.numerator != 1:
        raise ValueError("p=%d is not a type three/four lattice parameter "
                         "(1/2 - 3/p = %s)" % (p, inv))
    return inv.denominator


def ball_tuple(p, k):
    """(1/2-1/p, 1/2-1/p, 1/2-1/p, 1/2+1/p-1/k, 2/p+1/k); entries must lie
    in (0,1) and the sum is always exactly 2."""
    mu = [Rational(1, 2) - Rational(1, p)] * 3
    mu.append(Rational(1, 2) + Rational(1, p) - Rational(1, k))
    mu.append(Rational(2, p) + Rational(1, k))
    for m in mu:
        if not (0 < m < 1):
            raise ValueError("(%d,%d) is not a ball 5-tuple: entry %s" % (p, k, m))
    assert sum(mu) == 2
    return tuple(mu)


@dataclass(frozen=True)
class LatticeSpec:
    type: int
    p: int
    k: int
    l: Optional[int] = None
    d: Optional[int] = None
    compact: bool = True

    @property
    def id(self):
        return "t%d-p%d-k%d" % (self.type, self.p, self.k)

    @property
    def pk(self):
        return (self.p, self.k)

    def relation_words(self):
        """[(word, N), ...] meaning word^N must be scalar.  J^3 and R1^p
        hold structurally and are not listed."""
        out = [(Word([("R1", 1), ("J", 1)]), 2 * self.k)]
        if self.type in (2, 4):
            out.append((Word([("R1", 1), ("J", 2)]), 2 * self.l))
        if self.type in (3, 4):
            out.append((word_P(), 3 * self.d))
        out.append((word_big(), 1))
        return out

    def ball_tuple(self):
        return ball_tuple(self.p, self.k)

    def __str__(self):
        return self.id


def make_spec(type_, p, k, compact=True):
    l = derive_l(p, k) if type_ in (2, 4) else None
    d = derive_d(p) if type_ in (3, 4) else None
    return LatticeSpec(type=type_, p=p, k=k, l=l, d=d, compact=compact)


# (p,k) headers of the published tables, in table order
_TYPE2_NONCOMPACT = [(6, 4), (6, 6)]
_TYPE2_COMPACT = [(3, 7), (3, 8), (3, 9), (3, 10), (3, 12),
                  (4, 5), (4, 6), (4, 8), (5, 4), (5, 5)]
_TYPE3 = [(7, 2), (8, 2), (9, 2), (10, 2), (12, 2), (18, 2)]
_TYPE4 = [(7, 3), (8, 3), (8, 4), (9, 3), (10, 3), (10, 5), (12, 3),
          (12, 6), (18, 3)]


def catalog():
    """The tabulated lattices, in table order."""
    out = []
    for p, k in _TYPE2_NONCOMPACT:
        out.append(make_spec(2, p, k, compact=False))
    for p, k in _TYPE2_COMPACT:
        out.append(make_spec(2, p, k))
    for p, k in _TYPE3:
        out.append(make_spec(3, p, k))
    for p, k in _TYPE4:
        out.append(make_spec(4, p, k))
    return out


def parse_id(s):
    """'t3-p7-k2' -> LatticeSpec.  Catalog entries keep their table
    metadata; anything else is built on the fly when the parameters are
    consistent with the requested type."""
    try:
        tpart, ppart, kpart = s.split("-")
        assert tpart[0] == "t" and ppart[0] == "p" and kpart[0] == "k"
        t, p, k = int(tpart[1:]), int(ppart[1:]), int(kpart[1:])
    except (ValueError, AssertionError):
        raise ValueError("bad lattice id %r (want e.g. 't3-p7-k2')" % s)
    for spec in catalog():
        if (spec.type, spec.p, spec.k) == (t, p, k):
            return spec
    return make_spec(t, p, k)


def lattice_by_id(s):
    return parse_id(s)
