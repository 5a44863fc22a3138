"""Exact scalars and univariate polynomials: the arithmetic floor.

Everything downstream — Groebner bases, number fields, the classification
itself — runs on exact rationals.  This script shows the primitives:
Rational, UPoly, cyclotomic polynomials, and factorization over Q.
"""

from dmrep.exactnum import Rational, divisors, totient
from dmrep.ufactor import factor_rational
from dmrep.upoly import UPoly, cyclotomic_poly

# rationals never round: 1/3 + 1/6 is exactly 1/2
a = Rational(1, 3) + Rational(1, 6)
print("1/3 + 1/6 =", a)

# the lattice parameter arithmetic is the same machinery;
# for the (6,4) lattice, 1/l = 1/2 - 1/6 - 1/4 gives l = 12
inv_l = Rational(1, 2) - Rational(1, 6) - Rational(1, 4)
print("1/l for (p,k)=(6,4):", inv_l, "-> l =", 1 / inv_l)

# polynomials are coefficient lists, printed like you would write them
f = UPoly.from_text("x^4 - 1")
g = UPoly.from_text("x^2 + 3 x + 2")
print("\nf =", f.to_text(), "   g =", g.to_text())
print("f * g =", (f * g).to_text())

# cyclotomic polynomials drive the eta branches: Phi_q for every q | p
print("\ncyclotomics for p = 12:")
for q in divisors(12):
    print("  Phi_%-2d = %s   (degree %d)" % (q, cyclotomic_poly(q).to_text(),
                                             totient(q)))

# exact factorization over Q; multiplicities included
h = f * f * g
print("\nfactoring", h.to_text())
for factor, mult in factor_rational(h):
    print("  (%s)^%d" % (factor.to_text(), mult))

# the reducible-vs-irreducible distinction the tables rely on is this exact
print("\nx^2 - x + 1 irreducible?",
      len(factor_rational(UPoly.from_text("x^2 - x + 1"))) == 1)
