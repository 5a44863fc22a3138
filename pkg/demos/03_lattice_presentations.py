"""The lattice catalog: presentations, relator words, and branch layout.

Each (p,k) pair names a lattice generated by an order-3 element J and a
complex reflection R1 of angle 2 pi / p, subject to power relations on a
handful of words.  The catalog fixes all 27 rows; enumerate_branches
lists the finitely many gauge branches each one solves over.
"""

from dmrep.lattices import ball_tuple, catalog, lattice_by_id
from dmrep.variety import enumerate_branches

rows = catalog()
print("catalog: %d lattices" % len(rows))
for s in rows:
    print("  %-11s type %d  p=%-2d k=%-2d  l=%-4s d=%-4s %s"
          % (s.id, s.type, s.p, s.k, s.l, s.d,
             "compact" if s.compact else "noncompact"))

# the defining data of one lattice
spec = lattice_by_id("t3-p7-k2")
print("\n%s relation words (word^N scalar):" % spec.id)
for word, n in spec.relation_words():
    print("   (%s)^%d" % (word.to_text(), n))

# the ball 5-tuple behind the construction; entries sum to exactly 2
print("ball tuple:", [str(m) for m in ball_tuple(spec.p, spec.k)])

# branches: one eta order per divisor of p, crossed with support strata
print("\nbranches of %s:" % spec.id)
for b in enumerate_branches(spec):
    print("  %-14s eta order %d, stratum %-4s covers %s"
          % (b.key, b.eta_order, b.stratum, ",".join(b.covers)))
