"""Solving one lattice exactly and certifying what comes out.

solve_lattice returns exact solution points: number-field elements, not
floats.  certify rebuilds the matrices and re-checks every defining
relation; the classifier predicates (irreducibility, configuration
class, Hermitian signatures) all run on certificates, never on raw
points.
"""

from dmrep.classify import (burnside_dimension, certify, configuration_class,
                            hermitian_signature, irreducibility)
from dmrep.lattices import lattice_by_id
from dmrep.nfield import complex_embeddings
from dmrep.variety import solve_lattice

spec = lattice_by_id("t3-p10-k2")
solution = solve_lattice(spec, seed=0)
print("%s: %d Galois orbits, %d representations"
      % (spec.id, len(solution.points), solution.total))

for pt in solution.points:
    print("\norbit on branch %s, degree %d" % (pt.branch.key, pt.degree))
    print("  field modulus:", pt.field.modulus.to_text())
    cert = certify(pt, spec)          # raises if any relation fails
    dim = burnside_dimension(cert)
    verdict, witness = irreducibility(cert)
    print("  Burnside span dimension %d -> %s" % (dim, verdict))
    if witness:
        print("  witness: invariant", witness["kind"])
    print("  configuration:", configuration_class(cert))
    if verdict == "irreducible":
        sigs = [hermitian_signature(cert, emb)
                for emb in complex_embeddings(pt.field)]
        print("  Hermitian signatures across embeddings:", sigs)

# the boldface orbit of this lattice is the degree-8 one over Q(zeta_15):
# it carries a (2,1) form at an embedding sending eta to exp(2 pi i/10)
