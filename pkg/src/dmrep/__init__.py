"""Exact classification of type-preserving representations of
Deligne-Mostow lattices with 3-fold symmetry into PGL(3,C).

Layer map, bottom up:

  exactnum   integers/rationals, elementary number theory
  upoly      dense univariate polynomials over Q, cyclotomics
  ufactor    univariate factorization over Q (Zassenhaus)
  mpoly      multivariate polynomials, monomial orders
  groebner   Buchberger, staircases, finite-field mirror
  nfield     number fields, certified complex embeddings
  zsolve     zero-dimensional solving (eliminants, components)
  lattices   presentation data: parameters, words, catalog
  variety    representation-variety ideals and their solutions
  classify   certificates, irreducibility, signatures, table rows
  reference  embedded copies of the published tables
  report     serialization, rendering, comparison
  cache      on-disk memo of solved branches
  cli        command-line front end
"""

__version__ = "0.1.0"
