"""Zero-dimensional solving: eliminants, shape position, exact components.

A solved ideal decomposes into Galois-irreducible components.  Each
component is a NumberField (one irreducible factor of a shape-position
eliminant) plus exact NFElement coordinates for every ring variable,
obtained by back-substitution through the multiplication matrix of the
separating form.  Every component is re-verified by substitution into the
basis generators before it is returned.
"""

import random
from dataclasses import dataclass

from .errors import CertificationError, MultiplePointError, ShapePositionError
from .exactnum import Rational
from .groebner import is_zero_dimensional, normal_form, quotient_basis
from .mpoly import MPoly
from .nfield import NumberField
from .ufactor import factor_rational
from .upoly import UPoly, squarefree_part

__all__ = ["Component", "eliminant", "multiplication_matrix", "solve_zero_dim"]

SHAPE_ATTEMPTS = 8


@dataclass
class Component:
    """One Galois orbit of solution points."""
    field: NumberField
    coords: list              # NFElement per ring variable
    multiplicity: int = 1

    @property
    def degree(self):
        return self.field.degree


def _nf_vector(gb, f, index, D):
    """Coordinates of the residue of f in the quotient basis."""
    r = normal_form(f, gb.generators, gb.order)
    vec = [Rational(0)] * D
    for m, c in r.terms.items():
        vec[index[m]] = c
    return vec


def multiplication_matrix(gb, f):
    """Columns of the 'multiply by f' operator on the quotient algebra,
    in the staircase-monomial basis (ascending).  Returns (cols, basis)."""
    qb = quotient_basis(gb)
    D = len(qb)
    index = {m: i for i, m in enumerate(qb)}
    ring = gb.ring
    cols = []
    for m in qb:
        cols.append(_nf_vector(gb, f * ring.monomial(m), index, D))
    return cols, qb


def _apply(cols, v):
    D = len(v)
    out = [Rational(0)] * D
    for j, c in enumerate(v):
        if c:
            col = cols[j]
            for i in range(D):
                if col[i]:
                    out[i] += c * col[i]
    return out


def _krylov_minpoly(cols, v0, cap):
    """Monic minimal polynomial of the form on the cyclic subspace of v0,
    together with the Krylov vectors v0, Mv0, ... (one per degree)."""
    rows = {}  # pivot -> (vector, combo)
    vecs = []
    cur = v0
    k = 0
    while k <= cap:
        vec = list(cur)
        combo = [Rational(0)] * k + [Rational(1)]
        for piv in sorted(rows):
            if vec[piv]:
                rvec, rcombo = rows[piv]
                f = vec[piv] / rvec[piv]
                vec = [a - f * b for a, b in zip(vec, rvec)]
                for i, c in enumerate(rcombo):
                    combo[i] -= f * c
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            return UPoly(combo), vecs
        rows[piv] = (vec, combo)
        vecs.append(cur)
        cur = _apply(cols, cur)
        k += 1
    raise AssertionError("Krylov sequence exceeded the quotient dimension")


def eliminant(gb, form):
    """Monic minimal polynomial of the linear form in the quotient ring."""
    if not is_zero_dimensional(gb):
        raise ValueError("eliminant: ideal is not zero-dimensional")
    qb = quotient_basis(gb)
    D = len(qb)
    if D == 0:
        raise ValueError("eliminant: unit ideal")
    index = {m: i for i, m in enumerate(qb)}
    cols, _ = multiplication_matrix(gb, form)
    v0 = _nf_vector(gb, gb.ring.one(), index, D)
    q, _ = _krylov_minpoly(cols, v0, D)
    return q


def _solve_linear(vecs, rhs_list):
    """Solve V a = u for each u in rhs_list, V having columns vecs."""
    D = len(vecs)
    # build augmented rows: D x (D + len(rhs))
    rows = [[vecs[j][i] for j in range(D)] + [u[i] for u in rhs_list]
            for i in range(len(vecs[0]))]
    piv_cols = []
    r = 0
    for c in range(D):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            raise AssertionError("Krylov vectors not independent")
        rows[r], rows[sel] = rows[sel], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        rows[r] = pr = [x * inv for x in pr]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        piv_cols.append(c)
        r += 1
    sols = []
    for t in range(len(rhs_list)):
        sols.append([rows[j][D + t] for j in range(D)])
    return sols


def solve_zero_dim(gb, rng=None, attempts=SHAPE_ATTEMPTS):
    """Decompose the zero-dimensional ideal into Galois-irreducible
    components (shape lemma route).  Deterministic given rng's seed."""
    if not is_zero_dimensional(gb):
        raise ValueError("solve_zero_dim: ideal is not zero-dimensional")
    qb = quotient_basis(gb)
    D = len(qb)
    if D == 0:
        return []
    rng = rng or random.Random(0)
    ring = gb.ring
    index = {m: i for i, m in enumerate(qb)}
    v0 = _nf_vector(gb, ring.one(), index, D)

    gens_vars = ring.gens()
    saw_nonsquarefree = None
    chosen = None
    # try bare variables first (gives the natural field presentation when a
    # single coordinate already separates), then random forms
    candidate_forms = list(gens_vars)
    for _ in range(attempts):
        coeffs = [rng.randint(-20, 20) for _ in range(ring.n)]
        if not any(coeffs):
            coeffs[rng.randrange(ring.n)] = 1
        form = ring.zero()
        for c, v in zip(coeffs, gens_vars):
            form = form + c * v
        candidate_forms.append(form)
    for form in candidate_forms:
        cols, _ = multiplication_matrix(gb, form)
        q, vecs = _krylov_minpoly(cols, v0, D)
        if squarefree_part(q) != q.monic():
            saw_nonsquarefree = q
            continue
        if q.degree == D:
            chosen = (form, q, vecs)
            break
    if chosen is None:
        if saw_nonsquarefree is not None:
            raise MultiplePointError(
                "eliminant %s is not squarefree: the ideal has a point of "
                "multiplicity > 1" % saw_nonsquarefree.to_text())
        diags = {}
        for i, xv in enumerate(gens_vars):
            qi = eliminant(gb, xv)
            diags[ring.names[i]] = qi.to_text()
        err = ShapePositionError(
            "no separating linear form found in %d attempts "
            "(per-variable eliminants: %s); orbit merge needed" % (attempts, diags))
        err.per_variable_eliminants = diags
        raise err

    form, q, vecs = chosen
    # coordinates of each variable in the quotient basis
    rhs = [_nf_vector(gb, xv, index, D) for xv in gens_vars]
    coord_polys = _solve_linear(vecs, rhs)   # x_i = sum_k a[k] * form^k

    comps = []
    for m, mult in factor_rational(q):
        assert mult == 1  # squarefree by construction
        K = NumberField(m, check=False)
        theta = K.gen()
        coords = []
        for a in coord_polys:
            coords.append(K.element(UPoly(a) % m))
        # exact re-verification against the reduced basis
        for g in gb.generators:
            val = g.evaluate(coords)
            if not (val == 0 if not hasattr(val, "is_zero") else val.is_zero()):
                raise CertificationError(
                    "component coordinates fail generator %s" % g.to_text())
        comps.append(Component(field=K, coords=coords, multiplicity=1))
    comps.sort(key=lambda c: (c.degree, tuple(c.field.modulus.coeffs)))
    return comps
