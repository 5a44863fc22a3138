"""Buchberger's algorithm, reduced Groebner bases, staircase combinatorics.

Internal arithmetic works on primitive integer term dicts {monomial: int}
(content stripped periodically) so that Fraction gcd overhead never enters
the inner reduction loops; the public API speaks MPoly over Q.  A parallel
GF(q) implementation backs the finite-field crosschecks.
"""

from dataclasses import dataclass, field
from math import gcd, lcm

from . import budget as _budget
from .exactnum import Rational, inv_mod
from .mpoly import MPoly, mono_div, mono_divides, mono_lcm, mono_mul

__all__ = [
    "GroebnerBasis", "normal_form", "buchberger",
    "is_zero_dimensional", "quotient_basis", "quotient_dim_mod_q",
]


# -- integer term-dict helpers ----------------------------------------------

def _to_int_poly(f):
    """MPoly over Q -> primitive integer dict (content and sign stripped:
    leading sign kept as-is, content 1)."""
    den = 1
    for c in f.terms.values():
        den = lcm(den, c.denominator)
    d = {m: c.numerator * (den // c.denominator) for m, c in f.terms.items()}
    return _strip_content(d)


def _strip_content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
    if g > 1:
        return {m: c // g for m, c in d.items()}
    return d


def _int_nf(f, basis_lt, basis_poly, order, budget=None):
    """Normal form of the integer dict f against basis polys (integer dicts
    with cached leading data).  Returns (remainder dict, denominator int):
    remainder/denominator is the exact normal form over Q."""
    work = dict(f)
    rem = {}
    den = 1
    key = order.key
    steps = 0
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for i, (ltm, ltc) in enumerate(basis_lt):
            if mono_divides(ltm, m):
                hit = i
                break
        if hit is None:
            rem[m] = c
            continue
        ltm, ltc = basis_lt[hit]
        shift = mono_div(m, ltm)
        g = gcd(c, ltc)
        a, b = abs(ltc) // g, c // g if ltc > 0 else -(c // g)
        # scale everything so the leading terms cancel exactly in Z
        if a != 1:
            for k in work:
                work[k] *= a
            for k in rem:
                rem[k] *= a
            den *= a
        for mg, cg in basis_poly[hit].items():
            if mg == ltm:
                continue
            mm = mono_mul(mg, shift)
            s = work.get(mm, 0) - b * cg
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
        steps += 1
        if budget is not None:
            budget.tick(checkpoint={"phase": "reduce"})
        if steps % 64 == 0 and den > 1:
            g = den
            for c2 in work.values():
                g = gcd(g, c2)
            for c2 in rem.values():
                g = gcd(g, c2)
            if g > 1:
                work = {k: v // g for k, v in work.items()}
                rem = {k: v // g for k, v in rem.items()}
                den //= g
    g = den
    for c2 in rem.values():
        g = gcd(g, c2)
    if g > 1:
        rem = {k: v // g for k, v in rem.items()}
        den //= g
    return rem, den


def _int_spoly(fi, fj, lti, ltj):
    (mi, ci), (mj, cj) = lti, ltj
    L = mono_lcm(mi, mj)
    si, sj = mono_div(L, mi), mono_div(L, mj)
    g = gcd(ci, cj)
    ai, aj = cj // g, ci // g
    out = {}
    for m, c in fi.items():
        out[mono_mul(m, si)] = ai * c
    for m, c in fj.items():
        mm = mono_mul(m, sj)
        s = out.get(mm, 0) - aj * c
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return _strip_content(out)


# -- public API ---------------------------------------------------------------

@dataclass
class GroebnerBasis:
    ring: object
    order: object
    generators: list          # reduced, monic, sorted leading-first
    input_generators: list = field(default_factory=list, repr=False)

    def leading_monomials(self):
        return [g.leading(self.order)[0] for g in self.generators]

    def contains(self, f):
        return normal_form(f, self.generators, self.order).is_zero()


def normal_form(f, basis, order=None):
    """Remainder of f on multivariate division by basis (any generating
    list, not necessarily a Groebner basis; remainder then depends on
    basis order, as usual)."""
    basis = [g for g in basis if not g.is_zero()]
    order = order or f.ring.order
    if not basis or f.is_zero():
        return f
    bi = [_to_int_poly(g) for g in basis]
    blt = []
    for d in bi:
        m = max(d, key=order.key)
        blt.append((m, d[m]))
    rem, den = _int_nf(_to_int_poly(f), blt, bi, order)
    # recover the rational scale: _int_nf worked on the primitive part of f
    cont = _content_of(f)
    return MPoly(f.ring, {m: Rational(c, den) * cont for m, c in rem.items()})


def _content_of(f):
    """Positive rational content c with f = c * primitive(f) (sign goes to
    the primitive part, mirroring _to_int_poly)."""
    if f.is_zero():
        return Rational(1)
    den = 1
    for c in f.terms.values():
        den = lcm(den, c.denominator)
    g = 0
    for c in f.terms.values():
        g = gcd(g, c.numerator * (den // c.denominator))
    return Rational(g, den)


def buchberger(generators, order=None, budget=None):
    """Reduced Groebner basis, Buchberger with the lcm-coprime and chain
    criteria.  Output is order-canonical: any generating set of the same
    ideal yields the identical basis."""
    generators = list(generators)
    if not generators:
        raise ValueError("buchberger: need at least one generator")
    ring = generators[0].ring
    order = order or ring.order
    budget = budget or _budget.UNLIMITED

    G, LT = [], []

    def add_poly(d):
        m = max(d, key=order.key)
        if d[m] < 0:
            d = {k: -v for k, v in d.items()}
        G.append(d)
        LT.append((m, d[m]))

    # inter-reduce the inputs once so trivial redundancy doesn't spawn pairs
    for f in generators:
        if f.is_zero():
            continue
        d = _to_int_poly(f)
        r, _ = _int_nf(d, LT, G, order, budget) if G else (d, 1)
        if r:
            add_poly(_strip_content(r))
    if not G:
        raise ValueError("buchberger: all generators are zero")

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_key(ij):
        i, j = ij
        return (order.key(mono_lcm(LT[i][0], LT[j][0])), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        mi, mj = LT[i][0], LT[j][0]
        L = mono_lcm(mi, mj)
        # first criterion: coprime leading monomials
        if L == mono_mul(mi, mj):
            continue
        # chain criterion: some k with lt_k | L and both mixed pairs done
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(LT[k][0], L):
                continue
            if (min(i, k), max(i, k)) not in pairs and \
               (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        budget.tick(checkpoint={
            "phase": "buchberger", "basis": len(G), "pairs": len(pairs)})
        s = _int_spoly(G[i], G[j], LT[i], LT[j])
        if not s:
            continue
        r, _ = _int_nf(s, LT, G, order, budget)
        if r:
            n = len(G)
            add_poly(_strip_content(r))
            pairs.update((t, n) for t in range(n))

    # minimize: scan by ascending LT, drop anything a kept LT divides
    keep = []
    for i in sorted(range(len(G)), key=lambda t: order.key(LT[t][0])):
        if not any(mono_divides(LT[t][0], LT[i][0]) for t in keep):
            keep.append(i)

    # full inter-reduction of the minimal basis
    reduced = []
    for i in keep:
        others_lt = [LT[t] for t in keep if t != i]
        others = [G[t] for t in keep if t != i]
        r, den = _int_nf(G[i], others_lt, others, order)
        # r is nonzero (minimal basis), make monic over Q
        m = max(r, key=order.key)
        lc = Rational(r[m], den)
        reduced.append(MPoly(ring, {k: Rational(v, den) / lc for k, v in r.items()}))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return GroebnerBasis(ring=ring, order=order, generators=reduced,
                         input_generators=generators)


def is_zero_dimensional(gb):
    lts = gb.leading_monomials()
    n = gb.ring.n
    if any(not any(m) for m in lts):  # unit ideal
        return True
    for i in range(n):
        if not any(m[i] and all(e == 0 for j, e in enumerate(m) if j != i)
                   for m in lts):
            return False
    return True


def quotient_basis(gb):
    """Staircase monomials (quotient-ring basis), sorted ascending.  Its
    length is the Qbar-point count with multiplicity."""
    if not is_zero_dimensional(gb):
        raise ValueError("quotient_basis: ideal is not zero-dimensional")
    lts = gb.leading_monomials()
    n = gb.ring.n
    if any(not any(m) for m in lts):
        return []
    bounds = []
    for i in range(n):
        b = min(m[i] for m in lts
                if m[i] and all(e == 0 for j, e in enumerate(m) if j != i))
        bounds.append(b)
    out = []
    stack = [()]
    for i in range(n):
        stack = [m + (e,) for m in stack for e in range(bounds[i])]
    for m in stack:
        if not any(mono_divides(lt, m) for lt in lts):
            out.append(m)
    out.sort(key=gb.order.key)
    return out


# -- GF(q) mirror (finite-field crosscheck) -----------------------------------

def _gf_nf(f, basis_lt, basis, order, q):
    work = dict(f)
    rem = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for i, ltm in enumerate(basis_lt):
            if mono_divides(ltm, m):
                hit = i
                break
        if hit is None:
            rem[m] = c
            continue
        shift = mono_div(m, basis_lt[hit])
        for mg, cg in basis[hit].items():
            if mg == basis_lt[hit]:
                continue
            mm = mono_mul(mg, shift)
            s = (work.get(mm, 0) - c * cg) % q
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return rem


def quotient_dim_mod_q(generators, q, order=None, budget=None):
    """Dimension of the quotient algebra of the ideal reduced mod q
    (None when the reduction is not zero-dimensional).  Raises ValueError
    if q divides a denominator or a needed leading coefficient."""
    generators = [g for g in generators if not g.is_zero()]
    if not generators:
        raise ValueError("no generators")
    ring = generators[0].ring
    order = order or ring.order
    budget = budget or _budget.UNLIMITED

    def to_gf(f):
        out = {}
        for m, c in f.terms.items():
            if c.denominator % q == 0:
                raise ValueError("prime %d divides a denominator" % q)
            v = c.numerator * inv_mod(c.denominator, q) % q
            if v:
                out[m] = v
        return out

    def monic(d):
        m = max(d, key=order.key)
        inv = inv_mod(d[m], q)
        return {k: v * inv % q for k, v in d.items()}, m

    G, LT = [], []
    for f in generators:
        d = to_gf(f)
        if not d:
            continue
        r = _gf_nf(d, LT, G, order, q) if G else d
        if r:
            d2, m = monic(r)
            G.append(d2)
            LT.append(m)
    if not G:
        raise ValueError("ideal reduces to zero mod %d" % q)

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pairs:
        i, j = min(pairs, key=lambda ij: (order.key(mono_lcm(LT[ij[0]], LT[ij[1]])),) + ij)
        pairs.discard((i, j))
        L = mono_lcm(LT[i], LT[j])
        if L == mono_mul(LT[i], LT[j]):
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(LT[k], L):
                continue
            if (min(i, k), max(i, k)) not in pairs and \
               (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        budget.tick(checkpoint={"phase": "buchberger-mod-q", "q": q})
        si, sj = mono_div(L, LT[i]), mono_div(L, LT[j])
        s = {}
        for m, c in G[i].items():
            s[mono_mul(m, si)] = c
        for m, c in G[j].items():
            mm = mono_mul(m, sj)
            v = (s.get(mm, 0) - c) % q
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        r = _gf_nf(s, LT, G, order, q)
        if r:
            n = len(G)
            d2, m = monic(r)
            G.append(d2)
            LT.append(m)
            pairs.update((t, n) for t in range(n))

    n = ring.n
    if any(not any(m) for m in LT):
        return 0
    lts_min = [m for i, m in enumerate(LT)
               if not any(t != i and mono_divides(LT[t], m) for t in range(len(LT)))]
    for i in range(n):
        if not any(m[i] and all(e == 0 for j, e in enumerate(m) if j != i)
                   for m in lts_min):
            return None
    bounds = [min(m[i] for m in lts_min
                  if m[i] and all(e == 0 for j, e in enumerate(m) if j != i))
              for i in range(n)]
    count = 0
    stack = [()]
    for i in range(n):
        stack = [m + (e,) for m in stack for e in range(bounds[i])]
    for m in stack:
        if not any(mono_divides(lt, m) for lt in lts_min):
            count += 1
    return count
