"""Branch enumeration and exact solving of the sliced representation variety.

J is frozen as the cyclic shift matrix and R1 = I + v w^T ranges over
complex reflections (plus the identity image).  The centralizer of J is
the torus of circulant matrices, diagonal in the eigenbasis
f_j = (1, omega^j, omega^2j); it acts on v by scaling its discrete-Fourier
coordinates, so a branch fixes

  * the order p' | p of the special eigenvalue eta (Phi_p'(eta) = 0),
  * the DFT support pattern of v with an exact representative,
  * a {zero, unit} normalization for each residual-torus-scalable DFT
    coordinate of w.

The projective centralizer of J also contains an order-3 rotation
(c J c^-1 = omega J) that cyclically shifts the DFT indices, so only the
three strata with rational representatives are essential: full support
(v = (1,1,0)), S={0} (v = (1,1,1)) and S={1,2} (v = (2,-1,-1)); the other
four supports hold rotated copies of the same representations and are not
enumerated.  The one genuinely irrational normalization — exactly one of
the two free DFT coordinates of w vanishing, inside S={0} — is solved as
a single rational system with omega adjoined (omega^2+omega+1 = 0): its
ideal contains both members of every omega-conjugate pair of
representations, so totals need no closure step; `galois_close` certifies
that bookkeeping.

Relation words are imposed cheapest-first; each scalar condition is
reduced against the Groebner basis accumulated so far and the basis is
only recomputed when a word adds a new constraint.
"""

import random
from dataclasses import dataclass

import mpmath

from .budget import UNLIMITED
from .errors import (CertificationError, MultiplePointError,
                     PositiveDimensionalError)
from .exactnum import divisors, next_prime
from .groebner import (buchberger, is_zero_dimensional, normal_form,
                       quotient_basis, quotient_dim_mod_q)
from .lattices import Word, word_big
from .mpoly import GREVLEX, PolyRing
from .nfield import NumberField, complex_embeddings
from .upoly import cyclotomic_poly, x_poly
from .zsolve import solve_zero_dim

__all__ = ["Branch", "SolutionPoint", "BranchResult", "LatticeSolution",
           "strata", "reflection_branches", "enumerate_branches",
           "build_ideal", "make_context", "word_matrix", "scalar_equations",
           "solve_branch", "solve_lattice", "galois_close",
           "dedupe_conjugates", "fingerprint_words", "ff_crosscheck"]

ZERO, UNIT = "zero", "unit"

# stratum -> (support, DFT indices of w normalized by the residual torus)
_STRATA = {
    "full": ((0, 1, 2), ()),
    "s0":   ((0,),      (1, 2)),
    "s1":   ((1,),      (0, 2)),
    "s2":   ((2,),      (0, 1)),
    "s01":  ((0, 1),    (2,)),
    "s02":  ((0, 2),    (1,)),
    "s12":  ((1, 2),    (0,)),
}
_ROTATION_CLASS = {"s1": "s0", "s2": "s0", "s01": "s12", "s02": "s12"}


def _v_vector(stratum, one, omega):
    """Exact stratum representative of v; `one` fixes the coefficient
    domain (MPoly constant or NFElement), omega a cube root when needed."""
    if stratum == "full":
        return (one, one, 0 * one)
    if stratum == "s0":
        return (one, one, one)
    if stratum == "s12":
        return (2 * one, -one, -one)
    if stratum == "s1":
        return (one, omega, omega * omega)
    if stratum == "s2":
        return (one, omega * omega, omega)
    if stratum == "s01":
        return (2 * one, one + omega, one + omega * omega)
    if stratum == "s02":
        return (2 * one, one + omega * omega, one + omega)
    raise ValueError("unknown stratum %r" % stratum)


def strata():
    """The 7 support patterns with exact representatives in terms of the
    eigenvectors f_j = (1, omega^j, omega^2j) of J.  Only the three with
    `equivalent_to` None are solved; the rest are their images under the
    rotation part of the projective centralizer of J."""
    reps = {
        "full": "(1, 1, 0)", "s0": "f0 = (1, 1, 1)",
        "s1": "f1 = (1, w, w^2)", "s2": "f2 = (1, w^2, w)",
        "s01": "f0 + f1", "s02": "f0 + f2", "s12": "f1 + f2 = (2, -1, -1)",
    }
    out = []
    for name in ("full", "s0", "s1", "s2", "s01", "s02", "s12"):
        support, free = _STRATA[name]
        out.append({
            "name": name,
            "support": support,
            "representative": reps[name],
            "needs_omega": name in ("s1", "s2", "s01", "s02"),
            "free_w_indices": free,
            "residual_torus_dim": 3 - len(support),
            "equivalent_to": _ROTATION_CLASS.get(name),
        })
    return out


@dataclass(frozen=True)
class Branch:
    """One solvable system: eta order, v stratum, w normalization flags."""
    eta_order: int
    stratum: str                 # "full","s0","s12","s1","s01" or "id"
    support: tuple = ()
    sub_branch: tuple = ()       # ((dft_index, "zero"|"unit"), ...)
    needs_omega: bool = False
    covers: tuple = ()           # descriptors incl. the mirror systems

    @property
    def key(self):
        if self.stratum == "id":
            return "eta1-id"
        s = "eta%d-%s" % (self.eta_order, self.stratum)
        if self.sub_branch:
            s += "-" + "".join(f[0] for _, f in self.sub_branch)
        return s

    def __str__(self):
        return self.key


def reflection_branches(p):
    """One skeleton per divisor p' of p: (p', Phi_p' or None for p'=1)."""
    return [(q, cyclotomic_poly(q) if q > 1 else None) for q in divisors(p)]


def _flag_desc(stratum, sub_branch):
    return "%s[%s]" % (stratum, "".join(f[0] for _, f in sub_branch))


def enumerate_branches(spec):
    """All branches of a lattice: the identity branch, then for each eta
    order the 6 systems over the rational-representative strata.  The
    s0-uz system adjoins omega and covers the zu flag pattern too (the
    two patterns are swapped by omega -> omega^2, not by any gauge)."""
    out = []
    for q in divisors(spec.p):
        if q == 1:
            out.append(Branch(1, "id", covers=("id",)))
            continue
        def add(stratum, flags, needs_omega, mirror=None):
            sub = tuple(flags)
            covers = [_flag_desc(stratum, sub)]
            if mirror:
                covers.append(mirror)
            out.append(Branch(q, stratum, _STRATA[stratum][0], sub,
                              needs_omega, tuple(covers)))
        add("full", (), False)
        add("s0", ((1, ZERO), (2, ZERO)), False)
        add("s0", ((1, UNIT), (2, UNIT)), False)
        add("s0", ((1, UNIT), (2, ZERO)), True, _flag_desc("s0", ((1, ZERO), (2, UNIT))))
        add("s12", ((0, ZERO),), False)
        add("s12", ((0, UNIT),), False)
    return out


def _upoly_in(up, x):
    out = 0 * x
    for i in range(up.degree, -1, -1):
        out = out * x + up[i]
    return out


@dataclass
class BranchContext:
    """Everything needed to evaluate words on a branch."""
    branch: Branch
    ring: PolyRing
    w: tuple                  # the three w generators
    eta: object
    omega: object             # generator or None
    v: tuple
    basis: list               # current reduction basis (Groebner generators)
    budget: object = UNLIMITED

    def dft(self, j):
        """w0 + omega^j w1 + omega^2j w2."""
        w0, w1, w2 = self.w
        if j == 0:
            return w0 + w1 + w2
        om = self.omega
        if j == 1:
            return w0 + om * w1 + om * om * w2
        return w0 + om * om * w1 + om * w2


def make_context(spec, branch, basis=None, budget=UNLIMITED):
    if branch.stratum == "id":
        raise ValueError("identity branch has no polynomial system")
    names = ["w0", "w1", "w2", "eta"]
    if branch.needs_omega:
        names.append("omega")
    ring = PolyRing(names, GREVLEX)
    gens = ring.gens()
    w, eta = tuple(gens[:3]), gens[3]
    omega = gens[4] if branch.needs_omega else None
    v = _v_vector(branch.stratum, ring.one(), omega)
    ctx = BranchContext(branch, ring, w, eta, omega, v,
                        [] if basis is None else list(basis), budget)
    if basis is None:
        ctx.basis = _structure_generators(ctx)
    return ctx


def _structure_generators(ctx):
    """Reflection structure + normalizations: the pre-relation ideal."""
    br, w, eta = ctx.branch, ctx.w, ctx.eta
    lin = sum((ctx.v[i] * w[i] for i in range(3)), ctx.ring.zero()) - (eta - 1)
    gens = [lin, _upoly_in(cyclotomic_poly(br.eta_order), eta)]
    if ctx.omega is not None:
        gens.append(ctx.omega * ctx.omega + ctx.omega + 1)
    flags = dict(br.sub_branch)
    if br.needs_omega:
        for j, f in br.sub_branch:
            gens.append(ctx.dft(j) - (1 if f == UNIT else 0))
    elif br.stratum == "s0":
        # rational forms: dft(1)+dft(2) = 2w0-w1-w2, dft(1)-dft(2) ~ w1-w2
        c = 1 if flags[1] == UNIT else 0
        w0, w1, w2 = w
        gens.append(2 * w0 - w1 - w2 - 2 * c)
        gens.append(w1 - w2)
    elif br.stratum == "s12":
        gens.append(ctx.dft(0) - (1 if flags[0] == UNIT else 0))
    return gens


def _mat_identity(ring):
    one, zero = ring.one(), ring.zero()
    return [[one if i == j else zero for j in range(3)] for i in range(3)]


def _mat_mul(ctx, A, B):
    ctx.budget.tick(1, checkpoint=ctx.branch.key)
    C = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            s = ctx.ring.zero()
            for k in range(3):
                s = s + A[i][k] * B[k][j]
            C[i][j] = normal_form(s, ctx.basis, ctx.ring.order)
    return C


def _j_matrix(ring, e):
    one, zero = ring.one(), ring.zero()
    J = [[zero, zero, one], [one, zero, zero], [zero, one, zero]]
    M = _mat_identity(ring)
    for _ in range(e % 3):
        M = [[sum((J[i][k] * M[k][j] for k in range(3)), zero)
              for j in range(3)] for i in range(3)]
    return M


def _r1_power(ctx, e):
    """R1^e = I + s_e v w^T with s_e = 1 + eta + ... + eta^(e-1)."""
    s, t = ctx.ring.zero(), ctx.ring.one()
    for _ in range(e):
        s = s + t
        t = t * ctx.eta
    s = normal_form(s, ctx.basis, ctx.ring.order)
    M = _mat_identity(ctx.ring)
    for i in range(3):
        for j in range(3):
            M[i][j] = normal_form(M[i][j] + s * ctx.v[i] * ctx.w[j],
                                  ctx.basis, ctx.ring.order)
    return M


def word_matrix(word, ctx, power=1):
    """Exact matrix of word^power, entries in normal form against
    ctx.basis after every multiplication; high powers by binary powering."""
    letters = word.instantiate(ctx.branch.eta_order) if isinstance(word, Word) else word
    M = _mat_identity(ctx.ring)
    for g, e in letters:
        S = _r1_power(ctx, e) if g == "R1" else _j_matrix(ctx.ring, e)
        M = _mat_mul(ctx, M, S)
    out = _mat_identity(ctx.ring)
    n = power
    while n:
        if n & 1:
            out = _mat_mul(ctx, out, M)
        n >>= 1
        if n:
            M = _mat_mul(ctx, M, M)
    return out


def scalar_equations(M):
    """The 8 entrywise conditions for M to be a scalar matrix."""
    eqs = [M[i][j] for i in range(3) for j in range(3) if i != j]
    eqs.append(M[0][0] - M[1][1])
    eqs.append(M[1][1] - M[2][2])
    return eqs


def _is_unit_ideal(gb):
    g = gb.generators
    return len(g) == 1 and g[0].leading(gb.order)[0] == (0,) * len(gb.ring.names)


def _identity_branch_admissible(spec):
    if spec.k % 3 != 0:
        return False
    if spec.type in (2, 4) and spec.l % 3 != 0:
        return False
    return True


def _run_branch(spec, branch, budget):
    """Shared driver: incremental Groebner over the relation words, in
    increasing order of evaluation cost.  Returns (ctx, generators, gb,
    word_log); gb is None once the ideal is revealed to be the unit ideal."""
    ctx = make_context(spec, branch, budget=budget)
    gens = list(ctx.basis)
    gb = buchberger(gens, ctx.ring.order, budget=budget)
    word_log = []
    if _is_unit_ideal(gb):
        return ctx, gens, None, word_log
    ctx.basis = gb.generators
    words = [(w.instantiate(spec.p), n, w) for w, n in spec.relation_words()]
    words.sort(key=lambda t: t[1] * len(t[0]))
    for letters, n, word in words:
        M = word_matrix(letters, ctx, power=n)
        eqs = [normal_form(e, ctx.basis, ctx.ring.order)
               for e in scalar_equations(M)]
        gens.extend(eqs)
        fresh = [e for e in eqs if not e.is_zero()]
        word_log.append({"word": word.to_text(), "power": n,
                         "new_conditions": len(fresh)})
        if fresh:
            gb = buchberger(gb.generators + fresh, ctx.ring.order, budget=budget)
            if _is_unit_ideal(gb):
                return ctx, gens, None, word_log
            ctx.basis = gb.generators
    return ctx, gens, gb, word_log


def build_ideal(spec, branch, budget=UNLIMITED):
    """Full generator list for the branch ideal: reflection structure,
    normalizations, then the 8 scalar conditions per relation word
    (listed in processing order; later generators are reduced modulo the
    ideal of the earlier ones, so implied conditions appear as 0)."""
    if branch.stratum == "id":
        return []
    _, gens, _, _ = _run_branch(spec, branch, budget)
    return gens


@dataclass
class SolutionPoint:
    """One Galois orbit of representations (an irreducible component of a
    branch ideal; `degree` counts its members)."""
    field: NumberField
    coords: dict                 # ring variable name -> NFElement
    branch: Branch
    multiplicity: int = 1

    @property
    def degree(self):
        return self.field.degree

    def w_values(self):
        return tuple(self.coords[n] for n in ("w0", "w1", "w2"))

    def eta_value(self):
        return self.coords.get("eta")

    def omega_value(self):
        return self.coords.get("omega")

    def w_sum(self):
        """DFT coordinate 0 of w (rational in the w's)."""
        w0, w1, w2 = self.w_values()
        return w0 + w1 + w2

    def w_cross(self):
        """Product of DFT coordinates 1 and 2 of w (always rational)."""
        w0, w1, w2 = self.w_values()
        return (w0 * w0 + w1 * w1 + w2 * w2
                - w0 * w1 - w0 * w2 - w1 * w2)

    def matrices(self):
        """(J, R1) as 3x3 matrices over self.field."""
        K = self.field
        one, zero = K.one(), K.zero()
        J = [[zero, zero, one], [one, zero, zero], [zero, one, zero]]
        R1 = [[one if i == j else zero for j in range(3)] for i in range(3)]
        if self.branch.stratum != "id":
            v = _v_vector(self.branch.stratum, one, self.omega_value())
            w = self.w_values()
            for i in range(3):
                for j in range(3):
                    R1[i][j] = R1[i][j] + v[i] * w[j]
        return J, R1


@dataclass
class BranchResult:
    branch: Branch
    points: list
    evidence: dict

    @property
    def empty(self):
        return not self.points

    @property
    def total(self):
        return sum(pt.degree for pt in self.points)


def solve_branch(spec, branch, rng=None, budget=UNLIMITED):
    """Solve one branch exactly.  Empty result for the unit ideal; a
    positive-dimensional ideal raises (it would falsify local rigidity),
    as does a non-squarefree eliminant via MultiplePointError."""
    rng = rng or random.Random(0)
    if branch.stratum == "id":
        ok = _identity_branch_admissible(spec)
        points = []
        if ok:
            K = NumberField(x_poly(0, 1), check=False)
            points = [SolutionPoint(K, {}, branch)]
        return BranchResult(branch, points, {
            "zero_dimensional": True, "eliminant_squarefree": True,
            "unit_ideal": not ok, "quotient_dim": 1 if ok else 0,
            "words": []})
    ctx, gens, gb, word_log = _run_branch(spec, branch, budget)
    if gb is None:
        return BranchResult(branch, [], {
            "zero_dimensional": True, "eliminant_squarefree": True,
            "unit_ideal": True, "quotient_dim": 0, "words": word_log})
    if not is_zero_dimensional(gb):
        raise PositiveDimensionalError(
            "branch %s of %s is positive-dimensional: local rigidity fails "
            "there (leading monomials %s)"
            % (branch.key, spec.id, gb.leading_monomials()))
    dim = len(quotient_basis(gb))
    try:
        comps = solve_zero_dim(gb, rng)
    except MultiplePointError as e:
        raise MultiplePointError(
            "branch %s of %s: %s (a multiple point falsifies local rigidity)"
            % (branch.key, spec.id, e)) from e
    points = [SolutionPoint(c.field,
                            dict(zip(ctx.ring.names, c.coords)),
                            branch, c.multiplicity)
              for c in comps]
    if sum(pt.degree for pt in points) != dim:
        raise CertificationError(
            "branch %s of %s: component degrees sum to %d but the quotient "
            "has dimension %d"
            % (branch.key, spec.id, sum(p.degree for p in points), dim))
    return BranchResult(branch, points, {
        "zero_dimensional": True, "eliminant_squarefree": True,
        "unit_ideal": False, "quotient_dim": dim, "words": word_log})


@dataclass
class LatticeSolution:
    spec: object
    results: list

    @property
    def points(self):
        return [pt for r in self.results for pt in r.points]

    @property
    def total(self):
        return sum(pt.degree for pt in self.points)

    @property
    def orbits(self):
        return len(self.points)


def solve_lattice(spec, seed=0, budget=UNLIMITED, branch_filter=None):
    """Solve every branch; per-branch RNG is derived from (seed, branch
    key) so results are independent of solve order."""
    results = []
    for branch in enumerate_branches(spec):
        if branch_filter and not branch_filter(branch):
            continue
        rng = random.Random("%s:%s" % (seed, branch.key))
        results.append(solve_branch(spec, branch, rng, budget))
    return galois_close(LatticeSolution(spec, results))


def galois_close(solution):
    """Certify the omega-pairing bookkeeping: every point of an
    omega-adjoined branch must have even degree (its Galois orbit is
    swapped between the paired strata by omega -> omega^2, fixed-point
    free), with omega exactly a primitive cube root.  Points of rational
    branches are Galois-stable as orbits already.  Returns the solution."""
    for res in solution.results:
        for pt in res.points:
            if not pt.branch.needs_omega:
                continue
            om = pt.omega_value()
            if om is None or (om * om + om + 1) != pt.field.zero():
                raise CertificationError(
                    "branch %s: omega coordinate is not a primitive cube "
                    "root" % pt.branch.key)
            if pt.degree % 2 != 0:
                raise CertificationError(
                    "branch %s: odd-degree orbit %d cannot cover the "
                    "conjugate stratum pair" % (pt.branch.key, pt.degree))
    return solution


def fingerprint_words():
    """The fixed 8-word list for conjugacy fingerprints: J R1, R1 J^2 and
    the even-syllable prefixes of the long relator (the 4-syllable prefix
    is P)."""
    words = [Word([("J", 1), ("R1", 1)]), Word([("R1", 1), ("J", 2)])]
    big = word_big()
    for n in (2, 4, 6, 8, 10, 12):
        words.append(Word(big.letters[:n]))
    return words


def _field_mat_mul(A, B, zero):
    return [[sum((A[i][k] * B[k][j] for k in range(3)), zero)
             for j in range(3)] for i in range(3)]


def word_value(spec, point, word):
    """Exact matrix of the word at the point, over point.field."""
    K = point.field
    J, R1 = point.matrices()
    zero = K.zero()
    powers = {1: R1}
    M = [[K.one() if i == j else zero for j in range(3)] for i in range(3)]
    for g, e in word.instantiate(spec.p):
        if g == "J":
            S = J if e == 1 else _field_mat_mul(J, J, zero)
        else:
            if e not in powers:
                S = R1
                for _ in range(e - 1):
                    S = _field_mat_mul(S, R1, zero)
                powers[e] = S
            S = powers[e]
        M = _field_mat_mul(M, S, zero)
    return M


def _trace(M):
    return M[0][0] + M[1][1] + M[2][2]


def _locate_root(value, embs):
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps + 8)
    hits = [e.index for e in embs if abs(value - e.root) <= max(e.radius * 8, eps)]
    return hits[0] if len(hits) == 1 else None


def _point_fingerprints(spec, pt, words, dps):
    traces = [_trace(word_value(spec, pt, wd)) for wd in words]
    keyed = [(t, t.min_poly().content_primitive()[1]) for t in traces]
    for attempt in range(3):
        cur = dps * (2 ** attempt)
        with mpmath.workdps(cur):
            field_embs = complex_embeddings(pt.field, dps=cur)
            trace_embs = [complex_embeddings(NumberField(mp, check=False), dps=cur)
                          for _, mp in keyed]
            out = []
            for emb in field_embs:
                fp = []
                for (t, mp), tembs in zip(keyed, trace_embs):
                    idx = _locate_root(t.embed(emb.root), tembs)
                    if idx is None:
                        fp = None
                        break
                    fp.append((tuple(mp.int_coeffs()), idx))
                if fp is None:
                    break
                out.append((emb.index, tuple(fp)))
            if len(out) == pt.degree:
                return out
    raise CertificationError("fingerprint root separation failed "
                             "(branch %s)" % pt.branch.key)


def dedupe_conjugates(spec, points, dps=30):
    """Conjugacy fingerprints, one per representation (per embedding of
    each orbit): the ordered trace minimal polynomials of the fixed word
    list, refined by which certified root each embedded trace sits on.

    Returns (records, collisions); records are (point_index,
    embedding_index, fingerprint); collisions groups records sharing a
    fingerprint — flagged for inspection, never merged silently."""
    words = fingerprint_words()
    records = []
    for pi, pt in enumerate(points):
        for ei, fp in _point_fingerprints(spec, pt, words, dps):
            records.append((pi, ei, fp))
    groups = {}
    for pi, ei, fp in records:
        groups.setdefault(fp, []).append((pi, ei))
    collisions = [g for g in groups.values() if len(g) > 1]
    return records, collisions


def ff_crosscheck(generators, expected_dim, order=None, want=2,
                  start=32003, max_tries=10, budget=UNLIMITED):
    """Certify the characteristic-0 quotient dimension against counts of
    the same ideal over F_q for `want` good primes.  A bad prime (where
    the dimension differs — specialization can only grow it) is skipped;
    too few good primes raises."""
    q = start - 1
    checks, misses = [], []
    for _ in range(max_tries):
        q = next_prime(q)
        dim_q = quotient_dim_mod_q(generators, q, order, budget=budget)
        if dim_q == expected_dim:
            checks.append((q, dim_q))
            if len(checks) >= want:
                return checks
        else:
            misses.append((q, dim_q))
    raise CertificationError(
        "finite-field crosscheck: expected dimension %d, matched only %s "
        "(mismatches: %s)" % (expected_dim, checks, misses))
