"""Table semantics on top of solved branches: certificates, irreducibility,
configuration class, Hermitian signatures, factor tests and table rows.

A certificate re-verifies every relation by direct matrix arithmetic over
the point's number field, with no Groebner machinery involved, so the
solver and the checker can only agree by being right.  Classification
predicates (Burnside span, DFT nondegeneracy) are rational in the field,
hence automatically constant across a Galois orbit; signatures are the
one genuinely embedding-dependent quantity and are computed numerically
per embedding with certified singular-value gaps.
"""

from dataclasses import dataclass, field as dc_field

import mpmath

from .errors import (BoldfaceAmbiguityError, BudgetExceeded,
                     CertificationError)
from .exactnum import divisors
from .lattices import Word, word_P
from .nfield import Embedding, complex_embeddings, identify_conductor
from .upoly import cyclotomic_poly
from .variety import SolutionPoint

__all__ = ["RepCertificate", "OrbitReport", "TableRow", "certify",
           "irreducibility", "eigenline_oracle", "configuration_class",
           "hermitian_signature", "principal_eta", "factors_test",
           "peripheral_presets", "orbit_assemble", "assemble_row"]


# -- certificates ---------------------------------------------------------------

@dataclass
class RepCertificate:
    """One verified representation: J, R1 over the point's field plus the
    branch/lattice metadata needed to re-run every check."""
    spec: object
    point: SolutionPoint
    field: object
    J: list
    R1: list

    @property
    def branch(self):
        return self.point.branch

    @property
    def lattice_id(self):
        return self.spec.id


def _mat_eq(A, B):
    return all(A[i][j] == B[i][j] for i in range(3) for j in range(3))


def _identity(K):
    one, zero = K.one(), K.zero()
    return [[one if i == j else zero for j in range(3)] for i in range(3)]


def _mat_mul(A, B, zero):
    return [[sum((A[i][k] * B[k][j] for k in range(3)), zero)
             for j in range(3)] for i in range(3)]


def _mat_pow(M, n, K):
    out, base = _identity(K), M
    while n:
        if n & 1:
            out = _mat_mul(out, base, K.zero())
        n >>= 1
        if n:
            base = _mat_mul(base, base, K.zero())
    return out


def _is_scalar(M):
    if any(not M[i][j].is_zero() for i in range(3) for j in range(3) if i != j):
        return False
    return M[0][0] == M[1][1] == M[2][2] and not M[0][0].is_zero()


def word_matrix_over_field(cert, word, power=1):
    """Exact matrix of word^power over cert.field by plain multiplication
    (square-and-multiply for the power, cached R1 powers)."""
    K, zero = cert.field, cert.field.zero()
    letters = word.instantiate(cert.spec.p) if isinstance(word, Word) else word
    powers = {}
    M = _identity(K)
    for g, e in letters:
        if g == "J":
            S = cert.J if e % 3 == 1 else _mat_mul(cert.J, cert.J, zero)
        else:
            if e not in powers:
                powers[e] = _mat_pow(cert.R1, e, K)
            S = powers[e]
        M = _mat_mul(M, S, zero)
    return _mat_pow(M, power, K) if power != 1 else M


def certify(point, spec):
    """Re-verify a solution point from scratch: reflection structure and
    every relation word, by direct exact multiplication.  Raises
    CertificationError on any failure (an invalid point falsifies the
    solver, not the lattice)."""
    K = point.field
    J, R1 = point.matrices()
    cert = RepCertificate(spec, point, K, J, R1)
    ident = _identity(K)
    if not _mat_eq(_mat_pow(J, 3, K), ident):
        raise CertificationError("%s: J^3 is not the identity" % spec.id)
    if point.branch.stratum == "id":
        if not _mat_eq(R1, ident):
            raise CertificationError("%s: identity-branch R1 differs from "
                                     "the identity" % spec.id)
    else:
        eta = point.eta_value()
        q = point.branch.eta_order
        phi = cyclotomic_poly(q)
        acc = K.zero()
        for i in range(phi.degree, -1, -1):
            acc = acc * eta + phi[i]
        if not acc.is_zero() or eta == K.one():
            raise CertificationError(
                "%s: eta is not a primitive root of order %d" % (spec.id, q))
        zero = K.zero()
        A = [[R1[i][j] - (eta if i == j else zero) for j in range(3)]
             for i in range(3)]
        B = [[R1[i][j] - (K.one() if i == j else zero) for j in range(3)]
             for i in range(3)]
        if any(not e.is_zero() for row in _mat_mul(A, B, zero) for e in row):
            raise CertificationError(
                "%s: R1 is not a complex reflection with eigenvalue eta"
                % spec.id)
    for word, n in spec.relation_words():
        M = word_matrix_over_field(cert, word, power=n)
        if not _is_scalar(M):
            raise CertificationError(
                "invalid point for %s: relator %s^%d is not scalar"
                % (spec.id, word.to_text(), n))
    return cert


# -- irreducibility -------------------------------------------------------------

def _reduce_against(vec, pivots):
    for col, row in pivots:
        c = vec[col]
        if not c.is_zero():
            vec = [a - c * b for a, b in zip(vec, row)]
    return vec


def _span_insert(vec, pivots):
    """Gaussian elimination over the field; True if vec enlarged the span."""
    vec = _reduce_against(vec, pivots)
    for col, c in enumerate(vec):
        if not c.is_zero():
            inv = c.inverse()
            pivots.append((col, [a * inv for a in vec]))
            return True
    return False


def burnside_dimension(cert, max_length=9):
    """Dimension of the span of all words in {J, R1} of length at most
    max_length (left-multiplication closure; stabilization certifies the
    full algebra has been reached)."""
    K = cert.field
    pivots = []
    frontier = [_identity(K)]
    _span_insert([frontier[0][i][j] for i in range(3) for j in range(3)],
                 pivots)
    for _ in range(max_length):
        new_frontier = []
        for g in (cert.J, cert.R1):
            for M in frontier:
                P = _mat_mul(g, M, K.zero())
                if _span_insert([P[i][j] for i in range(3) for j in range(3)],
                                pivots):
                    new_frontier.append(P)
        if not new_frontier or len(pivots) == 9:
            break
        frontier = new_frontier
    return len(pivots)


class _OmegaExt:
    """K[x]/(x^2+x+1) as pairs a + b*omega over the field K (a ring; exact
    arithmetic is all the witness check needs)."""

    def __init__(self, K):
        self.K = K

    def lift(self, a):
        return (a, self.K.zero())

    def omega(self, j=1):
        j %= 3
        if j == 0:
            return (self.K.one(), self.K.zero())
        if j == 1:
            return (self.K.zero(), self.K.one())
        return (-self.K.one(), -self.K.one())     # omega^2 = -1 - omega

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def mul(self, x, y):
        return (x[0] * y[0] - x[1] * y[1],
                x[0] * y[1] + x[1] * y[0] - x[1] * y[1])

    def is_zero(self, x):
        return x[0].is_zero() and x[1].is_zero()

    def mat_apply(self, M, vec):
        out = []
        for i in range(3):
            acc = (self.K.zero(), self.K.zero())
            for j in range(3):
                acc = self.add(acc, self.mul(self.lift(M[i][j]), vec[j]))
            out.append(acc)
        return out

    def cross(self, u, v):
        return [self.sub(self.mul(u[1], v[2]), self.mul(u[2], v[1])),
                self.sub(self.mul(u[2], v[0]), self.mul(u[0], v[2])),
                self.sub(self.mul(u[0], v[1]), self.mul(u[1], v[0]))]

    def parallel(self, u, v):
        return all(self.is_zero(c) for c in self.cross(u, v))


def _j_eigenvector(ext, j):
    return [ext.omega(0), ext.omega(j), ext.omega(2 * j)]


def _shared_root(ext, comps):
    """A z in K with z^2+z+1 = 0 at which every component a + b*x of
    comps vanishes, or None.  Only possible when K contains a primitive
    cube root of unity, the case where K[x]/(x^2+x+1) splits and a zero
    cross product in one factor alone is invisible to the ring test."""
    K = ext.K
    z = None
    for a, b in comps:
        if b.is_zero():
            if not a.is_zero():
                return None
        elif z is None:
            z = -(a / b)
    if z is None or not (z * z + z + K.one()).is_zero():
        return None
    for a, b in comps:
        if not (a + b * z).is_zero():
            return None
    return z


def _invariant_witness(cert):
    """A common invariant line or plane, if one exists.  J is regular, so
    invariant lines are its eigenlines f_j = (1, omega^j, omega^2j) and
    invariant planes have the f_j as normals.  Each candidate is checked
    exactly in K[omega]; a zero cross product there certifies both
    conjugate eigenlines at once, and the shared-root fallback catches a
    single invariant eigenline when omega already lies in K."""
    ext = _OmegaExt(cert.field)
    R1t = [[cert.R1[j][i] for j in range(3)] for i in range(3)]
    for j in range(3):
        f = _j_eigenvector(ext, j)
        for M, kind, slot in ((cert.R1, "line", "vector"),
                              (R1t, "plane", "normal")):
            c = ext.cross(ext.mat_apply(M, f), f)
            if all(ext.is_zero(x) for x in c):
                out = {"kind": kind, slot: f}
                out["j" if kind == "line" else "normal_j"] = j
                return out
            z = _shared_root(ext, c)
            if z is not None:
                fz = [(a + b * z, cert.field.zero()) for a, b in f]
                out = {"kind": kind, slot: fz}
                out["j" if kind == "line" else "normal_j"] = j
                return out
    return None


def irreducibility(cert):
    """("irreducible", None) or ("reducible", witness).  Burnside span
    criterion, with the witness produced from J's eigenline structure; a
    reducible verdict without a witness is a hard error (the two
    characterizations are equivalent for a regular J)."""
    dim = burnside_dimension(cert)
    if dim == 9:
        return ("irreducible", None)
    witness = _invariant_witness(cert)
    if witness is None:
        raise CertificationError(
            "%s: Burnside span has dimension %d < 9 but no invariant "
            "eigenline or eigenplane was found" % (cert.lattice_id, dim))
    return ("reducible", witness)


def eigenline_oracle(cert):
    """Independent reducibility oracle: True iff some J-eigenline is
    R1-invariant or some J-eigenplane is R1-invariant."""
    return _invariant_witness(cert) is not None


# -- configuration class --------------------------------------------------------

def configuration_class(cert):
    """"non-degenerate" iff v has full DFT support (the branch stratum)
    and all DFT coordinates of w are nonzero at the point; the latter is
    rational: hat-w_0 = w0+w1+w2 and hat-w_1 * hat-w_2 (the cross form)."""
    pt = cert.point
    if pt.branch.stratum != "full":
        return "degenerate"
    if pt.w_sum().is_zero() or pt.w_cross().is_zero():
        return "degenerate"
    return "non-degenerate"


# -- Hermitian signatures -------------------------------------------------------

def _embed_matrix(M, root):
    return [[M[i][j].embed(root) for j in range(3)] for i in range(3)]


def _num_mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)]

def _conj_transpose(A):
    return [[mpmath.conj(A[j][i]) for j in range(3)] for i in range(3)]


_HERM_INDEX = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]


def _herm_from_coords(x):
    """Hermitian matrix from 9 real coordinates (diagonal, then real and
    imaginary parts of the upper triangle)."""
    H = [[mpmath.mpc(0)] * 3 for _ in range(3)]
    for t in range(3):
        H[t][t] = mpmath.mpc(x[t])
    for t, (i, j) in enumerate(_HERM_INDEX[3:]):
        H[i][j] = mpmath.mpc(x[3 + t], x[6 + t])
        H[j][i] = mpmath.mpc(x[3 + t], -x[6 + t])
    return H


def _herm_coords(M):
    out = [mpmath.re(M[i][i]) for i in range(3)]
    out.extend(mpmath.re(M[i][j]) for i, j in _HERM_INDEX[3:])
    out.extend(mpmath.im(M[i][j]) for i, j in _HERM_INDEX[3:])
    return out


def principal_eta(spec, point, emb, dps=30):
    """True when eta embeds as e^(+-2 pi i / p) — the rotation angle of the
    original complex reflection about its mirror.  (eta is exactly a root
    of unity, so nearest-root matching at working precision is exact.)"""
    p = spec.p
    if point.branch.stratum == "id" or point.branch.eta_order != p:
        return False
    with mpmath.workdps(dps):
        eta = point.eta_value().embed(emb.root)
        m = int(mpmath.nint(mpmath.arg(eta) * p / (2 * mpmath.pi))) % p
        if m not in (1, p - 1):
            return False
        resid = abs(eta - mpmath.exp(2j * mpmath.pi * m / p))
        return resid < mpmath.mpf(10) ** (-dps // 2)


def _polished_root(field, emb, dps):
    """Newton-polish the embedding root to ~dps digits.  The certified
    inclusion disk is tiny relative to the root separation, so the
    iteration cannot drift to a neighboring root; without this, high
    coefficient heights in the coordinates turn exact zeros into
    cancellation noise far above the rank threshold."""
    f, df = field.modulus, field.modulus.derivative()
    with mpmath.workdps(dps + 20):
        z = mpmath.mpc(emb.root)
        target = mpmath.mpf(10) ** (-(dps + 10))
        for _ in range(80):
            step = f.evaluate(z) / df.evaluate(z)
            z = z - step
            if abs(step) < target:
                break
        return Embedding(z, f.degree * abs(f.evaluate(z) / df.evaluate(z)),
                         emb.conj_index, emb.index)


def hermitian_signature(cert, emb, dps=30, _escalations=3):
    """Signature (plus, minus, zero) of the invariant Hermitian form at
    one embedding.  The solution space of g* H g = H for g in {J, R1} is
    required to be exactly 1-dimensional, certified by a singular-value
    gap; an ambiguous rank (or an apparently absent form, which high
    coordinate heights can fake through cancellation) escalates the
    precision with a re-polished root before any hard error.  Signatures
    are canonicalized so plus >= minus (H and -H span the same line)."""
    emb = _polished_root(cert.field, emb, dps)
    with mpmath.workdps(dps):
        gens = [_embed_matrix(cert.J, emb.root),
                _embed_matrix(cert.R1, emb.root)]
        rows = []
        for g in gens:
            gh = _conj_transpose(g)
            cols = []
            for b in range(9):
                x = [mpmath.mpf(1) if t == b else mpmath.mpf(0)
                     for t in range(9)]
                B = _herm_from_coords(x)
                im = _num_mat_mul(gh, _num_mat_mul(B, g))
                D = [[im[i][j] - B[i][j] for j in range(3)] for i in range(3)]
                cols.append(_herm_coords(D))
            for r in range(9):
                rows.append([cols[b][r] for b in range(9)])
        T = mpmath.matrix(rows)
        U, S, V = mpmath.svd_r(T)
        scale = S[0] if S[0] > 0 else mpmath.mpf(1)
        tiny = scale * mpmath.mpf(10) ** (-(3 * dps) // 4)
        solid = scale * mpmath.mpf(10) ** (-dps // 4)
        if S[8] < tiny and S[7] > solid:
            x = [V[8, t] for t in range(9)]
            H = _herm_from_coords(x)
            eigs = mpmath.eighe(mpmath.matrix(H), eigvals_only=True)
            emax = max(abs(e) for e in eigs)
            zero_tol = emax * mpmath.mpf(10) ** (-dps // 3)
            plus = sum(1 for e in eigs if e > zero_tol)
            minus = sum(1 for e in eigs if e < -zero_tol)
            zero = 3 - plus - minus
            if minus > plus:
                plus, minus = minus, plus
            return (plus, minus, zero)
        if _escalations > 0:
            return hermitian_signature(cert, emb, dps=2 * dps,
                                       _escalations=_escalations - 1)
        if S[8] >= tiny:
            raise CertificationError(
                "%s: no invariant Hermitian form at embedding %d "
                "(smallest singular value %s at dps %d)"
                % (cert.lattice_id, emb.index, mpmath.nstr(S[8], 5), dps))
    raise BudgetExceeded(
        "%s: invariant-Hermitian rank is ambiguous at embedding %d even "
        "after precision escalation" % (cert.lattice_id, emb.index),
        checkpoint="hermitian:%s:%d" % (cert.lattice_id, emb.index))


# -- factor tests ---------------------------------------------------------------

def factors_test(cert, peripheral_words):
    """True iff every supplied word evaluates to a scalar matrix (the
    mechanism behind the Factors column; the correct peripheral word is a
    configuration input, see peripheral_presets)."""
    return all(_is_scalar(word_matrix_over_field(cert, w))
               for w in peripheral_words)


def peripheral_presets():
    """Candidate peripheral words: powers of P^-1 J (a centralizer
    element of the cusp group candidate) and R1 J^2."""
    pinv_j = Word([("J", 1), ("R1", -1), ("J", 2), ("R1", -1), ("J", 1)])
    return {
        "pinv-j": [pinv_j],
        "pinv-j-squared": [pinv_j ** 2],
        "pinv-j-cubed": [pinv_j ** 3],
        "r1-j2": [Word([("R1", 1), ("J", 2)])],
    }


# -- orbit reports and table rows -----------------------------------------------

@dataclass
class OrbitReport:
    """One Galois orbit: the solved component plus its table semantics."""
    spec: object
    point: SolutionPoint
    certificate: RepCertificate
    min_poly: object
    orbit_size: int
    cyclotomic_id: object          # conductor n when the field is Q(zeta_n)
    classification: str            # irreducible | reducible-nondegenerate |
                                   # reducible-degenerate
    witness: object
    signatures: object             # per-embedding triples; None if reducible
    complex_hyperbolic: bool       # some embedding preserves a (2,1) form
    principal: bool = False        # ... at which eta is the 2 pi / p rotation
    factors_flag: object = None
    evidence: dict = dc_field(default_factory=dict)


def orbit_assemble(spec, points, peripheral_words=None, dps_pair=(30, 60)):
    """Certify and classify every point.  Signatures are computed per
    embedding at both working precisions and must agree (the paper's
    uniqueness claim, checked twice); classification predicates are
    rational in the field, hence constant across each orbit."""
    reports = []
    for pt in points:
        cert = certify(pt, spec)
        verdict, witness = irreducibility(cert)
        config = configuration_class(cert)
        if verdict == "irreducible":
            if config != "non-degenerate":
                raise CertificationError(
                    "%s: irreducible orbit classified %s (irreducible "
                    "representations can only come from non-degenerate "
                    "configurations)" % (spec.id, config))
            classification = "irreducible"
        else:
            classification = ("reducible-nondegenerate"
                              if config == "non-degenerate"
                              else "reducible-degenerate")
        signatures = None
        principal_embs = []
        if verdict == "irreducible":
            embs = complex_embeddings(pt.field, dps=dps_pair[0])
            signatures = []
            for emb in embs:
                sigs = [hermitian_signature(cert, emb, dps=d)
                        for d in dps_pair]
                if len(set(sigs)) != 1:
                    raise CertificationError(
                        "%s: signature at embedding %d differs between "
                        "precisions %s" % (spec.id, emb.index, dps_pair))
                signatures.append(sigs[0])
                if sigs[0] == (2, 1, 0) and principal_eta(spec, pt, emb,
                                                          dps=dps_pair[0]):
                    principal_embs.append(emb.index)
        factors_flag = None
        if peripheral_words is not None and not spec.compact:
            factors_flag = factors_test(cert, peripheral_words)
        reports.append(OrbitReport(
            spec, pt, cert,
            min_poly=pt.field.modulus.content_primitive()[1],
            orbit_size=pt.degree,
            cyclotomic_id=identify_conductor(pt.field),
            classification=classification, witness=witness,
            signatures=signatures,
            complex_hyperbolic=bool(signatures) and (2, 1, 0) in signatures,
            principal=bool(principal_embs),
            factors_flag=factors_flag,
            evidence={"signature_dps": list(dps_pair),
                      "principal_embeddings": principal_embs}))
    return reports


@dataclass
class TableRow:
    """Row of the classification tables: total, orbit count, per-field
    cells and the boldface (complex hyperbolic) field."""
    lattice_id: str
    total: int
    galois_orbits: int
    cells: list                    # dicts: poly, conductor, degree, counts
    boldface: object               # cell key of the PU(2,1) field, or None


def _field_key(report):
    if report.cyclotomic_id is not None:
        return ("cyc", report.cyclotomic_id)
    return ("poly", tuple(report.min_poly.int_coeffs()))


def _pgl_word_order(cert, word, bound):
    """Smallest divisor m of bound with word^m scalar, None if none is
    (impossible at a solution, where word^bound is a relation)."""
    for m in divisors(bound):
        if _is_scalar(word_matrix_over_field(cert, word, power=m)):
            return m
    return None


def _full_relator_orders(spec, cert):
    """True when every relation word has order in PGL exactly equal to
    its relator exponent.  The original lattice generators are elliptic
    of exactly those orders; type preservation only bounds the order of
    an image by the order of the generator, and sister orbits do collapse
    some of them."""
    for word, n in spec.relation_words():
        if n > 1 and _pgl_word_order(cert, word, n) != n:
            return False
    return True


def _boldface_orbit(spec, reports):
    """The orbit of the original complex hyperbolic representation:
    preserves a (2,1) form at an embedding where eta is the principal
    rotation e^(2 pi i / p), and every relation word keeps its full
    elliptic order.  Residual ties resolve to the orbits of maximal
    size; a tie across distinct fields is a hard error (ties inside one
    field still determine the boldface cell)."""
    candidates = [r for r in reports
                  if r.principal and _full_relator_orders(spec,
                                                          r.certificate)]
    if not candidates:
        return None
    top = max(r.orbit_size for r in candidates)
    best = [r for r in candidates if r.orbit_size == top]
    if len({_field_key(r) for r in best}) > 1:
        raise BoldfaceAmbiguityError(
            "%s: %d equal-size full-order orbits carry a principal (2,1) "
            "form over distinct fields" % (spec.id, len(best)))
    return best[0]


def assemble_row(spec, reports):
    """Aggregate orbit reports into the row format: cells grouped by
    field (cyclotomic fields are grouped by conductor, so two orbits of
    Q(zeta_n) with different primitive elements share a cell)."""
    bold = _boldface_orbit(spec, reports)
    cells = {}
    order = []
    for rep in reports:
        key = _field_key(rep)
        if key not in cells:
            order.append(key)
            cells[key] = {
                "key": key,
                "poly": (cyclotomic_poly(key[1]) if key[0] == "cyc"
                         else rep.min_poly),
                "conductor": key[1] if key[0] == "cyc" else None,
                "degree": rep.orbit_size,
                "irreducible": 0,
                "reducible": [0, 0],
                "factors": None,
                "bold": False,
            }
        cell = cells[key]
        if rep.classification == "irreducible":
            cell["irreducible"] += 1
        elif rep.classification == "reducible-nondegenerate":
            cell["reducible"][0] += 1
        else:
            cell["reducible"][1] += 1
        if rep.factors_flag is not None:
            cell["factors"] = (cell["factors"] or 0) + int(rep.factors_flag)
        if rep is bold:
            cell["bold"] = True
    ordered = sorted(order, key=lambda k: (-cells[k]["degree"], str(k)))
    return TableRow(
        lattice_id=spec.id,
        total=sum(r.orbit_size for r in reports),
        galois_orbits=len(reports),
        cells=[cells[k] for k in ordered],
        boldface=_field_key(bold) if bold is not None else None)
