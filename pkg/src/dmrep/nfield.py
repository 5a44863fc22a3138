"""Number fields Q[t]/(m), exact element arithmetic, certified complex
embeddings, and cyclotomic-field recognition.

Embeddings are numerical (mpmath) but certified: each approximate root
carries an inclusion radius n*|m(r)/m'(r)|, and the disks must be pairwise
disjoint.  Field recognition combines a finite-field splitting filter, an
integer-relation search (PSLQ), and an exact verification step, so a
positive answer is always exact.
"""

import mpmath

from .errors import BudgetExceeded, CertificationError
from .exactnum import Rational, is_prime, totient
from .ufactor import factor_rational, gf_is_squarefree, gf_monic, gf_pow_mod, gf_sub, _trim
from .upoly import UPoly, cyclotomic_poly

__all__ = ["NumberField", "NFElement", "poly_gcdex", "complex_embeddings",
           "Embedding", "identify_conductor", "find_root_in_field"]


def poly_gcdex(a, b):
    """Extended gcd over Q: (s, t, g) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UPoly([1]), UPoly()
    t0, t1 = UPoly(), UPoly([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero() and not r0.is_monic():
        lc = r0.lc()
        r0 = r0.monic()
        s0 = s0 * (1 / lc)
        t0 = t0 * (1 / lc)
    return s0, t0, r0


class NumberField:
    """Q[t]/(modulus), modulus monic irreducible over Q."""

    def __init__(self, modulus, check=True):
        modulus = modulus.monic()
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if check:
            facs = factor_rational(modulus)
            if len(facs) != 1 or facs[0][1] != 1:
                raise ValueError("modulus is reducible: %s" % modulus.to_text())
        self.modulus = modulus
        self.degree = modulus.degree

    def element(self, rep):
        if isinstance(rep, NFElement):
            if rep.field != self:
                raise ValueError("element of a different field")
            return rep
        if isinstance(rep, (int, Rational)):
            rep = UPoly([rep])
        elif isinstance(rep, (list, tuple)):
            rep = UPoly(rep)
        return NFElement(self, rep % self.modulus)

    def gen(self):
        return self.element(UPoly([0, 1]))

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(tuple(self.modulus.coeffs))

    def __repr__(self):
        return "NumberField(%s)" % self.modulus.to_text()


class NFElement:
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def is_zero(self):
        return self.rep.is_zero()

    def is_rational(self):
        return self.rep.degree <= 0

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not rational: %r" % self)
        return self.rep[0]

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return NFElement(self.field, (self.rep + o.rep) % self.field.modulus)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, -self.rep)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return NFElement(self.field, (self.rep * o.rep) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        s, _, g = poly_gcdex(self.rep, self.field.modulus)
        if g.degree != 0:
            # cannot happen over an irreducible modulus
            raise ArithmeticError("gcd with modulus is %s" % g.to_text())
        return NFElement(self.field, (s * (1 / g[0])) % self.field.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = self.field.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((tuple(self.field.modulus.coeffs), tuple(self.rep.coeffs)))

    def min_poly(self):
        """Minimal polynomial over Q (Krylov on powers of the element)."""
        d = self.field.degree
        rows = {}  # pivot index -> (vector, combo)
        power = self.field.one()
        k = 0
        while True:
            vec = [power.rep[i] for i in range(d)]
            combo = [Rational(0)] * k + [Rational(1)]
            for piv in sorted(rows):
                if vec[piv]:
                    rvec, rcombo = rows[piv]
                    f = vec[piv] / rvec[piv]
                    vec = [a - f * b for a, b in zip(vec, rvec)]
                    for i, c in enumerate(rcombo):
                        if i < len(combo):
                            combo[i] -= f * c
                        else:
                            combo.append(-f * c)
            if all(v == 0 for v in vec):
                return UPoly(combo)
            piv = next(i for i, v in enumerate(vec) if v)
            rows[piv] = (vec, combo)
            power = power * self
            k += 1

    def embed(self, root):
        """Numeric image under the embedding sending the generator to root."""
        return self.rep.evaluate(root)

    def __repr__(self):
        return "NFElement(%s | %s)" % (self.rep.to_text("t"),
                                       self.field.modulus.to_text("t"))


# -- certified embeddings ------------------------------------------------------

class Embedding:
    """An approximate root of the field modulus with a certified inclusion
    radius, plus the index of its complex conjugate in the embedding list."""

    __slots__ = ("root", "radius", "conj_index", "index")

    def __init__(self, root, radius, conj_index=None, index=None):
        self.root = root
        self.radius = radius
        self.conj_index = conj_index
        self.index = index

    def is_real(self):
        return self.conj_index == self.index

    def __repr__(self):
        return "Embedding(%s, r<%.2e)" % (mpmath.nstr(self.root, 8),
                                          float(self.radius))


def complex_embeddings(field, dps=30):
    """All degree-many roots of the modulus at >= dps digits, each carrying
    a certified inclusion radius (n*|f(r)/f'(r)|, disks pairwise disjoint),
    sorted by (real, imaginary); conjugate pairs cross-indexed."""
    f = field.modulus
    n = f.degree
    coeffs_desc = [f[i] for i in range(n, -1, -1)]
    for attempt in range(4):
        wp = dps * (2 ** attempt) + 20
        with mpmath.workdps(wp):
            try:
                roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator
                                          for c in coeffs_desc],
                                         maxsteps=200, extraprec=wp)
            except mpmath.libmp.NoConvergence:
                continue
            roots = sorted(roots, key=lambda z: (mpmath.re(z), mpmath.im(z)))
            df = f.derivative()
            radii = []
            ok = True
            for z in roots:
                fz = f.evaluate(z)
                dfz = df.evaluate(z)
                if abs(dfz) == 0:
                    ok = False
                    break
                radii.append(n * abs(fz) / abs(dfz))
            if not ok:
                continue
            # disks must be pairwise disjoint and radii meaningful at dps
            for i in range(n):
                if radii[i] > mpmath.mpf(10) ** (-dps):
                    ok = False
                for j in range(i + 1, n):
                    if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                        ok = False
            if not ok:
                continue
            out = [Embedding(+roots[i], +radii[i], index=i) for i in range(n)]
            for i, e in enumerate(out):
                if e.conj_index is not None:
                    continue
                if abs(mpmath.im(e.root)) <= e.radius:
                    e.conj_index = i
                    continue
                target = mpmath.conj(e.root)
                for j in range(i + 1, n):
                    if abs(out[j].root - target) <= e.radius + out[j].radius:
                        e.conj_index = j
                        out[j].conj_index = i
                        break
                else:
                    raise CertificationError(
                        "unpaired complex root of %s" % f.to_text())
            return out
    raise BudgetExceeded("complex_embeddings: precision unachievable for %s"
                         % f.to_text())


# -- field recognition ---------------------------------------------------------

def _integer_modulus(field):
    """Primitive integer coefficient list of the modulus (little-endian)."""
    _, prim = field.modulus.content_primitive()
    return prim.int_coeffs()


def _splits_completely_filter(field, n, prime_count=3):
    """Necessary condition for field == Q(zeta_n): for unramified primes
    r = 1 (mod n) the modulus must split into linears mod r, i.e.
    t^r = t (mod modulus, r)."""
    g = _integer_modulus(field)
    found = 0
    r = n + 1
    scanned = 0
    while found < prime_count and scanned < 25 * prime_count:
        if is_prime(r) and g[-1] % r:
            gq = gf_monic(_trim([c % r for c in g]), r)
            if len(gq) == len(g) and gf_is_squarefree(gq, r):
                scanned += 1
                xr = gf_pow_mod([0, 1], r, gq, r)
                if _trim(gf_sub(xr, [0, 1], r)):
                    return False
                found += 1
        r += n
    return found > 0


def _pslq_element(field, target_fn, verify_poly, dps_ladder=(60, 120, 240)):
    """Search for z in field with verify_poly(z) = 0 exactly, guided by an
    integer-relation fit of z against a numeric target.  target_fn(prec
    context active) returns the target complex numbers to try.  Returns the
    NFElement or None; a non-None answer is exactly verified."""
    d = field.degree
    f = field.modulus
    coeffs_desc = [f[i] for i in range(d, -1, -1)]
    for dps in dps_ladder:
        with mpmath.workdps(dps + 15):
            try:
                roots = mpmath.polyroots(
                    [mpmath.mpf(c.numerator) / c.denominator for c in coeffs_desc],
                    maxsteps=200, extraprec=dps)
            except mpmath.libmp.NoConvergence:
                continue
            alpha = sorted(roots, key=lambda z: (mpmath.re(z), mpmath.im(z)))[0]
            mu = mpmath.sqrt(2)

            def mix(z):
                return mpmath.re(z) + mu * mpmath.im(z)

            powers = [mix(alpha ** j) for j in range(d)]
            for w in target_fn():
                vec = powers + [mix(w)]
                rel = mpmath.pslq(vec, tol=mpmath.mpf(10) ** (-dps + 10),
                                  maxcoeff=10 ** 14, maxsteps=20000)
                if not rel or rel[d] == 0:
                    continue
                num = UPoly([Rational(e) for e in rel[:d]])
                cand = field.element(num) * Rational(-1, rel[d])
                if verify_poly.evaluate(cand) == 0:
                    return cand
    return None


def identify_conductor(field, dps_ladder=(60, 120, 240)):
    """n if field is isomorphic to Q(zeta_n) (canonical n, never 2 mod 4),
    else None.  Degree-1 fields give 1.  A non-None answer is certified by
    an exact root of the field's modulus inside Q(zeta_n)."""
    d = field.degree
    if d == 1:
        return 1
    # exact shortcut: the modulus itself is a cyclotomic polynomial
    from .upoly import identify_cyclotomic
    if all(c.denominator == 1 for c in field.modulus.coeffs):
        n0 = identify_cyclotomic(field.modulus)
        if n0 is not None:
            return n0 // 2 if n0 % 4 == 2 else n0
    for n in range(3, 2 * d * d + 8):
        if n % 4 == 2 or totient(n) != d:
            continue
        if not _splits_completely_filter(field, n):
            continue
        # look for a root of our modulus inside Q(zeta_n): the cyclotomic
        # power basis is perfectly conditioned, unlike ours, so the
        # integer-relation search is cheap; a found root is an exactly
        # verified embedding, hence (equal degrees) an isomorphism
        L = NumberField(cyclotomic_poly(n), check=False)
        if find_root_in_field(L, field.modulus, dps_ladder) is not None:
            return n
    return None


def find_root_in_field(field, poly, dps_ladder=(60, 120, 240)):
    """An exact root of poly (UPoly over Q) inside field, or None when the
    numeric search finds nothing (None is inconclusive, a found root is
    certified)."""
    if poly.degree == 1:
        return field.element(-poly[0] / poly[1])

    coeffs_desc = [poly[i] for i in range(poly.degree, -1, -1)]

    def targets():
        rts = mpmath.polyroots(
            [mpmath.mpf(c.numerator) / c.denominator for c in coeffs_desc],
            maxsteps=200, extraprec=mpmath.mp.prec)
        return sorted(rts, key=lambda z: (mpmath.re(z), mpmath.im(z)))

    return _pslq_element(field, targets, poly, dps_ladder)
