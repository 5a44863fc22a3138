"""Univariate factorization over Q.

Pipeline: Yun squarefree decomposition (upoly), then for each squarefree
part: reduction mod a good prime, distinct-degree + Cantor-Zassenhaus
equal-degree splitting, multifactor quadratic Hensel lifting to a Mignotte
bound, and subset recombination with trial division.

GF(q) and Z polynomials in this module are plain little-endian int lists;
only the public entry points speak UPoly.
"""

import random
from itertools import combinations
from math import isqrt

from .exactnum import inv_mod, is_prime
from .upoly import UPoly, squarefree_decomposition

__all__ = ["factor_rational", "zassenhaus", "gf_factor_sqf"]


# -- GF(q) kernels (little-endian int lists, coefficients in [0, q)) --------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_add(a, b, q):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    return _trim(out)


def gf_sub(a, b, q):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % q
    return _trim(out)


def gf_mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _trim(out)


def gf_scale(a, c, q):
    c %= q
    return _trim([ai * c % q for ai in a])


def gf_monic(a, q):
    if not a or a[-1] == 1:
        return list(a)
    return gf_scale(a, inv_mod(a[-1], q), q)


def gf_divmod(a, b, q):
    if not b:
        raise ZeroDivisionError("gf_divmod by zero")
    r = list(a)
    db = len(b) - 1
    inv = inv_mod(b[-1], q)
    quo = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % q
        if c:
            quo[i - db] = c
            for j, bj in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * bj) % q
    return _trim(quo), _trim(r[:db])


def gf_rem(a, b, q):
    return gf_divmod(a, b, q)[1]


def gf_gcd(a, b, q):
    while b:
        a, b = b, gf_rem(a, b, q)
    return gf_monic(a, q)


def gf_gcdex(a, b, q):
    """Return (s, t, g) with s*a + t*b = g, g monic gcd."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, rem = gf_divmod(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, gf_sub(s0, gf_mul(quo, s1, q), q)
        t0, t1 = t1, gf_sub(t0, gf_mul(quo, t1, q), q)
    if r0 and r0[-1] != 1:
        inv = inv_mod(r0[-1], q)
        r0, s0, t0 = gf_scale(r0, inv, q), gf_scale(s0, inv, q), gf_scale(t0, inv, q)
    return s0, t0, r0


def gf_pow_mod(a, n, m, q):
    out = [1]
    a = gf_rem(a, m, q)
    while n:
        if n & 1:
            out = gf_rem(gf_mul(out, a, q), m, q)
        a = gf_rem(gf_mul(a, a, q), m, q)
        n >>= 1
    return out


def gf_deriv(a, q):
    return _trim([i * c % q for i, c in enumerate(a)][1:])


def gf_is_squarefree(a, q):
    g = gf_gcd(a, gf_deriv(a, q), q)
    return len(g) == 1


# -- factorization of a squarefree monic polynomial mod q -------------------

def _gf_ddf(f, q):
    """Distinct-degree: [(product of irreducibles of degree d, d), ...]."""
    out = []
    h = [0, 1]  # x
    d = 0
    while len(f) - 1 > 2 * (d + 1) - 1:  # deg f >= 2(d+1) worth continuing
        d += 1
        h = gf_pow_mod(h, q, f, q)
        g = gf_gcd(gf_sub(h, [0, 1], q), f, q)
        if len(g) > 1:
            out.append((g, d))
            f = gf_divmod(f, g, q)[0]
            h = gf_rem(h, f, q)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _gf_edf(f, d, q, rng):
    """Cantor-Zassenhaus: split monic f (product of irreducibles of equal
    degree d) into that list.  q odd."""
    n = len(f) - 1
    if n == d:
        return [f]
    exp = (q ** d - 1) // 2
    while True:
        a = _trim([rng.randrange(q) for _ in range(n)])
        if len(a) < 2:
            continue
        g = gf_gcd(a, f, q)
        if 1 < len(g) < len(f):
            pass  # lucky split
        else:
            b = gf_pow_mod(a, exp, f, q)
            g = gf_gcd(gf_sub(b, [1], q), f, q)
            if not 1 < len(g) < len(f):
                continue
        rest = gf_divmod(f, g, q)[0]
        return _gf_edf(g, d, q, rng) + _gf_edf(rest, d, q, rng)


def gf_factor_sqf(f, q, rng=None):
    """Monic irreducible factors of a squarefree monic f over GF(q), q an
    odd prime.  Deterministic: the splitting RNG is seeded from (f, q)."""
    if rng is None:
        rng = random.Random("edf:%d:%s" % (q, tuple(f)))
    out = []
    for g, d in _gf_ddf(f, q):
        out.extend(_gf_edf(g, d, q, rng))
    out.sort(key=lambda a: (len(a), tuple(reversed(a))))
    return out


# -- Hensel lifting ---------------------------------------------------------

def _z_trunc(a, m):
    """Symmetric representative mod m, coefficient-wise."""
    half = m // 2
    return _trim([(c + half) % m - half for c in a])


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _z_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _z_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _z_divmod_monic(a, b, m):
    """Division by b with lc(b) = 1, coefficients reduced symmetrically mod m."""
    r = list(a)
    db = len(b) - 1
    quo = [0] * max(0, len(r) - db)
    half = m // 2
    for i in range(len(r) - 1, db - 1, -1):
        c = (r[i] + half) % m - half
        if c:
            quo[i - db] = c
            for j, bj in enumerate(b):
                r[i - db + j] -= c * bj
    return _z_trunc(quo, m), _z_trunc(r[:db], m)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic step: from f = g*h, s*g + t*h = 1 (mod m), h monic,
    to the same data mod m**2."""
    M = m * m
    e = _z_trunc(_z_sub(f, _z_mul(g, h)), M)
    quo, r = _z_divmod_monic(_z_mul(s, e), h, M)
    G = _z_trunc(_z_add(g, _z_add(_z_mul(t, e), _z_mul(quo, g))), M)
    H = _z_trunc(_z_add(h, r), M)
    b = _z_trunc(_z_sub(_z_add(_z_mul(s, G), _z_mul(t, H)), [1]), M)
    c, d = _z_divmod_monic(_z_mul(s, b), H, M)
    S = _z_trunc(_z_sub(s, d), M)
    T = _z_trunc(_z_sub(t, _z_add(_z_mul(t, b), _z_mul(c, G))), M)
    return G, H, S, T


def _hensel_lift(q, f, facs, l):
    """Lift monic factors `facs` of f (mod q) to monic factors mod q**l.
    lc(f) is attached to the left half at each bisection."""
    r = len(facs)
    lc = f[-1]
    ql = q ** l
    if r == 1:
        return [_z_trunc(gf_scale(f, inv_mod(lc % ql, ql), ql), ql)]
    k = r // 2
    steps = 1
    while (1 << steps) < l:
        steps += 1
    g = [lc % q]
    for fi in facs[:k]:
        g = gf_mul(g, fi, q)
    h = facs[k]
    for fi in facs[k + 1:]:
        h = gf_mul(h, fi, q)
    s, t, one = gf_gcdex(g, h, q)
    assert one == [1], "factor halves not coprime mod q"
    g, h = _z_trunc(g, q), _z_trunc(h, q)
    s, t = _z_trunc(s, q), _z_trunc(t, q)
    m = q
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(q, g, facs[:k], l) + _hensel_lift(q, h, facs[k:], l)


# -- Zassenhaus over Z -------------------------------------------------------

def _z_primitive(a):
    from math import gcd
    g = 0
    for c in a:
        g = gcd(g, c)
    if a and a[-1] < 0:
        g = -g
    return [c // g for c in a] if g not in (0, 1) else list(a)


def _z_divides(a, b):
    """If primitive b divides primitive a over Z return the quotient, else None."""
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    quo = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        if r[i] % lcb:
            return None
        c = r[i] // lcb
        if c:
            quo[i - db] = c
            for j, bj in enumerate(b):
                r[i - db + j] -= c * bj
    return quo if not _trim(r) else None


def _good_primes(f, want=5, skip=()):
    """Smallest odd primes q with q not dividing lc(f) and f squarefree mod q."""
    out = []
    q = 3
    while len(out) < want:
        if is_prime(q) and f[-1] % q and q not in skip:
            fq = _trim([c % q for c in f])
            if len(fq) == len(f) and gf_is_squarefree(gf_monic(fq, q), q):
                out.append(q)
        q += 2
    return out


def zassenhaus(f):
    """Irreducible factors (primitive, positive leading coefficient) of a
    primitive squarefree integer polynomial with positive leading
    coefficient, as little-endian int lists."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)]
    # pick, among the first few usable primes, one minimizing the modular
    # factor count (ties broken toward the smallest prime)
    best = None
    for q in _good_primes(f):
        fq = gf_monic(_trim([c % q for c in f]), q)
        facs = gf_factor_sqf(fq, q)
        if best is None or len(facs) < len(best[1]):
            best = (q, facs)
        if len(facs) == 1:
            break
    q, modular = best
    if len(modular) == 1:
        return [list(f)]
    # Mignotte-style bound on coefficients of any factor times lc(f)
    A = max(abs(c) for c in f)
    b = f[-1]
    B = (isqrt(n + 1) + 1) * (1 << n) * A * b
    l = 1
    while q ** l < 2 * B + 1:
        l += 1
    lifted = _hensel_lift(q, f, modular, l)
    ql = q ** l
    # subset recombination with trial division
    factors = []
    T = list(range(len(lifted)))
    cur = list(f)
    s = 1
    while 2 * s <= len(T):
        found = False
        for S in combinations(T, s):
            cand = [cur[-1] % ql]
            for i in S:
                cand = _z_trunc(_z_mul(cand, lifted[i]), ql)
            cand = _z_primitive(cand)
            quo = _z_divides(cur, cand)
            if quo is not None:
                factors.append(cand)
                cur = _z_primitive(quo)
                T = [i for i in T if i not in S]
                found = True
                break
        if not found:
            s += 1
    if len(cur) > 1:
        factors.append(_z_primitive(cur))
    return factors


def factor_rational(f):
    """Monic irreducible factors of f over Q with multiplicities, sorted by
    (degree, coefficients).  The leading coefficient of f is discarded.

    >>> [(g.to_text(), m) for g, m in factor_rational(UPoly.from_text('x^4 - 1'))]
    [('x - 1', 1), ('x + 1', 1), ('x^2 + 1', 1)]
    """
    if f.is_zero():
        raise ValueError("factor_rational of zero polynomial")
    out = []
    for g, mult in squarefree_decomposition(f):
        _, gz = g.content_primitive()
        for fac in zassenhaus(gz.int_coeffs()):
            out.append((UPoly(fac).monic(), mult))
    out.sort(key=lambda gm: (gm[0].degree, gm[1], tuple(gm[0].coeffs)))
    return out
