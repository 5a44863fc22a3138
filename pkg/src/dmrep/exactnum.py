"""Exact integer/rational arithmetic and elementary number theory.

Integers are plain Python ints (arbitrary precision); rationals are
fractions.Fraction, which keeps gcd-reduced canonical form eagerly.  The
rest of the package imports Rational from here and never touches the
representation directly.
"""

from fractions import Fraction as Rational

__all__ = [
    "Rational", "parse_rational", "format_rational", "divisors", "totient",
    "factorint", "is_prime", "next_prime", "xgcd", "inv_mod",
]


def parse_rational(s):
    """Parse 'a/b' or 'a' into a Rational.

    >>> parse_rational('-3/2')
    Fraction(-3, 2)
    """
    return Rational(s.strip())


def format_rational(q):
    """Canonical text: integer when denominator is 1, else 'a/b'."""
    q = Rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def divisors(n):
    """All positive divisors of n in increasing order.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    if n < 1:
        raise ValueError("divisors: n must be >= 1, got %r" % (n,))
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def factorint(n):
    """Prime factorization as an ordered dict {prime: exponent}.

    Trial division; the integers in this problem domain are tiny.
    """
    if n < 1:
        raise ValueError("factorint: n must be >= 1, got %r" % (n,))
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n):
    """Euler totient phi(n).

    >>> totient(36)
    12
    """
    if n < 1:
        raise ValueError("totient: n must be >= 1, got %r" % (n,))
    out = n
    for p in factorint(n):
        out = out // p * (p - 1)
    return out


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def next_prime(n):
    """Smallest prime strictly greater than n."""
    n += 1
    while not is_prime(n):
        n += 1
    return n


def xgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def inv_mod(a, m):
    """Inverse of a modulo m; raises if gcd(a, m) != 1."""
    g, s, _ = xgcd(a % m, m)
    if g != 1:
        raise ZeroDivisionError("inv_mod: %d not invertible mod %d" % (a, m))
    return s % m
