"""Dense univariate polynomials over Q.

Coefficients are stored little-endian (coeffs[i] multiplies x^i) as
Rational; the zero polynomial is the empty list.  Text form puts the
highest-degree term first, e.g. "x^4 - x^2 + 1".
"""

from .exactnum import Rational, divisors, format_rational, totient

__all__ = [
    "UPoly", "x_poly", "cyclotomic_poly", "identify_cyclotomic",
    "squarefree_part", "squarefree_decomposition",
]


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        # degree of 0 is -1 by convention
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            return Rational(0)
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Rational(0)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        l = self.coeffs[-1]
        return UPoly([c / l for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UPoly):
            if self.is_zero() or other.is_zero():
                return UPoly()
            a, b = self.coeffs, other.coeffs
            out = [Rational(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return UPoly(out)
        return UPoly([c * Rational(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n):
        out = UPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UPoly([Rational(0)] * k + self.coeffs)

    def divmod(self, other):
        """Exact polynomial division with remainder over Q."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        lc = other.coeffs[-1]
        q = [Rational(0)] * max(0, len(r) - d)
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if c:
                c = c / lc
                q[i - d] = c
                for j, bc in enumerate(other.coeffs):
                    r[i - d + j] -= c * bc
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("exact_div: %s does not divide %s" % (other, self))
        return q

    def derivative(self):
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other):
        """Monic gcd over Q (Euclid; degrees here stay small)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def evaluate(self, v):
        """Horner evaluation; v may be Rational, float, mpc, NFElement..."""
        out = 0 * v  # zero of the right type
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def compose(self, other):
        """self(other(x))."""
        out = UPoly()
        for c in reversed(self.coeffs):
            out = out * other + UPoly([c])
        return out

    # -- integer form ------------------------------------------------------

    def content_primitive(self):
        """Return (content, primitive) with content rational > 0, primitive
        an integer-coefficient UPoly with gcd of coefficients 1 and the same
        sign of leading coefficient as self."""
        if self.is_zero():
            return Rational(1), self
        from math import gcd, lcm
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return Rational(g, den), UPoly([c // g for c in ints])

    def int_coeffs(self):
        """Little-endian integer coefficient list of the primitive part
        (requires self to be primitive-integer already for exactness of
        round trips; see to_int_list)."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("int_coeffs: non-integer coefficient %s" % c)
            out.append(c.numerator)
        return out

    # -- text --------------------------------------------------------------

    def to_text(self, var="x"):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = var
            else:
                mono = "%s^%d" % (var, i)
            ac = abs(c)
            if mono and ac == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (format_rational(ac), mono)
            else:
                body = format_rational(ac)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return "UPoly(%s)" % self.to_text()

    @classmethod
    def from_text(cls, s, var="x"):
        """Parse the to_text format (also tolerates no spaces around +/-).

        >>> UPoly.from_text("x^4 - x^2 + 1").coeffs[4]
        Fraction(1, 1)
        """
        s = s.replace("-", "+-").replace(" ", "")
        coeffs = {}
        for term in s.split("+"):
            if not term:
                continue
            sign = 1
            if term.startswith("-"):
                sign = -1
                term = term[1:]
            if var in term:
                cpart, _, epart = term.partition(var)
                cpart = cpart.rstrip("*")
                coef = Rational(cpart) if cpart else Rational(1)
                exp = int(epart[1:]) if epart.startswith("^") else (1 if not epart else int(epart))
            else:
                coef = Rational(term)
                exp = 0
            coeffs[exp] = coeffs.get(exp, Rational(0)) + sign * coef
        out = [Rational(0)] * (max(coeffs, default=0) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return cls(out)


def x_poly(*coeffs):
    """Convenience: x_poly(a0, a1, ...) -> a0 + a1 x + ... (little-endian)."""
    return UPoly(coeffs)


_CYCLOTOMIC_CACHE = {}


def cyclotomic_poly(n):
    """The n-th cyclotomic polynomial, by exact division of x^n - 1 by the
    product of Phi_d over proper divisors d of n.

    >>> cyclotomic_poly(12).to_text()
    'x^4 - x^2 + 1'
    """
    if n < 1:
        raise ValueError("cyclotomic_poly: n must be >= 1, got %r" % (n,))
    if n in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[n]
    xn1 = UPoly([-1] + [0] * (n - 1) + [1])
    den = UPoly([1])
    for d in divisors(n):
        if d < n:
            den = den * cyclotomic_poly(d)
    out = xn1.exact_div(den)
    _CYCLOTOMIC_CACHE[n] = out
    return out


def identify_cyclotomic(f):
    """Return n if the monic polynomial f equals Phi_n, else None.

    Searches the finitely many n with totient(n) = deg f; phi(n) >= sqrt(n/2)
    so n <= 2 deg^2 suffices (+ slack for the tiny degrees).
    """
    d = f.degree
    if d < 1:
        return None
    for n in range(1, 2 * d * d + 8):
        if totient(n) == d and cyclotomic_poly(n) == f:
            return n
    return None


def squarefree_decomposition(f):
    """Yun's algorithm: return [(g1, 1), (g2, 2), ...] with f = lc * prod g_i^i,
    the g_i monic, squarefree, pairwise coprime (unit factors omitted)."""
    if f.is_zero():
        raise ValueError("squarefree_decomposition of zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    a = f.gcd(df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = b.gcd(d)
        if g.degree > 0:
            out.append((g, i))
        b2 = b.exact_div(g)
        c2 = d.exact_div(g)
        d = c2 - b2.derivative()
        b = b2
        i += 1
    return out


def squarefree_part(f):
    """f / gcd(f, f'), monic."""
    if f.is_zero():
        raise ValueError("squarefree_part of zero polynomial")
    g = f.gcd(f.derivative())
    if g.degree <= 0:
        return f.monic()
    return f.exact_div(g).monic()
