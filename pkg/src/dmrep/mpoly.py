"""Multivariate polynomials over Q.

A monomial is a tuple of exponents (one slot per ring variable); an MPoly
is a ring + a dict {monomial: nonzero Rational}.  Monomial orders are
small objects exposing a sort key ("bigger key" = "later in the order",
so max(key) picks the leading monomial).

Canonical text form lists terms leading-first under the ring's order:
"w1^2*eta - 3/2*w2 + 1".
"""

from .exactnum import Rational, format_rational

__all__ = [
    "MonomialOrder", "LEX", "GREVLEX", "block_order",
    "PolyRing", "MPoly",
    "mono_mul", "mono_div", "mono_lcm", "mono_deg", "mono_divides",
]


# -- monomials ---------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, or None when not divisible."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        return None
    return out


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


class MonomialOrder:
    """kind in {"lex", "grevlex", "block"}; block orders compare the first
    `split` variables grevlex, then the rest grevlex (elimination order)."""

    def __init__(self, kind, split=None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError("unknown order kind %r" % kind)
        if kind == "block" and not split:
            raise ValueError("block order needs a split index")
        self.kind = kind
        self.split = split

    def key(self, m):
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        return (_grevlex_key(m[:self.split]), _grevlex_key(m[self.split:]))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and (self.kind, self.split) == (other.kind, other.split))

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "block":
            return "block_order(%d)" % self.split
        return self.kind.upper()


def _grevlex_key(m):
    # degree first; ties broken by the reversed-negated exponent tuple
    # (last variable with a smaller exponent wins)
    return (sum(m), tuple(-e for e in reversed(m)))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(split):
    return MonomialOrder("block", split)


# -- rings and polynomials ---------------------------------------------------

class PolyRing:
    def __init__(self, names, order=GREVLEX):
        self.names = tuple(names)
        self.n = len(self.names)
        self.order = order
        if len(set(self.names)) != self.n:
            raise ValueError("duplicate variable names")

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Rational(c)
        if not c:
            return MPoly(self, {})
        return MPoly(self, {(0,) * self.n: c})

    def var(self, name):
        i = self.names.index(name)
        m = [0] * self.n
        m[i] = 1
        return MPoly(self, {tuple(m): Rational(1)})

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def monomial(self, m, c=1):
        c = Rational(c)
        if not c:
            return self.zero()
        return MPoly(self, {tuple(m): c})

    def from_text(self, s):
        """Parse the canonical text form (and mild variations)."""
        s = s.replace("-", "+-").replace(" ", "")
        out = self.zero()
        for term in s.split("+"):
            if not term:
                continue
            sign = 1
            if term.startswith("-"):
                sign = -1
                term = term[1:]
            coef = Rational(1)
            mono = [0] * self.n
            for factor in term.split("*") if term else []:
                if not factor:
                    continue
                name, _, exp = factor.partition("^")
                if name in self.names:
                    mono[self.names.index(name)] += int(exp) if exp else 1
                else:
                    if exp:
                        coef *= Rational(name) ** int(exp)
                    else:
                        coef *= Rational(name)
            out = out + MPoly(self, {tuple(mono): sign * coef})
        return out

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return "PolyRing(%s, %r)" % (",".join(self.names), self.order)


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Rational(0)
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return next(iter(self.terms.values()))

    def total_degree(self):
        return max((mono_deg(m) for m in self.terms), default=-1)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = self.ring.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = Rational(other)
            if not c:
                return self.ring.zero()
            return MPoly(self.ring, {m: c * v for m, v in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return self.is_constant() and self.constant_value() == Rational(other)
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- leading data ----------------------------------------------------

    def leading(self, order=None):
        """(monomial, coefficient) of the leading term."""
        if self.is_zero():
            raise ValueError("leading term of zero polynomial")
        order = order or self.ring.order
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order=None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]),
                      reverse=True)

    def deriv(self, i):
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                m2 = list(m)
                m2[i] -= 1
                out[tuple(m2)] = c * m[i]
        return MPoly(self.ring, out)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, vals):
        """Substitute vals[i] for variable i.  Values may be Rational,
        NFElement, mpmath numbers, other MPolys... anything with ring ops."""
        if len(vals) != self.ring.n:
            raise ValueError("expected %d values" % self.ring.n)
        out = None
        pow_cache = [{} for _ in range(self.ring.n)]

        def vpow(i, e):
            cache = pow_cache[i]
            if e not in cache:
                cache[e] = vals[i] ** e
            return cache[e]

        for m, c in sorted(self.terms.items()):
            term = c
            for i, e in enumerate(m):
                if e:
                    term = term * vpow(i, e)
            out = term if out is None else out + term
        if out is None:
            return Rational(0)
        return out

    # -- text ----------------------------------------------------------------

    def to_text(self, order=None):
        if self.is_zero():
            return "0"
        names = self.ring.names
        parts = []
        for m, c in self.sorted_terms(order):
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append("%s^%d" % (names[i], e))
            body = "*".join(factors)
            ac = abs(c)
            if not body:
                body = format_rational(ac)
            elif ac != 1:
                body = "%s*%s" % (format_rational(ac), body)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return "MPoly(%s)" % self.to_text()
