"""Exact coefficient domains and sparse homogeneous polynomials.

Variables are always x0 < x1 < ... < xn; an exponent tuple of length n+1
represents a term, entry i belonging to x_i.  Terms of equal degree are
compared degrevlex: x^a > x^b iff at the smallest index where they differ,
a has the *smaller* exponent.  (So in two variables x0^2 < x0*x1 < x1^2.)

Coefficients live in one of three domains: the rationals, a prime field,
or a polynomial ring in named parameters over one of the former.  All
three expose the same small protocol (zero/one/add/sub/mul/neg/div/
is_zero/eq/from_fraction/coeff_str) so the linear algebra never needs to
know which one it is working over.
"""

from fractions import Fraction
from math import gcd


class RingError(ValueError):
    """Mismatched rings, mixed degrees, bad coefficients - anything that
    makes an algebraic operation meaningless rather than merely false."""


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# terms = plain exponent tuples

def term_degree(e):
    return sum(e)


def term_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def term_divides(a, b):
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))


def term_div(a, b):
    """Exponent tuple of x^a / x^b.  Caller guarantees divisibility."""
    assert term_divides(b, a)
    return tuple(x - y for x, y in zip(a, b))


def term_min_var(e):
    """Index of the smallest variable dividing x^e (min(x^e))."""
    for i, x in enumerate(e):
        if x:
            return i
    raise RingError("min var of the unit term is undefined")


def term_max_var(e):
    for i in range(len(e) - 1, -1, -1):
        if e[i]:
            return i
    raise RingError("max var of the unit term is undefined")


def term_key(e):
    """Sort key realizing (degree, degrevlex) ascending."""
    return (sum(e), tuple(-x for x in e))


def unit_term(nv):
    return (0,) * nv


def var_term(nv, i):
    return tuple(1 if j == i else 0 for j in range(nv))


def term_str(e, names=None):
    if not any(e):
        return "1"
    parts = []
    for i, p in enumerate(e):
        if p == 0:
            continue
        name = names[i] if names else "x%d" % i
        parts.append(name if p == 1 else "%s^%d" % (name, p))
    return "*".join(parts)


# ---------------------------------------------------------------------------
# coefficient domains


class Rationals:
    """The field Q, elements are fractions.Fraction."""

    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def from_fraction(self, q):
        return Fraction(q)

    def coeff_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p), elements are ints in [0, p)."""

    is_field = True

    def __init__(self, p):
        if not _is_prime(p):
            raise RingError("modulus %r is not prime" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return a * pow(b, -1, self.p) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise RingError("denominator of %s not invertible mod %d" % (q, self.p))
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def coeff_str(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


class ParamPoly:
    """A polynomial in the ring's parameters, used as a coefficient.

    Stored as {exponent tuple over the parameters: nonzero base element}.
    Structural equality doubles as the exact zero test, which everything
    downstream (rank, nullspace, locus equations) relies on.
    """

    __slots__ = ("base", "coeffs")

    def __init__(self, base, coeffs):
        self.base = base
        self.coeffs = {k: v for k, v in coeffs.items() if not base.is_zero(v)}

    @classmethod
    def const(cls, base, c, nparams):
        return cls(base, {(0,) * nparams: c})

    @classmethod
    def param(cls, base, i, nparams):
        return cls(base, {var_term(nparams, i): base.one})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max((sum(k) for k in self.coeffs), default=-1)

    def lead_term(self):
        """(degree, degrevlex)-largest parameter monomial."""
        return max(self.coeffs, key=term_key)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            w = self.base.add(out.get(k, self.base.zero), v)
            if self.base.is_zero(w):
                out.pop(k, None)
            else:
                out[k] = w
        return ParamPoly(self.base, out)

    def __neg__(self):
        return ParamPoly(self.base, {k: self.base.neg(v) for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = term_mul(k1, k2)
                w = self.base.add(out.get(k, self.base.zero), self.base.mul(v1, v2))
                if self.base.is_zero(w):
                    out.pop(k, None)
                else:
                    out[k] = w
        return ParamPoly(self.base, out)

    def exact_div(self, other):
        """Exact polynomial division; raises RingError if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero parameter polynomial")
        rem = ParamPoly(self.base, dict(self.coeffs))
        quot = {}
        lt = other.lead_term()
        lc = other.coeffs[lt]
        while not rem.is_zero():
            rt = rem.lead_term()
            if not term_divides(lt, rt):
                raise RingError("inexact parameter-polynomial division")
            q = term_div(rt, lt)
            c = self.base.div(rem.coeffs[rt], lc)
            quot[q] = c
            rem = rem - ParamPoly(self.base, {q: c}) * other
        return ParamPoly(self.base, quot)

    def evaluate(self, values, target):
        """Evaluate with values[i] substituted for parameter i, in domain target."""
        acc = target.zero
        for k, v in self.coeffs.items():
            c = v if not isinstance(v, Fraction) else target.from_fraction(v)
            for i, p in enumerate(k):
                for _ in range(p):
                    c = target.mul(c, values[i])
            acc = target.add(acc, c)
        return acc

    def content_normalized(self):
        """The canonical associate: integer-primitive with positive leading
        coefficient over QQ, monic over a prime field."""
        if self.is_zero():
            return self
        if isinstance(self.base, Rationals):
            nums = [abs(v.numerator) for v in self.coeffs.values()]
            dens = [v.denominator for v in self.coeffs.values()]
            g = 0
            for x in nums:
                g = gcd(g, x)
            l = 1
            for x in dens:
                l = l * x // gcd(l, x)
            scale = Fraction(l, g)
            if self.coeffs[self.lead_term()] < 0:
                scale = -scale
            return ParamPoly(self.base, {k: v * scale for k, v in self.coeffs.items()})
        lc = self.coeffs[self.lead_term()]
        inv = self.base.div(self.base.one, lc)
        return ParamPoly(self.base, {k: self.base.mul(v, inv) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, ParamPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def render(self, names):
        if self.is_zero():
            return "0"
        bits = []
        for k in sorted(self.coeffs, key=term_key, reverse=True):
            c = self.coeffs[k]
            mono = term_str(k, names)
            cs = self.base.coeff_str(c)
            if mono == "1":
                piece = cs
            elif cs == "1":
                piece = mono
            elif cs == "-1":
                piece = "-" + mono
            else:
                piece = cs + "*" + mono
            bits.append(piece)
        out = bits[0]
        for piece in bits[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out

    def __repr__(self):
        return "ParamPoly(%r)" % (self.coeffs,)


class ParameterRing:
    """base[C] for an ordered tuple of parameter names C.  A domain, not a
    field: div is exact division and may fail."""

    is_field = False

    def __init__(self, base, names):
        if isinstance(base, ParameterRing):
            raise RingError("nested parameter rings are not supported")
        if len(set(names)) != len(names):
            raise RingError("duplicate parameter names")
        self.base = base
        self.names = tuple(names)
        n = len(self.names)
        self.zero = ParamPoly(base, {})
        self.one = ParamPoly.const(base, base.one, n)

    def nparams(self):
        return len(self.names)

    def param(self, name):
        return ParamPoly.param(self.base, self.names.index(name), len(self.names))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a.exact_div(b)

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return a == b

    def from_fraction(self, q):
        return ParamPoly.const(self.base, self.base.from_fraction(q), len(self.names))

    def coeff_str(self, a):
        return a.render(self.names)

    def substitute(self, a, values_by_name):
        """Evaluate the parameter polynomial a into the base domain."""
        vals = []
        for i, nm in enumerate(self.names):
            if nm in values_by_name:
                vals.append(values_by_name[nm])
            elif any(k[i] for k in a.coeffs):
                raise RingError("no value assigned to parameter %s" % nm)
            else:
                vals.append(self.base.zero)
        vals = [v if not isinstance(v, (int, Fraction)) or isinstance(self.base, PrimeField)
                and isinstance(v, int) else self.base.from_fraction(v) for v in vals]
        # ints are fine for PrimeField; normalize everything else through Fraction
        norm = []
        for v in vals:
            if isinstance(self.base, Rationals):
                norm.append(Fraction(v))
            else:
                norm.append(v % self.base.p if isinstance(v, int) else v)
        return a.evaluate(norm, self.base)

    def __eq__(self, other):
        return (isinstance(other, ParameterRing) and other.base == self.base
                and other.names == self.names)

    def __hash__(self):
        return hash(("params", self.base, self.names))

    def __repr__(self):
        return "%r[%s]" % (self.base, ",".join(self.names))


QQ = Rationals()


# ---------------------------------------------------------------------------
# ring context and polynomials


class Ring:
    """A coefficient domain together with a fixed ambient variable count.

    Mixing contexts is an error, never a coercion; every operation that
    combines two objects checks this first.
    """

    def __init__(self, domain, nvars):
        if nvars < 1:
            raise RingError("need at least one variable")
        self.domain = domain
        self.nvars = nvars
        self.names = tuple("x%d" % i for i in range(nvars))

    def check_same(self, other):
        if self != other:
            raise RingError("ring mismatch: %r vs %r" % (self, other))

    def zero(self):
        return Polynomial(self, {})

    def monomial(self, e, c=None):
        c = self.domain.one if c is None else c
        return Polynomial(self, {tuple(e): c})

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.domain == self.domain
                and other.nvars == self.nvars)

    def __hash__(self):
        return hash((self.domain, self.nvars))

    def __repr__(self):
        dom = self.domain
        if isinstance(dom, ParameterRing):
            head = "%s(%s)" % ("QQ" if isinstance(dom.base, Rationals) else repr(dom.base),
                               ",".join(dom.names))
        else:
            head = repr(dom)
        return "%s[%s]" % (head, ",".join(self.names))


class Polynomial:
    """Sparse homogeneous polynomial: {exponent tuple: nonzero coefficient}.

    The zero polynomial is the empty dict and is the only inhomogeneous-free
    exception; everything else must be of one degree.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        dom = ring.domain
        clean = {}
        deg = None
        for k, v in coeffs.items():
            if dom.is_zero(v):
                continue
            if len(k) != ring.nvars:
                raise RingError("exponent tuple %r has wrong arity" % (k,))
            d = sum(k)
            if deg is None:
                deg = d
            elif d != deg:
                raise RingError("inhomogeneous polynomial (degrees %d and %d)" % (deg, d))
            clean[tuple(k)] = v
        self.ring = ring
        self.coeffs = clean

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Common degree of the terms, or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return sum(next(iter(self.coeffs)))

    def support(self):
        return sorted(self.coeffs, key=term_key, reverse=True)

    def coeff(self, e):
        return self.coeffs.get(tuple(e), self.ring.domain.zero)

    def head_term(self):
        """The (degree, degrevlex)-largest term in the support."""
        if not self.coeffs:
            raise RingError("zero polynomial has no head term")
        return max(self.coeffs, key=term_key)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, poly_scale_mul(other, -1))

    def __neg__(self):
        return poly_scale_mul(self, -1)

    def __str__(self):
        return polynomial_str(self)

    def __repr__(self):
        return "<%s>" % polynomial_str(self)


class MarkedPolynomial:
    """A polynomial with a distinguished head term carrying coefficient 1."""

    __slots__ = ("head", "body")

    def __init__(self, head, body):
        head = tuple(head)
        dom = body.ring.domain
        if not dom.eq(body.coeff(head), dom.one):
            raise RingError("head %s must appear with coefficient 1" % term_str(head))
        self.head = head
        self.body = body

    @property
    def ring(self):
        return self.body.ring

    def degree(self):
        return self.body.degree()

    def tail(self):
        """body - head."""
        c = dict(self.body.coeffs)
        c.pop(self.head)
        return Polynomial(self.body.ring, c)

    def __eq__(self, other):
        return (isinstance(other, MarkedPolynomial) and other.head == self.head
                and other.body == self.body)

    def __hash__(self):
        return hash((self.head, self.body))

    def __repr__(self):
        return "<%s => %s>" % (term_str(self.head), polynomial_str(self.body))


# ---------------------------------------------------------------------------
# the three ring operations


def poly_add(f, g):
    f.ring.check_same(g.ring)
    if not f.is_zero() and not g.is_zero() and f.degree() != g.degree():
        raise RingError("degree mismatch in sum: %d vs %d" % (f.degree(), g.degree()))
    dom = f.ring.domain
    out = dict(f.coeffs)
    for k, v in g.coeffs.items():
        w = dom.add(out.get(k, dom.zero), v)
        if dom.is_zero(w):
            out.pop(k, None)
        else:
            out[k] = w
    return Polynomial(f.ring, out)


def poly_scale_mul(f, c, t=None):
    """Multiply every term by x^t and every coefficient by c."""
    dom = f.ring.domain
    if isinstance(c, (int, Fraction)):
        c = dom.from_fraction(c)
    if t is None:
        t = unit_term(f.ring.nvars)
    t = tuple(t)
    if dom.is_zero(c):
        return f.ring.zero()
    return Polynomial(f.ring, {term_mul(k, t): dom.mul(v, c) for k, v in f.coeffs.items()})


def parameter_substitute(f, values):
    """Specialize a polynomial over a parameter ring at a point.

    values maps parameter name -> base element (ints and Fractions accepted).
    Returns a polynomial over the base ring, in the same variables.
    """
    dom = f.ring.domain
    if not isinstance(dom, ParameterRing):
        raise RingError("parameter_substitute needs a parameter-ring polynomial")
    base_ring = Ring(dom.base, f.ring.nvars)
    out = {}
    for k, v in f.coeffs.items():
        out[k] = dom.substitute(v, values)
    return Polynomial(base_ring, out)


# ---------------------------------------------------------------------------
# plain-text syntax:  x2^2 + 2*x1*x2 - 1/3*x0^2   (params as bare names)


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            toks.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            # fraction literal a/b
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                toks.append(Fraction(int(text[i:j]), int(text[j + 1:k])))
                i = k
            else:
                toks.append(Fraction(int(text[i:j])))
                i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(text[i:j])
            i = j
        else:
            raise ParseError("unexpected character %r" % ch)
    return toks


class _Parser:
    """Recursive descent over +, -, *, ^, parentheses.

    Values are dicts {(var exponents, param exponents): Fraction}; the
    homogeneity/ring checks happen after the arithmetic is done.
    """

    def __init__(self, toks, ring):
        self.toks = toks
        self.pos = 0
        self.ring = ring
        dom = ring.domain
        self.pnames = dom.names if isinstance(dom, ParameterRing) else ()

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input near token %r" % (self.peek(),))
        return v

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        acc = self.product()
        if sign < 0:
            acc = {k: -v for k, v in acc.items()}
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            term = self.product()
            for k, v in term.items():
                w = acc.get(k, Fraction(0)) + sign * v
                if w:
                    acc[k] = w
                else:
                    acc.pop(k, None)
        return acc

    def product(self):
        acc = self.atom()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                acc = self._mul(acc, self.atom())
            elif isinstance(nxt, (str, Fraction)) and nxt not in ("+", "-", "*", "^", ")"):
                # juxtaposition like 2x1
                acc = self._mul(acc, self.atom())
            else:
                return acc

    @staticmethod
    def _mul(a, b):
        out = {}
        for (xa, pa), va in a.items():
            for (xb, pb), vb in b.items():
                k = (term_mul(xa, xb), term_mul(pa, pb))
                w = out.get(k, Fraction(0)) + va * vb
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return out

    def atom(self):
        nv = self.ring.nvars
        np_ = len(self.pnames)
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            val = inner
        elif isinstance(tok, Fraction):
            val = {(unit_term(nv), unit_term(np_)): tok}
        elif isinstance(tok, str) and tok not in ("+", "-", "*", "^", ")"):
            if len(tok) > 1 and tok[0] == "x" and tok[1:].isdigit():
                i = int(tok[1:])
                if i >= nv:
                    raise ParseError("variable %s outside ring with %d variables" % (tok, nv))
                val = {(var_term(nv, i), unit_term(np_)): Fraction(1)}
            elif tok in self.pnames:
                val = {(unit_term(nv), var_term(np_, self.pnames.index(tok))): Fraction(1)}
            else:
                raise ParseError("unknown name %r" % tok)
        else:
            raise ParseError("unexpected token %r" % (tok,))
        if self.peek() == "^":
            self.take()
            p = self.take()
            if not isinstance(p, Fraction) or p.denominator != 1 or p < 0:
                raise ParseError("exponent must be a nonnegative integer")
            out = {(unit_term(nv), unit_term(np_)): Fraction(1)}
            for _ in range(int(p)):
                out = self._mul(out, val)
            val = out
        return val


def parse_polynomial(ring, text):
    raw = _Parser(_tokenize(text), ring).parse()
    dom = ring.domain
    if isinstance(dom, ParameterRing):
        np_ = dom.nparams()
        bucket = {}
        for (xe, pe), q in raw.items():
            bucket.setdefault(xe, {})[pe] = dom.base.from_fraction(q)
        out = {xe: ParamPoly(dom.base, pc) for xe, pc in bucket.items()}
    else:
        out = {}
        for (xe, pe), q in raw.items():
            assert not any(pe)
            out[xe] = dom.from_fraction(q)
    try:
        return Polynomial(ring, out)
    except RingError as e:
        raise ParseError(str(e)) from None


def polynomial_str(f):
    """Canonical rendering: degrevlex-descending terms, explicit * and ^."""
    if f.is_zero():
        return "0"
    dom = f.ring.domain
    pieces = []
    for e in f.support():
        c = f.coeffs[e]
        mono = term_str(e, f.ring.names)
        if isinstance(dom, ParameterRing):
            if len(c.coeffs) > 1:
                piece = "(%s)" % dom.coeff_str(c)
                piece = piece + "*" + mono if mono != "1" else piece
                pieces.append(piece)
                continue
            cs = dom.coeff_str(c)
        else:
            cs = dom.coeff_str(c)
        if mono == "1":
            piece = cs
        elif cs == "1":
            piece = mono
        elif cs == "-1":
            piece = "-" + mono
        else:
            piece = cs + "*" + mono
        pieces.append(piece)
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out
