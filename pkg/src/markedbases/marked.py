"""Marked sets and bases over a quasi-stable ideal.

A marked set carries exactly one polynomial per Pommaret-basis element,
with that element as head and every other term outside the ideal.  Because
involutive factorization is unique, rewriting by multiplicative multiples
is deterministic, and everything else here -- standard representations,
the basis criterion, fundamental syzygies, the generic parametric family
-- is a thin layer over the one `reduce` loop.
"""

from .monomials import dimension_codimension, monomials_of_degree, sous_escalier
from .rings import (QQ, MarkedPolynomial, ParameterRing, Polynomial, Ring,
                    RingError, parameter_substitute, poly_add, poly_scale_mul,
                    term_degree, term_key, term_min_var, term_str, var_term)


class MarkedSet:
    """One marked polynomial per Pommaret-basis element, tails in N(J)."""

    def __init__(self, qs, polys):
        polys = list(polys)
        if not polys:
            raise RingError("a marked set cannot be empty")
        ring = polys[0].ring
        by_head = {}
        for h in polys:
            ring.check_same(h.ring)
            if h.head in by_head:
                raise RingError("duplicate head %s" % term_str(h.head))
            by_head[h.head] = h
        if sorted(by_head, key=term_key) != qs.pommaret:
            raise RingError("heads must be exactly the Pommaret basis")
        for h in polys:
            for e in h.tail().coeffs:
                if qs.contains(e):
                    raise RingError("tail term %s of %s lies in the ideal"
                                    % (term_str(e), term_str(h.head)))
        self.qs = qs
        self.ring = ring
        self.by_head = by_head

    @property
    def nvars(self):
        return self.ring.nvars

    def poly(self, alpha):
        return self.by_head[tuple(alpha)]

    def __iter__(self):
        return iter(self.by_head[a] for a in self.qs.pommaret)

    def __len__(self):
        return len(self.by_head)

    def multiplicative_multiples(self, t):
        """H^(t): pairs (head term, x^delta * h), one per degree-t ideal term,
        via the involutive factorization; ascending degrevlex by head."""
        out = []
        for u in self.qs.ideal.terms_of_degree(t):
            d, a = self.qs.involutive_factor(u)
            out.append((u, poly_scale_mul(self.by_head[a].body, 1, d)))
        return out

    def __repr__(self):
        return "MarkedSet(%d polynomials over %r)" % (len(self), self.qs)


class MarkedBasis(MarkedSet):
    """A marked set whose basis property has been verified.

    Construct through `verified_basis`, never directly, so that holding a
    MarkedBasis always certifies the prolongation test passed.
    """


class StandardRepresentation:
    """f = sum coefficients[alpha] * h_alpha + remainder, remainder in <N(J)>.

    Each coefficient polynomial is supported on multiplicative terms of its
    head, by construction of the rewriting.
    """

    __slots__ = ("marked_set", "coefficients", "remainder")

    def __init__(self, marked_set, coefficients, remainder):
        self.marked_set = marked_set
        self.coefficients = {a: p for a, p in coefficients.items()
                             if not p.is_zero()}
        self.remainder = remainder

    def coefficient(self, alpha):
        return self.coefficients.get(tuple(alpha), self.marked_set.ring.zero())

    def reconstruct(self):
        """Evaluate sum coefficients * h + remainder (the rewritten input)."""
        acc = self.remainder
        for a, p in self.coefficients.items():
            h = self.marked_set.by_head[a].body
            for e, c in p.coeffs.items():
                acc = poly_add(acc, poly_scale_mul(h, c, e))
        return acc

    def __repr__(self):
        heads = ", ".join(term_str(a) for a in sorted(self.coefficients, key=term_key))
        return "<Sr heads=[%s] remainder=%s>" % (heads, self.remainder)


def nonmultiplicative_pairs(qs):
    """(Pommaret element, variable index) with the variable above min(head),
    heads ascending, variable indices ascending."""
    out = []
    for a in qs.pommaret:
        if not any(a):
            continue
        for i in range(term_min_var(a) + 1, qs.nvars):
            out.append((a, i))
    return out


def reduce(H, f):
    """Rewrite f by H, always eliminating the degrevlex-largest term that
    lies in the ideal; the multiplier drops lexicographically at each step,
    so this terminates, and the remainder is supported in N(J)."""
    H.ring.check_same(f.ring)
    qs = H.qs
    coeffs = {}
    work = f
    while True:
        target = None
        for e in work.support():
            if qs.contains(e):
                target = e
                break
        if target is None:
            break
        lam = work.coeffs[target]
        delta, alpha = qs.involutive_factor(target)
        work = work - poly_scale_mul(H.by_head[alpha].body, lam, delta)
        step = Polynomial(H.ring, {delta: lam})
        coeffs[alpha] = poly_add(coeffs[alpha], step) if alpha in coeffs else step
    return StandardRepresentation(H, coeffs, work)


def reduce_random(H, f, rng):
    """Like `reduce` but eliminating a randomly chosen reducible term each
    step.  Over a verified basis the remainder must agree with `reduce`
    (confluence); the property suite exercises exactly that."""
    H.ring.check_same(f.ring)
    qs = H.qs
    coeffs = {}
    work = f
    while True:
        reducible = [e for e in work.support() if qs.contains(e)]
        if not reducible:
            break
        target = rng.choice(reducible)
        lam = work.coeffs[target]
        delta, alpha = qs.involutive_factor(target)
        work = work - poly_scale_mul(H.by_head[alpha].body, lam, delta)
        step = Polynomial(H.ring, {delta: lam})
        coeffs[alpha] = poly_add(coeffs[alpha], step) if alpha in coeffs else step
    return StandardRepresentation(H, coeffs, work)


class BasisCheck:
    """Outcome of the prolongation test; falsy iff some prolongation fails,
    with the failing (head, variable, remainder) triples listed."""

    __slots__ = ("is_basis", "failures")

    def __init__(self, is_basis, failures):
        self.is_basis = is_basis
        self.failures = failures

    def __bool__(self):
        return self.is_basis

    def __repr__(self):
        if self.is_basis:
            return "BasisCheck(pass)"
        return "BasisCheck(fail at %s)" % ", ".join(
            "(%s, x%d)" % (term_str(a), i) for a, i, _ in self.failures)


def is_marked_basis(H):
    """Every non-multiplicative prolongation x_i*h_alpha must rewrite to
    remainder zero."""
    failures = []
    for a, i in nonmultiplicative_pairs(H.qs):
        f = poly_scale_mul(H.by_head[a].body, 1, var_term(H.nvars, i))
        sr = reduce(H, f)
        if not sr.remainder.is_zero():
            failures.append((a, i, sr.remainder))
    return BasisCheck(not failures, failures)


def verified_basis(H):
    """Run the basis criterion and promote H, or raise with the first
    failing prolongation."""
    if isinstance(H, MarkedBasis):
        return H
    check = is_marked_basis(H)
    if not check:
        a, i, rem = check.failures[0]
        raise RingError("not a marked basis: x%d * (%s-polynomial) leaves %s"
                        % (i, term_str(a), rem))
    return MarkedBasis(H.qs, list(H))


def normal_form(I, f):
    """The unique element of <N(J)> congruent to f modulo the ideal (I)."""
    if not isinstance(I, MarkedBasis):
        raise RingError("normal form needs a verified basis; use verified_basis")
    return reduce(I, f).remainder


class FundamentalSyzygy:
    """The standard representation of one non-multiplicative prolongation:
    sum components[alpha'] * h_alpha' equals x_i * h_alpha exactly."""

    __slots__ = ("source", "components", "_ring")

    def __init__(self, source, components, ring):
        self.source = source
        self.components = components
        self._ring = ring

    def relation(self):
        """Syzygy form: components minus x_i at the source head, so the
        weighted sum over the basis is zero."""
        alpha, i = self.source
        out = dict(self.components)
        xi = Polynomial(self._ring, {var_term(self._ring.nvars, i):
                                     self._ring.domain.one})
        out[alpha] = out.get(alpha, self._ring.zero()) - xi
        return out

    def __repr__(self):
        a, i = self.source
        return "<syzygy of x%d * h(%s)>" % (i, term_str(a))


def fundamental_syzygies(I):
    """One syzygy per (Pommaret element, non-multiplicative variable) pair."""
    if not isinstance(I, MarkedBasis):
        raise RingError("fundamental syzygies need a verified basis")
    out = []
    for a, i in nonmultiplicative_pairs(I.qs):
        sr = reduce(I, poly_scale_mul(I.by_head[a].body, 1, var_term(I.nvars, i)))
        out.append(FundamentalSyzygy((a, i), sr.coefficients, I.ring))
    return out


def codimension_bounds(H):
    """codim(J) bounds codim((H)) from below; equality is certified exactly
    when H is a marked basis."""
    codim = dimension_codimension(H.qs.ideal)[1]
    exact = isinstance(H, MarkedBasis) or bool(is_marked_basis(H))
    return codim, exact


def multiples_matrix(H, t):
    """(heads, column terms, coefficient rows) of H^(t) over the degree-t
    monomials, ascending degrevlex both ways.  For a marked basis the row
    rank equals the number of degree-t ideal terms."""
    cols = monomials_of_degree(H.nvars, t)
    index = {e: k for k, e in enumerate(cols)}
    zero = H.ring.domain.zero
    heads, rows = [], []
    for u, g in H.multiplicative_multiples(t):
        row = [zero] * len(cols)
        for e, c in g.coeffs.items():
            row[index[e]] = c
        heads.append(u)
        rows.append(row)
    return heads, cols, rows


# ---------------------------------------------------------------------------
# the generic family over K[C]


def parameter_name(i, j):
    """d<i><j>; underscore separator once an index needs two digits."""
    if i > 9 or j > 9:
        return "d%d_%d" % (i, j)
    return "d%d%d" % (i, j)


class MarkedFamily:
    """The generic marked set over K[C] together with the equations cutting
    out the locus of parameter values where it is a basis.

    Parameters are named d<i><j>: i indexes the Pommaret basis ascending
    (degree, degrevlex), j the same-degree sous-escalier ascending
    degrevlex, both 1-based.
    """

    __slots__ = ("qs", "param_ring", "ring", "generic_set", "equations",
                 "restriction")

    def __init__(self, qs, param_ring, ring, generic_set, equations, restriction):
        self.qs = qs
        self.param_ring = param_ring
        self.ring = ring
        self.generic_set = generic_set
        self.equations = equations
        self.restriction = restriction

    @property
    def parameters(self):
        return self.param_ring.names

    def specialize(self, values):
        """The numeric marked set at a parameter point (name -> value)."""
        polys = [MarkedPolynomial(h.head, parameter_substitute(h.body, values))
                 for h in self.generic_set]
        return MarkedSet(self.qs, polys)

    def equation_strings(self):
        return [q.render(self.param_ring.names) for q in self.equations]

    def __repr__(self):
        return ("MarkedFamily(%d parameters, %d equations)"
                % (len(self.parameters), len(self.equations)))


def canonical_equations(eqs, pring):
    """Drop zeros, content-normalize (primitive, positive leading coefficient),
    deduplicate, and sort deterministically."""
    seen = []
    for q in eqs:
        if q.is_zero():
            continue
        q = q.content_normalized()
        if q not in seen:
            seen.append(q)
    seen.sort(key=lambda q: (q.degree(), len(q.coeffs), q.render(pring.names)))
    return seen


def marked_family(qs, restrict=None):
    """Generic marked set h_alpha = x^alpha + sum d<i><j> x^eta over QQ[C],
    and the x-coefficients of its reduced non-multiplicative prolongations.

    restrict: optional iterable of parameter names forced to zero (their
    tail terms are simply omitted); the remaining names keep their position-
    based spelling so restricted and full families stay comparable.
    """
    triples = []
    for i, a in enumerate(qs.pommaret, start=1):
        for j, eta in enumerate(sous_escalier(qs, term_degree(a)), start=1):
            triples.append((parameter_name(i, j), a, eta))
    all_names = [nm for nm, _, _ in triples]
    drop = frozenset(restrict or ())
    unknown = drop - frozenset(all_names)
    if unknown:
        raise RingError("unknown parameters in restriction: %s"
                        % ", ".join(sorted(unknown)))
    kept = [(nm, a, eta) for nm, a, eta in triples if nm not in drop]
    pring = ParameterRing(QQ, [nm for nm, _, _ in kept])
    ring = Ring(pring, qs.nvars)
    polys = []
    for a in qs.pommaret:
        coeffs = {a: pring.one}
        for nm, a2, eta in kept:
            if a2 == a:
                coeffs[eta] = pring.param(nm)
        polys.append(MarkedPolynomial(a, Polynomial(ring, coeffs)))
    generic = MarkedSet(qs, polys)
    raw = []
    for a, i in nonmultiplicative_pairs(qs):
        sr = reduce(generic, poly_scale_mul(generic.by_head[a].body, 1,
                                            var_term(qs.nvars, i)))
        for e in sorted(sr.remainder.coeffs, key=term_key):
            raw.append(sr.remainder.coeffs[e])
    equations = canonical_equations(raw, pring)
    return MarkedFamily(qs, pring, ring, generic, equations,
                        tuple(sorted(drop)))


def monomial_marked_set(qs, domain=QQ):
    """The tail-free marked set: each Pommaret element marked on itself.
    Always a basis."""
    ring = Ring(domain, qs.nvars)
    return MarkedSet(qs, [MarkedPolynomial(a, ring.monomial(a))
                          for a in qs.pommaret])
