"""Monomial-ideal combinatorics: quasi-stability, Pommaret bases, the
sous-escalier N(J), satiety, truncation, dimension, and the CM test.

Conventions: x0 < x1 < ... < xn.  The multiplicative variables of x^a are
x_0..x_{min(a)}; everything above min(a) is non-multiplicative.  A term
x^t in J factors involutively as x^d * x^s with x^s in the Pommaret basis
and max(x^d) <= min(x^s); for quasi-stable ideals this factorization is
unique, which is what makes every rewriting step deterministic.
"""

from itertools import combinations, combinations_with_replacement

from .rings import (RingError, term_degree, term_div, term_divides, term_key,
                    term_min_var, term_mul)


class NotQuasiStableError(RingError):
    pass


def monomials_of_degree(nv, t):
    """All degree-t exponent tuples in nv variables, ascending degrevlex."""
    out = []
    for combo in combinations_with_replacement(range(nv), t):
        e = [0] * nv
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=term_key)
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=term_key)
    out = []
    for g in gens:
        if not any(term_divides(h, g) for h in out):
            out.append(g)
    return out


class MonomialIdeal:
    """A monomial ideal held by its minimal generators (an antichain)."""

    def __init__(self, nvars, generators):
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != nvars:
                raise RingError("generator %r has wrong arity" % (g,))
        self.nvars = nvars
        self.generators = _minimalize(gens)

    def contains(self, term):
        return any(term_divides(g, term) for g in self.generators)

    def is_proper(self):
        return all(any(g) for g in self.generators)

    def max_gen_degree(self):
        return max((term_degree(g) for g in self.generators), default=0)

    def terms_of_degree(self, t):
        return [m for m in monomials_of_degree(self.nvars, t) if self.contains(m)]

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and other.nvars == self.nvars
                and other.generators == self.generators)

    def __hash__(self):
        return hash((self.nvars, tuple(self.generators)))

    def __repr__(self):
        from .rings import term_str
        return "MonomialIdeal(%s)" % ", ".join(term_str(g) for g in self.generators)


def is_quasi_stable(J):
    """Exponent-bounded test: for every generator x^a and every variable
    x_i above min(a), some power x_i^s times x^a/x_min^(a_min) must land in
    J -- and s = (max generator degree) always suffices when any s does."""
    if not J.generators:
        return True
    if not J.is_proper():
        return True
    s_bound = J.max_gen_degree()
    for g in J.generators:
        k = term_min_var(g)
        stripped = tuple(0 if i == k else e for i, e in enumerate(g))
        for i in range(k + 1, J.nvars):
            boosted = tuple(e + s_bound if j == i else e
                            for j, e in enumerate(stripped))
            if not J.contains(boosted):
                return False
    return True


def _has_involutive_divisor(pommaret, u):
    for s in pommaret:
        if term_divides(s, u) and _mult_multiple_of(s, term_div(u, s)):
            return True
    return False


def _mult_multiple_of(sigma, delta):
    """Is x^delta made of multiplicative variables of x^sigma?"""
    if not any(delta) or not any(sigma):
        # Every variable is multiplicative for the unit term.
        return True
    k = term_min_var(sigma)
    return all(e == 0 for e in delta[k + 1:])


class QuasiStableIdeal:
    """A quasi-stable monomial ideal with its computed Pommaret basis."""

    def __init__(self, ideal, pommaret):
        self.ideal = ideal
        self.pommaret = sorted(pommaret, key=term_key)
        self._factor_cache = {}
        self._sous_cache = {}

    @property
    def nvars(self):
        return self.ideal.nvars

    @property
    def generators(self):
        return self.ideal.generators

    def contains(self, term):
        return self.ideal.contains(term)

    def involutive_factor(self, u):
        """The unique (delta, sigma) with u = x^delta * x^sigma, sigma in the
        Pommaret basis, max(delta) <= min(sigma)."""
        u = tuple(u)
        hit = self._factor_cache.get(u)
        if hit is not None:
            return hit
        for s in self.pommaret:
            if term_divides(s, u):
                d = term_div(u, s)
                if _mult_multiple_of(s, d):
                    self._factor_cache[u] = (d, s)
                    return d, s
        raise RingError("term not in the ideal (no involutive divisor)")

    def pommaret_of_degree(self, t):
        return [s for s in self.pommaret if term_degree(s) == t]

    def __eq__(self, other):
        return isinstance(other, QuasiStableIdeal) and other.ideal == self.ideal

    def __hash__(self):
        return hash(self.ideal)

    def __repr__(self):
        return "QuasiStable%r" % self.ideal


def pommaret_basis(J):
    """Complete B_J to the Pommaret basis by adjoining non-multiplicative
    multiples that lack an involutive divisor, smallest first."""
    if not is_quasi_stable(J):
        raise NotQuasiStableError(
            "ideal is not quasi-stable; Pommaret completion would not terminate")
    if not J.is_proper():
        return QuasiStableIdeal(J, list(J.generators))
    cap = J.max_gen_degree() * J.nvars + J.nvars + 2
    basis = list(J.generators)
    work = sorted(basis, key=term_key)
    while work:
        tau = work.pop(0)
        k = term_min_var(tau)
        for i in range(k + 1, J.nvars):
            u = term_mul(tau, tuple(1 if j == i else 0 for j in range(J.nvars)))
            if term_degree(u) > cap:
                raise NotQuasiStableError("Pommaret completion exceeded degree cap")
            if not _has_involutive_divisor(basis, u):
                basis.append(u)
                work.append(u)
                work.sort(key=term_key)
    return QuasiStableIdeal(J, basis)


def sous_escalier(J, t):
    """All degree-t terms outside J, ascending degrevlex."""
    cache = getattr(J, "_sous_cache", None)
    if cache is not None and t in cache:
        return cache[t]
    ideal = J.ideal if isinstance(J, QuasiStableIdeal) else J
    out = [m for m in monomials_of_degree(ideal.nvars, t) if not ideal.contains(m)]
    if cache is not None:
        cache[t] = out
    return out


def satiety(J):
    """Max degree of a Pommaret-basis term divisible by x0 (0 if none).
    Equals the satiety of J: J is saturated iff this is 0."""
    degs = [term_degree(s) for s in J.pommaret if s[0] > 0]
    return max(degs) if degs else 0


def rho_invariant(J):
    """Max degree of a Pommaret-basis term divisible by x1; 1 if none."""
    degs = [term_degree(s) for s in J.pommaret if J.nvars > 1 and s[1] > 0]
    return max(degs) if degs else 1


def regularity(J):
    """Maximum degree of a Pommaret-basis element."""
    return max(term_degree(s) for s in J.pommaret)


def truncate(J, t):
    """The ideal generated by all elements of J of degree >= t."""
    ideal = J.ideal if isinstance(J, QuasiStableIdeal) else J
    gens = [g for g in ideal.generators if term_degree(g) >= t]
    gens += ideal.terms_of_degree(t)
    return pommaret_basis(MonomialIdeal(ideal.nvars, _minimalize(gens)))


def dimension_codimension(J):
    """(dim R/J, codim) by brute-force minimal vertex cover of the
    generator supports."""
    ideal = J.ideal if isinstance(J, QuasiStableIdeal) else J
    if not ideal.is_proper():
        raise RingError("dimension of the unit ideal is undefined")
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.generators]
    nv = ideal.nvars
    codim = 0
    if supports:
        for size in range(nv + 1):
            found = False
            for cover in combinations(range(nv), size):
                cs = set(cover)
                if all(s & cs for s in supports):
                    found = True
                    break
            if found:
                codim = size
                break
    return nv - codim, codim


def is_cm_quasi_stable(J):
    """CM test for quasi-stable J: no minimal generator may involve any of
    x0..x_{d-1} where d = dim R/J."""
    d, _ = dimension_codimension(J)
    return all(all(e == 0 for e in g[:d]) for g in J.generators)


def saturate_monomial(J):
    """J^sat = (J : x0^inf) for quasi-stable J: strip x0 from generators."""
    ideal = J.ideal if isinstance(J, QuasiStableIdeal) else J
    stripped = [(0,) + g[1:] for g in ideal.generators]
    return pommaret_basis(MonomialIdeal(ideal.nvars, _minimalize(stripped)))


def truncation_level(J):
    """The least t with (J^sat)_{>=t} = J; 0 when J is saturated."""
    sat = saturate_monomial(J)
    if sat.ideal == (J.ideal if isinstance(J, QuasiStableIdeal) else J):
        return 0
    top = max(term_degree(g) for g in
              (J.ideal if isinstance(J, QuasiStableIdeal) else J).generators)
    for t in range(1, top + 1):
        if truncate(sat, t).ideal == (J.ideal if isinstance(J, QuasiStableIdeal) else J):
            return t
    raise RingError("ideal is not a truncation of its saturation")


def monomial_section(J):
    """(J, x0)/(x0) as a monomial ideal in one fewer variable: drop the
    generators divisible by x0, chop the x0 exponent slot."""
    ideal = J.ideal if isinstance(J, QuasiStableIdeal) else J
    gens = [g[1:] for g in ideal.generators if g[0] == 0]
    return MonomialIdeal(ideal.nvars - 1, _minimalize(gens))


class HilbertData:
    """Degree -> dimension table, with the interpolated Hilbert polynomial
    (coefficient list, constant first) once values stabilize."""

    def __init__(self, values, polynomial=None):
        self.values = dict(values)
        self.polynomial = polynomial

    def value(self, t):
        return self.values[t]

    def poly_value(self, t):
        assert self.polynomial is not None
        acc = 0
        for c in reversed(self.polynomial):
            acc = acc * t + c
        return acc

    def poly_str(self):
        if self.polynomial is None:
            return None
        bits = []
        for k in range(len(self.polynomial) - 1, -1, -1):
            c = self.polynomial[k]
            if c == 0:
                continue
            if k == 0:
                bits.append(str(c))
            elif k == 1:
                bits.append("t" if c == 1 else "%s*t" % c)
            else:
                bits.append("t^%d" % k if c == 1 else "%s*t^%d" % (c, k))
        if not bits:
            return "0"
        out = bits[0]
        for b in bits[1:]:
            out += (" - " + b[1:]) if b.startswith("-") else (" + " + b)
        return out

    def __eq__(self, other):
        return (isinstance(other, HilbertData) and other.values == self.values
                and other.polynomial == self.polynomial)

    def __repr__(self):
        return "HilbertData(%r, p=%s)" % (self.values, self.poly_str())
