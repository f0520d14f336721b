"""Saturation, hyperplane sections, and the Cohen-Macaulay decision loop.

Everything here is linear algebra on a truncated marked basis.  The
saturation of the ideal is read off one x0-level at a time: splitting
each basis polynomial whose head is divisible by x0 into the part
divisible by x0^k and the rest, the new elements of (I : x0^inf) are
exactly the combinations whose non-divisible parts cancel, divided by
x0^k.  Sections modulo x0 drop the dimension by one after a degreewise
re-marking, and comparing Hilbert functions along the chain of sections
decides Cohen-Macaulayness without computing a single resolution.
"""

from fractions import Fraction
from math import comb

from .linalg import ExactMatrix
from .marked import MarkedBasis, MarkedSet, verified_basis
from .monomials import (HilbertData, MonomialIdeal, dimension_codimension,
                        is_cm_quasi_stable, monomial_section, monomials_of_degree,
                        pommaret_basis, regularity, satiety, sous_escalier,
                        truncate, truncation_level)
from .rings import (MarkedPolynomial, Polynomial, Ring, RingError, poly_add,
                    poly_scale_mul, term_degree, term_key, term_str)


# ---------------------------------------------------------------------------
# Hilbert bookkeeping


def _hilbert_polynomial(qs):
    """Coefficient list (constant first) of the Hilbert polynomial of R/J,
    interpolated exactly on the stabilized range [reg, reg + dim]."""
    if not qs.ideal.is_proper():
        return [0]
    reg = regularity(qs)
    dim = dimension_codimension(qs)[0]
    points = [(t, len(sous_escalier(qs, t))) for t in range(reg, reg + dim + 1)]
    return _newton_fit(points)


def _newton_fit(points):
    """Exact interpolating polynomial through (t, value) pairs, as a
    coefficient list with trailing zeros trimmed."""
    ts = [Fraction(t) for t, _ in points]
    dd = [Fraction(v) for _, v in points]
    for j in range(1, len(ts)):
        for i in range(len(ts) - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j])
    coeffs = [dd[-1]]
    for i in range(len(ts) - 2, -1, -1):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= ts[i] * c
        nxt[0] += dd[i]
        coeffs = nxt
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return [int(c) if c.denominator == 1 else c for c in coeffs]


def _poly_difference(p):
    """Coefficients of p(t) - p(t-1)."""
    shifted = [Fraction(0)] * len(p)
    for k, c in enumerate(p):
        c = Fraction(c)
        for j in range(k + 1):
            shifted[j] += c * comb(k, j) * (-1) ** (k - j)
    out = [Fraction(p[j]) - shifted[j] for j in range(len(p))]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return [int(c) if c.denominator == 1 else c for c in out]


def first_difference(hd):
    """The first difference of a Hilbert table: values v(t) - v(t-1) over
    the same degree range, polynomial p(t) - p(t-1)."""
    values = {}
    for t in sorted(hd.values):
        values[t] = hd.values[t] - hd.values.get(t - 1, 0)
    poly = None if hd.polynomial is None else _poly_difference(hd.polynomial)
    return HilbertData(values, poly)


def hilbert_function(I, up_to):
    """Hilbert function of R/I for a verified marked basis: the value at t
    is the number of degree-t terms outside the cover."""
    if not isinstance(I, MarkedBasis):
        raise RingError("Hilbert function needs a verified basis; use verified_basis")
    qs = I.qs
    values = {t: len(sous_escalier(qs, t)) for t in range(up_to + 1)}
    return HilbertData(values, _hilbert_polynomial(qs))


# ---------------------------------------------------------------------------
# Artinian reduction


def artinian_reduction(I, d=None):
    """Substitute x0 = ... = x_{d-1} = 0 and re-index into n - d variables.

    Only valid over a Cohen-Macaulay cover: there no head involves the
    substituted variables, so the heads survive and only tail terms drop.
    """
    if not isinstance(I, MarkedBasis):
        raise RingError("Artinian reduction needs a verified basis; use verified_basis")
    qs = I.qs
    dim = dimension_codimension(qs)[0]
    if d is None:
        d = dim
    elif d != dim:
        raise RingError("reduction depth %d does not match dim R/J = %d" % (d, dim))
    if not is_cm_quasi_stable(qs):
        raise RingError("cover is not Cohen-Macaulay; no Artinian reduction exists")
    if d == 0:
        return I
    nv = I.nvars - d
    ring = Ring(I.ring.domain, nv)
    cover = pommaret_basis(MonomialIdeal(nv, [g[d:] for g in qs.generators]))
    polys = []
    for h in I:
        body = Polynomial(ring, {e[d:]: c for e, c in h.body.coeffs.items()
                                 if not any(e[:d])})
        polys.append(MarkedPolynomial(h.head[d:], body))
    return verified_basis(MarkedSet(cover, polys))


# ---------------------------------------------------------------------------
# saturation


class SaturationLevel:
    """The level-k slice of the saturation: the heads divisible by x0, the
    nullspace vectors of "the parts not divisible by x0^k cancel", and the
    elements those vectors produce."""

    __slots__ = ("level", "heads", "vectors", "generators")

    def __init__(self, level, heads, vectors, generators):
        self.level = level
        self.heads = heads
        self.vectors = vectors
        self.generators = generators

    def __repr__(self):
        return "<level %d: %d vectors over heads [%s]>" % (
            self.level, len(self.vectors),
            ", ".join(term_str(a) for a in self.heads))


class SaturationResult:
    """(I : x0^inf) = I + <S> as a direct sum.

    socle_like_generators is S; saturated_ideal_basis is the pair (I, S)
    describing the sum.  empty_range flags the undiscussed edge where the
    truncation degree makes the level range empty while heads divisible by
    x0 exist, so S = [] is asserted rather than computed.
    """

    __slots__ = ("basis", "socle_like_generators", "levels", "m", "empty_range")

    def __init__(self, basis, generators, levels, m):
        self.basis = basis
        self.socle_like_generators = list(generators)
        self.levels = levels
        self.m = m
        self.empty_range = (m == 2 and any(h.head[0] > 0 for h in basis))

    @property
    def saturated_ideal_basis(self):
        return self.basis, tuple(self.socle_like_generators)

    def is_trivial(self):
        return not self.socle_like_generators

    def hilbert_function(self, up_to):
        """Hilbert function of R/(I : x0^inf): each emitted generator cuts
        one dimension out of the complement in its own degree."""
        qs = self.basis.qs
        extra = {}
        for g in self.socle_like_generators:
            extra[g.degree()] = extra.get(g.degree(), 0) + 1
        values = {t: len(sous_escalier(qs, t)) - extra.get(t, 0)
                  for t in range(up_to + 1)}
        return HilbertData(values, _hilbert_polynomial(qs))

    def __repr__(self):
        return "SaturationResult(%d new generators, m=%d)" % (
            len(self.socle_like_generators), self.m)


def saturate(I):
    """Saturation of I by x0 through the level decomposition.

    With J = (J^sat)_{>= m-1}, every basis polynomial whose head x0
    divides is split, for each k in 1..m-2, into h' (terms divisible by
    x0^k) and h'' (the rest); combinations with sum of h'' parts zero
    yield elements sum c_i h'_i / x0^k of the saturation outside I.
    """
    if not isinstance(I, MarkedBasis):
        raise RingError("saturation needs a verified basis; use verified_basis")
    qs = I.qs
    m = truncation_level(qs) + 1
    dom = I.ring.domain
    h0 = [h for h in I if h.head[0] > 0]
    levels = []
    generators = []
    for k in range(1, m - 1):
        if not h0:
            break
        primes, seconds = [], []
        for h in h0:
            hp, hs = {}, {}
            for e, c in h.body.coeffs.items():
                (hp if e[0] >= k else hs)[e] = c
            primes.append(hp)
            seconds.append(hs)
        support = sorted({e for hs in seconds for e in hs}, key=term_key)
        if support:
            rows = [[hs.get(e, dom.zero) for hs in seconds] for e in support]
            vectors = ExactMatrix(dom, rows).nullspace()
        else:
            # No condition at all: every coefficient is free.
            vectors = [[dom.one if i == j else dom.zero for i in range(len(h0))]
                       for j in range(len(h0))]
        emitted = []
        for v in vectors:
            combo = I.ring.zero()
            for c, hp in zip(v, primes):
                if dom.is_zero(c):
                    continue
                combo = poly_add(combo, poly_scale_mul(Polynomial(I.ring, hp), c))
            g = Polynomial(I.ring, {(e[0] - k,) + e[1:]: c
                                    for e, c in combo.coeffs.items()})
            emitted.append(g)
        levels.append(SaturationLevel(k, tuple(h.head for h in h0),
                                      vectors, emitted))
        generators.extend(emitted)
    return SaturationResult(I, generators, levels, m)


# ---------------------------------------------------------------------------
# hyperplane section


def _remark_degree(ring, cover, images, t):
    """Marked polynomials of degree t for the section ideal, by eliminating
    the span of all degree-t multiples of the images.

    Columns are ordered ideal-terms-first so that a successful elimination
    pivots exactly on the cover; a pivot falling outside it means the
    section cannot be marked at this degree."""
    dom = ring.domain
    ideal_terms = sorted(cover.ideal.terms_of_degree(t), key=term_key, reverse=True)
    outside = sorted(sous_escalier(cover, t), key=term_key, reverse=True)
    cols = ideal_terms + outside
    index = {e: i for i, e in enumerate(cols)}
    rows = []
    for g in images:
        dg = g.degree()
        if dg is None or dg > t:
            continue
        for delta in monomials_of_degree(ring.nvars, t - dg):
            gm = poly_scale_mul(g, 1, delta)
            row = [dom.zero] * len(cols)
            for e, c in gm.coeffs.items():
                row[index[e]] = c
            rows.append(row)
    red, pivots = ExactMatrix(dom, rows).rref()
    if len(pivots) != len(ideal_terms) or any(p >= len(ideal_terms) for p in pivots):
        raise RingError("hyperplane section could not be re-marked at degree %d" % t)
    out = {}
    for r, p in enumerate(pivots):
        body = Polynomial(ring, {cols[j]: red[r][j] for j in range(len(cols))})
        out[cols[p]] = body
    return out


def hyperplane_section(I, at_least=None):
    """The section modulo x0: substitute x0 = 0, re-index into one fewer
    variable, and re-mark the truncated image ideal degree by degree.

    The truncation degree is the largest of the cover's own truncation
    level, the satiety of the monomial section, and the optional floor
    `at_least` (the decision loop threads its degree bound through here).
    """
    if not isinstance(I, MarkedBasis):
        raise RingError("hyperplane section needs a verified basis; use verified_basis")
    qs = I.qs
    if I.nvars < 2:
        raise RingError("cannot section a one-variable ring")
    section = monomial_section(qs)
    if not section.generators:
        raise RingError("hyperplane section is the zero ideal")
    try:
        t0 = truncation_level(qs)
    except RingError:
        # Not truncation-shaped; the satiety floor alone fixes the degree.
        t0 = 0
    t_sec = max(t0, satiety(pommaret_basis(section)), at_least or 0)
    cover = truncate(section, t_sec)
    ring = Ring(I.ring.domain, I.nvars - 1)
    images = []
    for h in I:
        coeffs = {e[1:]: c for e, c in h.body.coeffs.items() if e[0] == 0}
        if coeffs:
            images.append(Polynomial(ring, coeffs))
    by_degree = {}
    for a in cover.pommaret:
        by_degree.setdefault(term_degree(a), []).append(a)
    polys = []
    for t in sorted(by_degree):
        marked = _remark_degree(ring, cover, images, t)
        polys.extend(MarkedPolynomial(a, marked[a]) for a in by_degree[t])
    return verified_basis(MarkedSet(cover, polys))


# ---------------------------------------------------------------------------
# the decision loop


class CmStep:
    """One record of the decision loop.  Step 0 holds the input's
    saturation and Hilbert data; each later step holds the section's
    saturation, the first difference of the previous Hilbert function,
    the section's Hilbert function, and whether they agreed."""

    __slots__ = ("step", "saturation", "hilbert", "difference",
                 "section_hilbert", "match", "note")

    def __init__(self, step, saturation, hilbert, difference=None,
                 section_hilbert=None, match=None, note=""):
        self.step = step
        self.saturation = saturation
        self.hilbert = hilbert
        self.difference = difference
        self.section_hilbert = section_hilbert
        self.match = match
        self.note = note

    def __repr__(self):
        if self.match is None:
            return "<step %d%s>" % (self.step,
                                    ": %s" % self.note if self.note else "")
        return "<step %d: %s>" % (self.step,
                                  "match" if self.match else "mismatch")


class CmVerdict:
    """Outcome of the Cohen-Macaulay check with the full comparison trace."""

    __slots__ = ("is_cm", "trace")

    def __init__(self, is_cm, trace):
        self.is_cm = is_cm
        self.trace = trace

    def __bool__(self):
        return self.is_cm

    def __repr__(self):
        return "CmVerdict(%s, %d steps)" % (self.is_cm, len(self.trace))


def cm_check(I, m=None):
    """Decide whether (I : x0^inf) is Cohen-Macaulay.

    Saturate, take the hyperplane section, saturate again, and compare the
    first difference of the Hilbert function with the section's; repeat
    dim - 1 times, sectioning one more variable away each round.  Any
    mismatch settles the verdict negatively; a Cohen-Macaulay cover or
    dimension at most one settles it positively up front.
    """
    if not isinstance(I, MarkedBasis):
        raise RingError("the decision loop needs a verified basis; use verified_basis")
    qs = I.qs
    d = dimension_codimension(qs)[0]
    sat = saturate(I)
    hd = sat.hilbert_function(regularity(qs) + 1)
    if is_cm_quasi_stable(qs):
        return CmVerdict(True, [CmStep(0, sat, hd, note="cover is Cohen-Macaulay")])
    if d <= 1:
        return CmVerdict(True, [CmStep(0, sat, hd, note="dimension at most one")])
    trace = [CmStep(0, sat, hd)]
    floor = None if m is None else m - 1
    cur, cur_sat = I, sat
    for step in range(1, d):
        section = hyperplane_section(cur, at_least=floor)
        sat_n = saturate(section)
        horizon = max(regularity(cur.qs), regularity(section.qs)) + 1
        hd_i = cur_sat.hilbert_function(horizon)
        hd_n = sat_n.hilbert_function(horizon)
        diff = first_difference(hd_i)
        match = (diff.values == hd_n.values and diff.polynomial == hd_n.polynomial)
        trace.append(CmStep(step, sat_n, hd_i, diff, hd_n, match))
        if not match:
            return CmVerdict(False, trace)
        cur, cur_sat = section, sat_n
    return CmVerdict(True, trace)
