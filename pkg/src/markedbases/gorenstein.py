"""Socles of Artinian ideals given by marked bases, and Gorenstein tests.

The socle (I : m)/I of an Artinian ideal presented by a marked basis H is
cut out by a single linear system over the coefficient domain.  Write each
h whose head is divisible by x0 as h = h' + h'' with h' the part divisible
by x0; the unknowns are one c_i per such h, the equations say that
sum c_i h''_i vanishes and that for every variable x_k the constant terms
of the rewriting coefficients of x_k * h_j vanish (the matrices A_k).  The
socle is then spanned by the sums c_i h'_i / x0 over the nullspace, and
the ideal is Gorenstein exactly when the system has corank one.

The same construction runs unchanged over a parameter ring, which turns
the rank condition into minors and yields the Gorenstein locus of a
marked family.
"""

from .cohen_macaulay import artinian_reduction
from .linalg import ExactMatrix
from .marked import (MarkedBasis, canonical_equations, marked_family, reduce)
from .monomials import dimension_codimension, is_cm_quasi_stable, sous_escalier
from .rings import (Polynomial, RingError, poly_add, poly_scale_mul, term_str,
                    var_term)


def _sous_escalier_terms(qs):
    """All of N(J) for an Artinian cover, ascending by (degree, degrevlex);
    finite because the quotient's Hilbert function cannot revive after 0."""
    out = []
    t = 0
    while True:
        layer = sous_escalier(qs, t)
        if not layer:
            break
        out.extend(layer)
        t += 1
    return out


def _split_off_x0(h, ring):
    """(h'/x0, h'') for a marked polynomial: the x0-divisible part already
    divided down, and the x0-free rest."""
    lo = {}
    hi = {}
    for e, c in h.body.coeffs.items():
        if e[0] > 0:
            hi[(e[0] - 1,) + e[1:]] = c
        else:
            lo[e] = c
    return Polynomial(ring, hi), Polynomial(ring, lo)


class SocleSystem:
    """The stacked linear system whose nullspace spans the socle modulo I.

    h0_index lists the r heads divisible by x0 in basis order; the first
    block of rows is indexed by the sous-escalier (coefficients of the
    h'' parts), followed by the n square blocks A_1..A_n.  Zero rows are
    kept internally so row indices stay meaningful; display_rows drops
    them for comparison with printed matrices.
    """

    __slots__ = ("h0_index", "h_doubleprime_terms", "h_doubleprime_rows",
                 "a_matrices", "stacked", "domain", "r")

    def __init__(self, h0_index, terms, dp_rows, a_matrices, stacked, domain):
        self.h0_index = tuple(h0_index)
        self.h_doubleprime_terms = tuple(terms)
        self.h_doubleprime_rows = dp_rows
        self.a_matrices = a_matrices
        self.stacked = stacked
        self.domain = domain
        self.r = len(self.h0_index)

    def rank(self):
        return self.stacked.rank()

    def display_rows(self):
        dom = self.domain
        return [row for row in self.stacked.rows
                if any(not dom.is_zero(x) for x in row)]

    def __repr__(self):
        return "SocleSystem(r=%d, heads %s)" % (
            self.r, ", ".join(term_str(a) for a in self.h0_index))


def _build_system(H):
    qs = H.qs
    ring = H.ring
    dom = ring.domain
    zero = (0,) * qs.nvars
    h0 = [h for h in H if h.head[0] > 0]
    r = len(h0)
    doubleprimes = [_split_off_x0(h, ring)[1] for h in h0]
    terms = _sous_escalier_terms(qs)
    dp_rows = [[f.coeff(tau) for f in doubleprimes] for tau in terms]
    mats = []
    for k in range(1, qs.nvars):
        entries = [[dom.zero] * r for _ in range(r)]
        for j, hj in enumerate(h0):
            sr = reduce(H, poly_scale_mul(hj.body, 1, var_term(qs.nvars, k)))
            for i, hi in enumerate(h0):
                coeff = sr.coefficients.get(hi.head)
                if coeff is not None:
                    entries[i][j] = coeff.coeff(zero)
        mats.append(ExactMatrix(dom, entries))
    stacked = ExactMatrix(dom, dp_rows + [row for m in mats for row in m.rows])
    return SocleSystem([h.head for h in h0], terms, dp_rows, mats, stacked, dom)


def socle_system(I):
    """The linear system of an Artinian verified basis."""
    if not isinstance(I, MarkedBasis):
        raise RingError("socle needs a verified basis; use verified_basis")
    d, _ = dimension_codimension(I.qs)
    if d != 0:
        raise RingError("socle needs an Artinian ideal; R/J has dimension %d" % d)
    return _build_system(I)


class SocleBasis:
    """Polynomials spanning (I : m) over I, one per nullspace vector."""

    __slots__ = ("elements",)

    def __init__(self, elements):
        self.elements = list(elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "SocleBasis(%d elements)" % len(self.elements)


def socle(I):
    """Basis of the socle modulo I: nullspace vectors pushed through
    c -> sum c_i h'_i / x0."""
    sys = socle_system(I)
    ring = I.ring
    dom = ring.domain
    primes = [_split_off_x0(I.by_head[a], ring)[0] for a in sys.h0_index]
    elements = []
    for v in sys.stacked.nullspace():
        e = Polynomial(ring, {})
        for ci, p in zip(v, primes):
            if not dom.is_zero(ci):
                e = poly_add(e, poly_scale_mul(p, ci))
        elements.append(e)
    return SocleBasis(elements)


def is_gorenstein(I):
    """Corank-one test: the socle is one-dimensional exactly when the
    system's rank is r - 1."""
    sys = socle_system(I)
    return sys.rank() == sys.r - 1


class GorensteinLocus:
    """Order-(r-1) minors of the symbolic system: the family member at a
    parameter point is Gorenstein exactly when some minor survives there.

    The minors are canonically normalized but deliberately not reduced
    modulo the family's own equations, which are available alongside."""

    __slots__ = ("family", "system", "minors")

    def __init__(self, family, system, minors):
        self.family = family
        self.system = system
        self.minors = minors

    @property
    def description(self):
        return ("open locus: complement of the common zero set of %d minors "
                "inside the marked scheme" % len(self.minors))

    def minor_strings(self):
        return [q.render(self.family.param_ring.names) for q in self.minors]

    def __repr__(self):
        return "GorensteinLocus(%d minors over %d parameters)" % (
            len(self.minors), len(self.family.parameters))


def gorenstein_locus(family, restriction=None):
    """All order-(r-1) minors of the stacked symbolic system of a marked
    family over an Artinian cover; restriction names extra parameters to
    force to zero before building the system."""
    fam = family
    extra = frozenset(restriction or ())
    if extra - frozenset(fam.restriction):
        fam = marked_family(fam.qs,
                            restrict=sorted(extra | frozenset(fam.restriction)))
    d, _ = dimension_codimension(fam.qs)
    if d != 0:
        raise RingError("Gorenstein locus needs an Artinian cover; "
                        "R/J has dimension %d" % d)
    sys = _build_system(fam.generic_set)
    dom = sys.domain
    live = ExactMatrix(dom, sys.display_rows())
    raw = [det for _, _, det in live.minors(sys.r - 1)]
    return GorensteinLocus(fam, sys, canonical_equations(raw, fam.param_ring))


def gorenstein_check_general(I):
    """Gorenstein test through the Artinian reduction, for a verified basis
    over a Cohen-Macaulay cover."""
    if not isinstance(I, MarkedBasis):
        raise RingError("Gorenstein check needs a verified basis; "
                        "use verified_basis")
    if not is_cm_quasi_stable(I.qs):
        raise RingError("cover is not Cohen-Macaulay; change coordinates "
                        "and re-mark first")
    return is_gorenstein(artinian_reduction(I))
