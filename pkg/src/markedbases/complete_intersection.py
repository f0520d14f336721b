"""Borders, border bases, and the minimization matrices deciding how many
generators are really needed.

The border of an Artinian monomial ideal J is the set of terms one
variable step outside the quotient staircase; attaching to each border
term its normal form gives the border basis of I, computable from the
marked basis alone by a normal-form recursion ordered along the variable
chain (heads divisible by x0 already sit in the basis, heads divisible
by x1 need only those, and so on).  Stacking the coefficient vectors of
the multiplicative border multiples next to the non-multiplicative
prolongations produces, degree by degree, a matrix whose complete
reduction is division-free (every structural pivot is 1).  A basis
polynomial can be discarded exactly when a reduced prolongation column
crosses its head row with a nonzero constant; since one column cannot
discard two polynomials at once, the number of generators really needed
in each degree is the head count less the rank of the crossing block,
and the ideal is a complete intersection exactly when the total matches
codim(J).
"""

from .linalg import ExactMatrix, rank_of_rows
from .marked import MarkedBasis, canonical_equations
from .monomials import dimension_codimension, regularity, sous_escalier
from .rings import (MarkedPolynomial, RingError, poly_add, poly_scale_mul,
                    term_degree, term_div, term_key, term_min_var, term_mul,
                    term_str, var_term)


# ---------------------------------------------------------------------------
# the border


class Border:
    """The border terms of an Artinian quasi-stable ideal, split into the
    part lying in the Pommaret basis and the rest."""

    __slots__ = ("qs", "terms", "term_set", "in_pommaret", "outside_pommaret")

    def __init__(self, qs, terms):
        self.qs = qs
        self.terms = sorted(terms, key=term_key)
        self.term_set = frozenset(self.terms)
        pommaret = set(qs.pommaret)
        self.in_pommaret = [u for u in self.terms if u in pommaret]
        self.outside_pommaret = [u for u in self.terms if u not in pommaret]

    def of_degree(self, t):
        return [u for u in self.terms if term_degree(u) == t]

    def __contains__(self, u):
        return tuple(u) in self.term_set

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return "Border(%d terms, %d in the Pommaret basis)" % (
            len(self.terms), len(self.in_pommaret))


def border(qs):
    """All products variable * sous-escalier term that land in the ideal."""
    d, _ = dimension_codimension(qs)
    if d != 0:
        raise RingError("border needs an Artinian ideal; R/J has dimension %d" % d)
    nv = qs.nvars
    seen = set()
    t = 0
    while True:
        layer = sous_escalier(qs, t)
        if not layer:
            break
        for m in layer:
            for i in range(nv):
                u = term_mul(m, var_term(nv, i))
                if qs.contains(u):
                    seen.add(u)
        t += 1
    missing = [s for s in qs.pommaret if s not in seen]
    if missing:
        # dividing out the minimal variable of a Pommaret element always
        # leaves the staircase, so this should be unreachable
        raise RingError("Pommaret element %s is not a border term"
                        % term_str(missing[0]))
    return Border(qs, seen)


# ---------------------------------------------------------------------------
# the border basis, by the normal-form recursion


class BorderBasis:
    """One marked polynomial b_tau = x^tau - Nf(x^tau) per border term.

    For heads in the Pommaret basis these are the marked-set members
    themselves; the rest are filled in recursively, never by reduction.
    """

    __slots__ = ("basis", "border", "by_head")

    def __init__(self, basis, bdr, by_head):
        self.basis = basis
        self.border = bdr
        self.by_head = by_head

    @property
    def ring(self):
        return self.basis.ring

    def poly(self, tau):
        return self.by_head[tuple(tau)]

    def normal_form_of_head(self, tau):
        """Nf(x^tau) of a border term, read off the stored tail."""
        return poly_scale_mul(self.by_head[tuple(tau)].tail(), -1)

    def __iter__(self):
        return iter(self.by_head[u] for u in self.border.terms)

    def __len__(self):
        return len(self.by_head)


def _recursive_border_basis(ms):
    qs = ms.qs
    bdr = border(qs)
    ring = ms.ring
    dom = ring.domain
    # Pommaret members are handed over as-is, and they must all be in place
    # before the recursion starts: a lookup below can hit one whose sort
    # position is later in its own degree block (x_k times a staircase term
    # with no variable under x_k has minimal variable x_k again).
    by_head = {tau: ms.by_head[tau] for tau in bdr.in_pommaret}
    # degree by degree; within a degree, heads with a smaller minimal
    # variable first, so every remaining lookup is already resolved
    for tau in sorted(bdr.outside_pommaret,
                      key=lambda u: (term_degree(u),
                                     term_min_var(u), term_key(u))):
        k = term_min_var(tau)
        sigma = term_div(tau, var_term(qs.nvars, k))
        nf_sigma = poly_scale_mul(by_head[sigma].tail(), -1)
        nf = ring.zero()
        for m in nf_sigma.support():
            c = nf_sigma.coeff(m)
            u = term_mul(m, var_term(qs.nvars, k))
            if qs.contains(u):
                # u is x_k times a staircase term, hence a border term:
                # either its minimal variable is below x_k (earlier block)
                # or u/x_k is the staircase term itself, putting u in the
                # Pommaret basis (seeded above)
                piece = poly_scale_mul(by_head[u].tail(), dom.neg(c))
            else:
                piece = ring.monomial(u, c)
            nf = poly_add(nf, piece)
        by_head[tau] = MarkedPolynomial(
            tau, poly_add(ring.monomial(tau), poly_scale_mul(nf, -1)))
    return BorderBasis(ms, bdr, by_head)


def border_basis(I):
    """Border basis of the ideal of a verified Artinian marked basis."""
    if not isinstance(I, MarkedBasis):
        raise RingError("border basis needs a verified basis; use verified_basis")
    return _recursive_border_basis(I)


# ---------------------------------------------------------------------------
# the minimization matrices


class MatrixColumn:
    """One labeled column: the polynomial, its block (1, 2 or 3), and a
    printable provenance label."""

    __slots__ = ("block", "label", "poly")

    def __init__(self, block, label, poly):
        self.block = block
        self.label = label
        self.poly = poly

    def __repr__(self):
        return "MatrixColumn(%d, %s)" % (self.block, self.label)


class MinimizationMatrix:
    """The degree-t dependence matrix and its complete reduction.

    Rows: multiplicative variable multiples of the degree-(t-1) border
    terms plus the degree-t Pommaret terms, ascending degrevlex; then
    (unless dropped) the degree-t sous-escalier.  Columns: the block-1
    polynomials matching the first rows one for one, then the
    prolongation columns of blocks 2 and 3.
    """

    __slots__ = ("degree", "row_labels", "columns", "matrix", "reduced",
                 "pivot_rows")

    def __init__(self, degree, row_labels, columns, matrix, reduced, pivot_rows):
        self.degree = degree
        self.row_labels = row_labels
        self.columns = columns
        self.matrix = matrix
        self.reduced = reduced
        self.pivot_rows = pivot_rows

    def column_labels(self):
        return [c.label for c in self.columns]

    def crossings(self, beta):
        """(column index, reduced entry) of every block-2/3 column at the
        row of the head term beta, zero entries included."""
        r = self.row_labels.index(tuple(beta))
        return [(j, self.reduced.rows[r][j])
                for j, c in enumerate(self.columns) if c.block > 1]

    def __repr__(self):
        return "MinimizationMatrix(t=%d, %d x %d)" % (
            self.degree, len(self.row_labels), len(self.columns))


def _times_var(f, nv, i):
    return poly_scale_mul(f, 1, var_term(nv, i))


def _block_one(bb, qs, t):
    """Multiplicative multiples of the degree-(t-1) border polynomials plus
    the degree-t basis members, as (head, column) pairs sorted by head."""
    nv = qs.nvars
    cols = []
    for tau in bb.border.of_degree(t - 1):
        b = bb.by_head[tau]
        for j in range(term_min_var(tau) + 1):
            cols.append((term_mul(tau, var_term(nv, j)), MatrixColumn(
                1, "x%d*b(%s)" % (j, term_str(tau)),
                _times_var(b.body, nv, j))))
    for tau in qs.pommaret_of_degree(t):
        cols.append((tau, MatrixColumn(1, "h(%s)" % term_str(tau),
                                       bb.basis.by_head[tau].body)))
    cols.sort(key=lambda pair: term_key(pair[0]))
    return cols


def _syzygy_columns(bb, qs, t):
    """Blocks 2 and 3: one column per generating syzygy in degree t.

    A non-multiplicative prolongation x_i b_tau gets a bare column when its
    head rewrites in one multiplicative step (the head lies in the Pommaret
    basis, or dividing out the minimal variable leaves a border term); every
    partner x_k b_gamma sharing the head with x_k non-multiplicative joins
    it in a difference column, once per pair, oriented smaller head first.
    """
    nv = qs.nvars
    pommaret = set(qs.pommaret)
    block2 = []
    block3 = []
    seen_pairs = set()
    for tau in bb.border.of_degree(t - 1):
        for i in range(term_min_var(tau) + 1, nv):
            u = term_mul(tau, var_term(nv, i))
            k0 = term_min_var(u)
            # x_k0 is multiplicative for u/x_k0 outright, since every other
            # variable of u exceeds it
            if u in pommaret or term_div(u, var_term(nv, k0)) in bb.border:
                block2.append(MatrixColumn(
                    2, "x%d*b(%s)" % (i, term_str(tau)),
                    _times_var(bb.by_head[tau].body, nv, i)))
            for k in range(k0 + 1, nv):
                if not u[k]:
                    continue
                gamma = term_div(u, var_term(nv, k))
                # gamma keeps x_k0, so x_k is non-multiplicative for it
                if gamma == tau or gamma not in bb.border:
                    continue
                if qs.contains(term_div(gamma, var_term(nv, i))):
                    continue
                pair = frozenset(((i, tau), (k, gamma)))
                if pair in seen_pairs:
                    continue
                seen_pairs.add(pair)
                first, second = sorted(((tau, i), (gamma, k)),
                                       key=lambda p: term_key(p[0]))
                lead = _times_var(bb.by_head[first[0]].body, nv, first[1])
                other = _times_var(bb.by_head[second[0]].body, nv, second[1])
                block3.append(MatrixColumn(
                    3, "x%d*b(%s) - x%d*b(%s)" % (
                        first[1], term_str(first[0]),
                        second[1], term_str(second[0])),
                    poly_add(lead, poly_scale_mul(other, -1))))
    return block2 + block3


def minimization_matrix(I, bb, t, drop_tail_rows=False):
    """The labeled degree-t matrix together with its complete reduction.

    drop_tail_rows discards the sous-escalier rows; dependence verdicts do
    not change, because every crossing sits in a pivot-bearing row.
    """
    qs = I.qs
    a = min(term_degree(s) for s in qs.pommaret)
    if not a < t <= regularity(qs) + 1:
        raise RingError("degree %d outside the minimization range (%d, %d]"
                        % (t, a, regularity(qs) + 1))
    cols = _block_one(bb, qs, t)
    head_rows = [h for h, _ in cols]
    if len(set(head_rows)) != len(head_rows):
        raise RingError("block-1 head terms collide in degree %d" % t)
    columns = [c for _, c in cols] + _syzygy_columns(bb, qs, t)
    rows = list(head_rows)
    if not drop_tail_rows:
        rows += sous_escalier(qs, t)
        covered = set(rows)
        for c in columns:
            stray = [m for m in c.poly.support() if m not in covered]
            if stray:
                raise RingError("column %s has the term %s outside the rows"
                                % (c.label, term_str(stray[0])))
    dom = I.ring.domain
    matrix = ExactMatrix(dom, [[c.poly.coeff(r) for c in columns]
                               for r in rows])
    reduced = matrix.jordan_reduce([(i, i) for i in range(len(head_rows))])
    return MinimizationMatrix(t, rows, columns, matrix, reduced,
                              len(head_rows))


# ---------------------------------------------------------------------------
# dependence and the verdict


class HeadVerdict:
    __slots__ = ("head", "degree", "dependent", "witness")

    def __init__(self, head, degree, dependent, witness):
        self.head = head
        self.degree = degree
        self.dependent = dependent
        self.witness = witness

    def __repr__(self):
        state = "dependent" if self.dependent else "independent"
        return "HeadVerdict(%s %s)" % (term_str(self.head), state)


class MinimalityReport:
    """Per-head dependence verdicts and the complete-intersection answer.

    A verdict says whether that one polynomial could be discarded; the
    counts say how many survive per degree once overlapping dependencies
    are only spent once (head count less the rank of the crossing block).
    """

    __slots__ = ("verdicts", "minimal_generator_count",
                 "is_complete_intersection", "codimension", "matrices",
                 "_counts")

    def __init__(self, verdicts, codim, matrices, counts):
        self.verdicts = verdicts
        self.codimension = codim
        self.matrices = matrices
        self._counts = {t: c for t, c in counts.items() if c}
        self.minimal_generator_count = sum(counts.values())
        self.is_complete_intersection = (
            self.minimal_generator_count == codim)

    def counts_by_degree(self):
        return dict(self._counts)

    def __repr__(self):
        return "MinimalityReport(%d minimal generators, codim %d)" % (
            self.minimal_generator_count, self.codimension)


def minimality_report(I, drop_tail_rows=False):
    """Sweep the minimization matrices upward and classify every head."""
    if not isinstance(I, MarkedBasis):
        raise RingError("minimality needs a verified basis; use verified_basis")
    qs = I.qs
    d, codim = dimension_codimension(qs)
    if d != 0:
        raise RingError("minimality needs an Artinian ideal; R/J has dimension %d" % d)
    bb = border_basis(I)
    dom = I.ring.domain
    a = min(term_degree(s) for s in qs.pommaret)
    # initial-degree members are independent outright: nothing of lower
    # degree exists to generate them, and tails never contain another head
    verdicts = [HeadVerdict(tau, a, False, None)
                for tau in qs.pommaret_of_degree(a)]
    counts = {a: len(qs.pommaret_of_degree(a))}
    matrices = {}
    for t in range(a + 1, regularity(qs) + 2):
        heads = qs.pommaret_of_degree(t)
        if not heads:
            continue
        mt = minimization_matrix(I, bb, t, drop_tail_rows=drop_tail_rows)
        matrices[t] = mt
        crossing_rows = []
        for tau in heads:
            witness = None
            crossing = mt.crossings(tau)
            for j, entry in crossing:
                if not dom.is_zero(entry):
                    witness = mt.columns[j].label
                    break
            verdicts.append(HeadVerdict(tau, t, witness is not None, witness))
            crossing_rows.append([entry for _, entry in crossing])
        counts[t] = len(heads) - rank_of_rows(dom, crossing_rows)
    return MinimalityReport(verdicts, codim, matrices, counts)


def is_complete_intersection(I):
    return minimality_report(I).is_complete_intersection


# ---------------------------------------------------------------------------
# the parametric locus


class CiLocus:
    """Crossing polynomials of the symbolic reduced matrices, head by head.

    A family member is a complete intersection exactly when enough heads
    drop out to leave codimension-many generators; a head drops out when
    one of its crossing polynomials is nonzero at the point.  The
    inequalities list flattens the distinct normalized crossings.
    """

    __slots__ = ("family", "crossings_by_head", "inequalities",
                 "required_dependent", "codimension", "reduced")

    def __init__(self, family, crossings_by_head, inequalities,
                 required_dependent, codim, reduced):
        self.family = family
        self.crossings_by_head = crossings_by_head
        self.inequalities = inequalities
        self.required_dependent = required_dependent
        self.codimension = codim
        self.reduced = reduced

    def inequality_strings(self):
        names = self.family.param_ring.names
        return [q.render(names) for q in self.inequalities]

    def __repr__(self):
        return "CiLocus(%d crossing polynomials, %d heads must drop)" % (
            len(self.inequalities), self.required_dependent)


def ci_locus(family, drop_tail_rows=False):
    """Symbolic minimization of the generic marked set of a family.

    The generic set is not a verified basis (it is one modulo the family
    equations), but the recursion and the matrices never divide, so the
    construction goes through unchanged over the parameter ring.
    """
    qs = family.qs
    d, codim = dimension_codimension(qs)
    if d != 0:
        raise RingError("locus needs an Artinian cover; R/J has dimension %d" % d)
    generic = family.generic_set
    pring = family.param_ring
    bb = _recursive_border_basis(generic)
    a = min(term_degree(s) for s in qs.pommaret)
    crossings_by_head = {}
    reduced = {}
    for t in range(a + 1, regularity(qs) + 2):
        heads = qs.pommaret_of_degree(t)
        if not heads:
            continue
        mt = minimization_matrix(generic, bb, t, drop_tail_rows=drop_tail_rows)
        reduced[t] = mt
        for tau in heads:
            crossings_by_head[tau] = [
                entry for _, entry in mt.crossings(tau)
                if not pring.is_zero(entry)]
    flat = canonical_equations(
        [q for entries in crossings_by_head.values() for q in entries], pring)
    required = len(qs.pommaret) - codim
    return CiLocus(family, crossings_by_head, flat, required, codim, reduced)
