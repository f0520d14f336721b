"""Regular sequences of full codimension inside a marked-basis ideal.

Let I be generated by a verified basis H over the quasi-stable ideal J of
codimension c.  The members of H whose head has its smallest variable among
the last c ones form a subset K, and grouping K by that smallest variable
gives c non-empty blocks K_1, ..., K_c (block j collects the heads whose
smallest variable is x_{n-j+1}).  Every union of blocks generates a head
ideal of codimension at least the number of blocks involved, because each
block contributes a pure power of its variable.  Random combinations

    f_j = sum of r * h  over h in K_j,  r nonzero,

then cut out an ideal of codimension c for all coefficient choices outside
a proper closed locus, i.e. (f_1, ..., f_c) is a regular sequence for
generic small integers r.

Whether a concrete candidate actually is one is checked degreewise by
linear algebra, through the first applicable of four routes:

* graded -- all f_j homogeneous: the dimension of the degree-t span of
  their multiples is compared with the Koszul prediction, i.e. the
  coefficients of prod (1 - z^(d_j)) / (1 - z)^nvars.  Equality through
  degree sum(d_j) - nvars + 1 in the Artinian-complete case (c = nvars)
  pins the entire Hilbert function and yields a full certificate;
  otherwise the report only speaks for the inspected range.
* triangular -- every f_j is a pure power of a distinct variable times a
  cofactor with nonzero constant term involving only the larger chosen
  variables.  Walking the blocks from the largest variable down, each
  cofactor restricts to a nonzero constant on the vanishing locus of the
  earlier variables, so the zero set is a coordinate subspace of
  codimension c: a complete structural proof, no ranks needed.  Mixed
  degrees inside a block of a monomial basis always land here.
* tops -- the top-degree forms are homogeneous, and if they pass the
  graded route the original sequence is regular too: any excess component
  of its zero set would meet the hyperplane at infinity in the zero set
  of the top forms, which is too small.
* windowed, as a last resort for inhomogeneous candidates: spans over all
  terms up to the working degree against an inclusion-exclusion count.
  For two polynomials the count is exact, so a deficit really is an extra
  syzygy; for longer sequences interference between relation generators
  can fake a deficit, which makes a mismatch here advisory only -- the
  sampling loop just moves on to the next candidate.
"""

import itertools
import random
from math import comb

from .linalg import ExactMatrix
from .marked import MarkedBasis
from .monomials import (MonomialIdeal, dimension_codimension,
                        monomials_of_degree)
from .rings import (Polynomial, RingError, polynomial_str, term_min_var,
                    term_mul, term_str)


class RegSeqPartition:
    """The blocks K_1, ..., K_c of the candidate construction.

    k_subsets[j-1] holds the basis members whose head has smallest variable
    x_{nvars-j}, in Pommaret order.
    """

    __slots__ = ("k_subsets", "codimension", "ring")

    def __init__(self, k_subsets, codimension, ring):
        self.k_subsets = k_subsets
        self.codimension = codimension
        self.ring = ring

    def sizes(self):
        return tuple(len(block) for block in self.k_subsets)

    def head_subsets(self):
        return [[term_str(h.head) for h in block] for block in self.k_subsets]

    def __len__(self):
        return self.codimension


class RegSeqCandidate:
    """A tuple f_1, ..., f_c of block combinations.

    Blocks may mix degrees, so each f_j is stored as a plain coefficient
    dict (exponent tuple -> domain element) instead of a Polynomial;
    degrees[j] is the top degree.  coefficients[j] lists the sampled
    integers in block order, and seed reproduces them via regseq_sample.
    """

    __slots__ = ("polys", "coefficients", "seed", "degrees", "ring")

    def __init__(self, polys, coefficients, seed, ring):
        self.polys = polys
        self.coefficients = coefficients
        self.seed = seed
        self.ring = ring
        self.degrees = tuple(max(sum(e) for e in f) for f in polys)

    def is_homogeneous(self):
        return all(len({sum(e) for e in f}) == 1 for f in self.polys)

    def component_polys(self, j):
        """The homogeneous pieces of f_(j+1), ascending degree."""
        by_degree = {}
        for e, c in self.polys[j].items():
            by_degree.setdefault(sum(e), {})[e] = c
        return [Polynomial(self.ring, by_degree[t]) for t in sorted(by_degree)]

    def poly_string(self, j):
        parts = [polynomial_str(p) for p in reversed(self.component_polys(j))]
        out = parts[0]
        for piece in parts[1:]:
            out += (" - " + piece[1:]) if piece.startswith("-") else (" + " + piece)
        return out

    def __eq__(self, other):
        return (isinstance(other, RegSeqCandidate)
                and other.ring == self.ring and other.polys == self.polys
                and other.coefficients == self.coefficients)

    def __len__(self):
        return len(self.polys)


class VerificationReport:
    """Observed versus predicted quotient dimensions, degree by degree."""

    __slots__ = ("certified", "checked_up_to", "hilbert_observed",
                 "hilbert_koszul", "mode", "degrees")

    def __init__(self, certified, checked_up_to, hilbert_observed,
                 hilbert_koszul, mode, degrees):
        self.certified = certified
        self.checked_up_to = checked_up_to
        self.hilbert_observed = hilbert_observed
        self.hilbert_koszul = hilbert_koszul
        self.mode = mode
        self.degrees = degrees

    @property
    def agrees(self):
        return self.hilbert_observed == self.hilbert_koszul

    def mismatches(self):
        return sorted(t for t, dim in self.hilbert_observed.items()
                      if dim != self.hilbert_koszul[t])

    def rows(self):
        return [(t, self.hilbert_observed[t], self.hilbert_koszul[t])
                for t in sorted(self.hilbert_observed)]


class RegSeqSearch:
    """Outcome of the sample-and-verify loop."""

    __slots__ = ("found", "candidate", "report", "attempts_used", "partition")

    def __init__(self, found, candidate, report, attempts_used, partition):
        self.found = found
        self.candidate = candidate
        self.report = report
        self.attempts_used = attempts_used
        self.partition = partition


def regseq_partition(I):
    """Block decomposition of the tail variables' basis members.

    Besides building the blocks this re-checks the hypothesis they exist
    for: every union of blocks must have head-ideal codimension at least
    the number of blocks taken (done exhaustively up to codimension 6).
    """
    if not isinstance(I, MarkedBasis):
        raise RingError("regular-sequence search needs a verified basis; "
                        "use verified_basis")
    nv = I.nvars
    _, c = dimension_codimension(I.qs)
    blocks = [[] for _ in range(c)]
    for h in I:
        m = term_min_var(h.head)
        if m >= nv - c:
            blocks[nv - 1 - m].append(h)
    for j, block in enumerate(blocks, start=1):
        if not block:
            raise RingError("no basis member has head with smallest variable "
                            "x%d" % (nv - j))
    if c <= 6:
        for r in range(1, c + 1):
            for picked in itertools.combinations(range(c), r):
                heads = [h.head for i in picked for h in blocks[i]]
                _, sub_codim = dimension_codimension(MonomialIdeal(nv, heads))
                if sub_codim < r:
                    raise RingError("blocks %s generate codimension %d < %d"
                                    % (picked, sub_codim, r))
    return RegSeqPartition(blocks, c, I.ring)


def regseq_sample(partition, seed, coefficient_bound=10):
    """Draw one candidate; identical seeds give identical candidates.

    Coefficients are uniform on the nonzero integers in
    [-coefficient_bound, coefficient_bound]; the generic-coefficient
    condition only excludes a proper closed set, so small integers almost
    always work and keep the arithmetic cheap.  A one-element block needs
    no mixing at all, so its coefficient is pinned to 1.
    """
    rng = random.Random(seed)
    pool = list(range(-coefficient_bound, 0)) + list(range(1, coefficient_bound + 1))
    domain = partition.ring.domain
    polys, coefficients = [], []
    for block in partition.k_subsets:
        f, drawn = {}, []
        for h in block:
            r = 1 if len(block) == 1 else rng.choice(pool)
            drawn.append(r)
            scale = domain.from_fraction(r)
            for e, c in h.body.coeffs.items():
                acc = domain.add(f.get(e, domain.zero), domain.mul(scale, c))
                if domain.is_zero(acc):
                    f.pop(e, None)
                else:
                    f[e] = acc
        polys.append(f)
        coefficients.append(drawn)
    return RegSeqCandidate(polys, coefficients, seed, partition.ring)


def _as_dicts(target, ring):
    if isinstance(target, RegSeqCandidate):
        return target.ring, list(target.polys)
    polys = list(target)
    if not polys:
        raise RingError("nothing to verify")
    ring = ring or polys[0].ring
    dicts = []
    for f in polys:
        if isinstance(f, Polynomial):
            f = f.coeffs
        if not f:
            raise RingError("a zero polynomial is never part of a regular "
                            "sequence")
        dicts.append(dict(f))
    return ring, dicts


def _koszul_quotient(degrees, nv, upto):
    series = [1]
    for d in degrees:
        nxt = [0] * (len(series) + d)
        for i, c in enumerate(series):
            nxt[i] += c
            nxt[i + d] -= c
        series = nxt
    for _ in range(nv):
        acc, run = [], 0
        for i in range(upto + 1):
            run += series[i] if i < len(series) else 0
            acc.append(run)
        series = acc
    return series[:upto + 1]


def _span_rank(ring, rows_spec, columns):
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for f, shift in rows_spec:
        row = [ring.domain.zero] * len(index)
        for e, c in f.items():
            row[index[term_mul(e, shift)]] = c
        rows.append(row)
    if not rows:
        return 0
    return ExactMatrix(ring.domain, rows).rank()


def _graded_report(ring, dicts, degrees, bound, mode):
    nv = ring.nvars
    c = len(dicts)
    full_bound = sum(degrees) - nv + 1
    if bound is None:
        bound = full_bound if c == nv else sum(degrees)
    kq = _koszul_quotient(sorted(degrees), nv, bound)
    observed, predicted = {}, {}
    for t in range(min(degrees), bound + 1):
        columns = monomials_of_degree(nv, t)
        spec = [(f, g) for f, d in zip(dicts, degrees) if t >= d
                for g in monomials_of_degree(nv, t - d)]
        observed[t] = len(columns) - _span_rank(ring, spec, columns)
        predicted[t] = kq[t]
    certified = (c == nv and bound >= full_bound and observed == predicted)
    return VerificationReport(certified, bound, observed, predicted, mode,
                              tuple(degrees))


def _filtered_report(ring, dicts, degrees, bound):
    nv = ring.nvars
    c = len(dicts)
    if bound is None:
        bound = sum(degrees)
    observed, predicted = {}, {}
    for t in range(min(degrees), bound + 1):
        columns = [m for d in range(t + 1) for m in monomials_of_degree(nv, d)]
        spec = [(f, g) for f, d in zip(dicts, degrees)
                for dd in range(t - d + 1)
                for g in monomials_of_degree(nv, dd)]
        ideal_pred = 0
        for r in range(1, c + 1):
            for sub in itertools.combinations(range(c), r):
                m = t - sum(degrees[i] for i in sub)
                if m >= 0:
                    ideal_pred += (-1) ** (r + 1) * comb(m + nv, nv)
        observed[t] = len(columns) - _span_rank(ring, spec, columns)
        predicted[t] = len(columns) - ideal_pred
    return VerificationReport(False, bound, observed, predicted, "windowed",
                              tuple(degrees))


def _triangular_structure(dicts):
    """(variable, cofactor-support) per poly when each factors as a pure
    power of one variable times a constant-term cofactor, else None."""
    shape = []
    for f in dicts:
        support = list(f)
        mins = [min(e[k] for e in support) for k in range(len(support[0]))]
        carriers = [k for k, m in enumerate(mins) if m]
        if len(carriers) != 1 or tuple(mins) not in f:
            return None
        v = carriers[0]
        cof_vars = set()
        for e in support:
            cof_vars.update(k for k in range(len(e)) if e[k] - mins[k])
        if any(k <= v for k in cof_vars):
            return None
        shape.append((v, cof_vars))
    chosen = [v for v, _ in shape]
    if len(set(chosen)) != len(chosen):
        return None
    larger = set()
    for v, cof_vars in sorted(shape, reverse=True):
        if not cof_vars <= larger:
            return None
        larger.add(v)
    return shape


def regseq_verify(target, bound=None, ring=None):
    """Degreewise span-versus-Koszul comparison of a candidate.

    target is a RegSeqCandidate or a sequence of homogeneous Polynomials.
    The default bound is sum of the degrees, lowered to
    sum(degrees) - nvars + 1 in the Artinian-complete case, which is
    exactly the certificate range there.  The route taken (see the module
    docstring) is recorded in the report's mode field.
    """
    ring, dicts = _as_dicts(target, ring)
    nv = ring.nvars
    degrees = [max(sum(e) for e in f) for f in dicts]
    if all(len({sum(e) for e in f}) == 1 for f in dicts):
        return _graded_report(ring, dicts, degrees, bound, "graded")
    if _triangular_structure(dicts) is not None:
        return VerificationReport(len(dicts) == nv, 0, {}, {}, "triangular",
                                  tuple(degrees))
    tops = [{e: c for e, c in f.items() if sum(e) == d}
            for f, d in zip(dicts, degrees)]
    top_report = _graded_report(ring, tops, degrees, bound, "tops")
    if top_report.agrees:
        return top_report
    return _filtered_report(ring, dicts, degrees, bound)


def regseq_find(I, attempts=20, seed=0, bound=None, coefficient_bound=10):
    """Sample-and-verify loop; attempt k uses seed + k.

    Returns the first candidate whose report agrees everywhere; after
    exhausting the attempts, the candidate with the fewest mismatched
    degrees is reported instead, with found = False.
    """
    partition = regseq_partition(I)
    best = None
    for k in range(attempts):
        candidate = regseq_sample(partition, seed + k,
                                  coefficient_bound=coefficient_bound)
        report = regseq_verify(candidate, bound=bound)
        if report.agrees:
            return RegSeqSearch(True, candidate, report, k + 1, partition)
        if best is None or len(report.mismatches()) < len(best[1].mismatches()):
            best = (candidate, report)
    if best is None:
        return RegSeqSearch(False, None, None, 0, partition)
    return RegSeqSearch(False, best[0], best[1], attempts, partition)
