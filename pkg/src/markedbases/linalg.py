"""Dense exact linear algebra over the coefficient domains.

Fields (QQ, GF(p)) get ordinary Gauss-Jordan; GF(p) is routed through the
compiled kernels.  The parameter rings are integral domains but not fields,
so rank and determinants there go through fraction-free (Bareiss) elimination
whose divisions are provably exact.
"""

from itertools import combinations

from . import kernels
from .rings import ParameterRing, PrimeField, RingError


class ExactMatrix:
    """A dense matrix over one coefficient domain.  Immutable by convention:
    every operation returns fresh rows."""

    def __init__(self, domain, rows):
        rows = [list(r) for r in rows]
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise RingError("ragged matrix")
        self.domain = domain
        self.rows = rows

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i, j):
        return self.rows[i][j]

    def rref(self):
        """(reduced rows, pivot columns).  Fields only."""
        if isinstance(self.domain, PrimeField):
            return kernels.rref_mod(self.rows, self.domain.p)
        if not self.domain.is_field:
            raise RingError("rref needs a field; use rank/det over %r" % self.domain)
        return _rref_field(self.domain, self.rows)

    def rank(self):
        if isinstance(self.domain, PrimeField):
            return kernels.rank_mod(self.rows, self.domain.p)
        if self.domain.is_field:
            return len(_rref_field(self.domain, self.rows)[1])
        return _bareiss_rank(self.domain, self.rows)

    def nullspace(self):
        """Basis of {v : M v = 0} as lists of domain elements.  Fields only."""
        dom = self.domain
        if not dom.is_field:
            raise RingError("nullspace over %r not supported; specialize first" % dom)
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [dom.zero] * self.ncols
            v[f] = dom.one
            for r, pc in enumerate(pivots):
                v[pc] = dom.neg(red[r][f])
            basis.append(v)
        return basis

    def det(self):
        n = self.nrows
        if n != self.ncols:
            raise RingError("determinant of a non-square matrix")
        dom = self.domain
        if n == 0:
            return dom.one
        if n <= 3:
            return _small_det(dom, self.rows)
        return _bareiss_det(dom, self.rows)

    def minors(self, order):
        """Yield (row_indices, col_indices, determinant) over all order-sized
        index choices.  Zero determinants are yielded too; callers filter."""
        if order < 0 or order > min(self.nrows, self.ncols):
            return
        for ri in combinations(range(self.nrows), order):
            sub = [self.rows[i] for i in ri]
            for ci in combinations(range(self.ncols), order):
                block = [[row[j] for j in ci] for row in sub]
                yield ri, ci, ExactMatrix(self.domain, block).det()

    def jordan_reduce(self, pivots):
        """Division-free complete reduction against an ordered list of
        (row, col) pivots whose entries must be exactly 1 when used.

        Works over any domain precisely because of the unit-pivot guarantee;
        a non-unit pivot means the caller's structural assumption broke, so
        that is reported loudly rather than patched by division.
        """
        dom = self.domain
        rows = [list(r) for r in self.rows]
        for prow, pcol in pivots:
            if not dom.eq(rows[prow][pcol], dom.one):
                raise RingError(
                    "pivot at (%d,%d) is %s, expected 1" % (prow, pcol, rows[prow][pcol]))
            pr = rows[prow]
            for i in range(len(rows)):
                if i == prow:
                    continue
                f = rows[i][pcol]
                if dom.is_zero(f):
                    continue
                ri = rows[i]
                for j in range(len(ri)):
                    ri[j] = dom.sub(ri[j], dom.mul(f, pr[j]))
        return ExactMatrix(dom, rows)

    def __repr__(self):
        return "ExactMatrix(%d x %d over %r)" % (self.nrows, self.ncols, self.domain)


def _rref_field(dom, rows):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not dom.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = dom.div(dom.one, rows[r][c])
        rows[r] = [dom.mul(x, inv) for x in rows[r]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if not dom.is_zero(f):
                ri, rr = rows[i], rows[r]
                for j in range(c, ncols):
                    ri[j] = dom.sub(ri[j], dom.mul(f, rr[j]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _bareiss_rank(dom, rows):
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    prev = dom.one
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if not dom.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nr):
            ric = rows[i][c]
            for j in range(c + 1, nc):
                num = dom.sub(dom.mul(pv, rows[i][j]), dom.mul(ric, rows[r][j]))
                rows[i][j] = dom.div(num, prev)
            rows[i][c] = dom.zero
        prev = pv
        r += 1
        if r == nr:
            break
    return r


def _bareiss_det(dom, rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    prev = dom.one
    sign = 1
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if not dom.is_zero(rows[i][k]):
                piv = i
                break
        if piv is None:
            return dom.zero
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pv = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                num = dom.sub(dom.mul(pv, rows[i][j]), dom.mul(rik, rows[k][j]))
                rows[i][j] = dom.div(num, prev)
            rows[i][k] = dom.zero
        prev = pv
    d = rows[n - 1][n - 1]
    return dom.neg(d) if sign < 0 else d


def _small_det(dom, m):
    if len(m) == 1:
        return m[0][0]
    if len(m) == 2:
        return dom.sub(dom.mul(m[0][0], m[1][1]), dom.mul(m[0][1], m[1][0]))
    (a, b, c), (d, e, f), (g, h, i) = m
    pos = dom.add(dom.add(dom.mul(a, dom.mul(e, i)), dom.mul(b, dom.mul(f, g))),
                  dom.mul(c, dom.mul(d, h)))
    neg = dom.add(dom.add(dom.mul(c, dom.mul(e, g)), dom.mul(b, dom.mul(d, i))),
                  dom.mul(a, dom.mul(f, h)))
    return dom.sub(pos, neg)


def rank_of_rows(domain, rows):
    """Convenience wrapper: rank of a list of coefficient rows."""
    if not rows:
        return 0
    return ExactMatrix(domain, rows).rank()
