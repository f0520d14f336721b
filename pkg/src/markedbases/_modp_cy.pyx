# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled modular elimination kernels; the twin of _modp.py.

Same three functions, same contracts: plain lists of ints in, plain
lists of ints in [0, p) out.  Entries are reduced mod p while loading,
with Python semantics, so negative and oversized inputs behave exactly
like the pure version.  p is assumed prime and small enough that p**2
fits in 64 bits.
"""

from libc.stdlib cimport free, malloc


cdef long long _inverse(long long a, long long p):
    # Fermat; p prime, a nonzero mod p
    cdef long long result = 1, base = a % p, e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef long long *_load(rows, Py_ssize_t nrows, Py_ssize_t ncols,
                      long long p) except NULL:
    cdef long long *m = <long long *> malloc(
        (nrows * ncols if nrows * ncols else 1) * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            m[i * ncols + j] = row[j] % p
    return m


def rref_mod(rows, p):
    """Reduced row echelon form over GF(p).

    Returns (new_rows, pivot_columns).  Input rows are not modified.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef long long pp = p
    cdef long long *m = _load(rows, nrows, ncols, pp)
    cdef Py_ssize_t i, j, c, r, piv
    cdef long long f, inv
    pivots = []
    try:
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    f = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = f
            inv = _inverse(m[r * ncols + c], pp)
            if inv != 1:
                for j in range(c, ncols):
                    m[r * ncols + j] = m[r * ncols + j] * inv % pp
            for i in range(nrows):
                if i == r:
                    continue
                f = m[i * ncols + c]
                if f:
                    for j in range(c, ncols):
                        m[i * ncols + j] = (m[i * ncols + j]
                                            - f * m[r * ncols + j]) % pp
                        if m[i * ncols + j] < 0:
                            m[i * ncols + j] += pp
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        out = [[m[i * ncols + j] for j in range(ncols)]
               for i in range(nrows)]
    finally:
        free(m)
    return out, pivots


def rank_mod(rows, p):
    """Rank over GF(p), forward elimination only."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef long long pp = p
    cdef long long *m = _load(rows, nrows, ncols, pp)
    cdef Py_ssize_t i, j, c, r, piv
    cdef long long f, inv
    try:
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    f = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = f
            inv = _inverse(m[r * ncols + c], pp)
            for i in range(r + 1, nrows):
                f = m[i * ncols + c]
                if f:
                    f = f * inv % pp
                    for j in range(c, ncols):
                        m[i * ncols + j] = (m[i * ncols + j]
                                            - f * m[r * ncols + j]) % pp
                        if m[i * ncols + j] < 0:
                            m[i * ncols + j] += pp
            r += 1
            if r == nrows:
                break
    finally:
        free(m)
    return r


def mat_mul_mod(a, b, p):
    """Matrix product over GF(p); used by the benchmark only."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t mm = len(b[0]) if k else 0
    cdef long long pp = p
    cdef long long *ma = _load(a, n, k, pp)
    cdef long long *mb
    cdef long long *mo
    cdef Py_ssize_t i, j, t
    cdef long long f
    try:
        mb = _load(b, k, mm, pp)
    except BaseException:
        free(ma)
        raise
    mo = <long long *> malloc((n * mm if n * mm else 1) * sizeof(long long))
    if mo == NULL:
        free(ma)
        free(mb)
        raise MemoryError()
    try:
        for i in range(n * mm):
            mo[i] = 0
        for i in range(n):
            for t in range(k):
                f = ma[i * k + t]
                if f:
                    for j in range(mm):
                        mo[i * mm + j] = (mo[i * mm + j]
                                          + f * mb[t * mm + j]) % pp
        out = [[mo[i * mm + j] for j in range(mm)] for i in range(n)]
    finally:
        free(ma)
        free(mb)
        free(mo)
    return out
