"""Pure-Python modular elimination kernels.

Row operations over GF(p) on plain lists of ints.  The compiled extension
(_modp_cy) implements the same three functions; kernels.py picks whichever
imports.  Keep signatures in sync.
"""


def rref_mod(rows, p):
    """Reduced row echelon form over GF(p).

    Returns (new_rows, pivot_columns).  Input rows are not modified.
    """
    rows = [[x % p for x in r] for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        if inv != 1:
            rows[r] = [x * inv % p for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * rr[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank_mod(rows, p):
    """Rank over GF(p), forward elimination only."""
    rows = [[x % p for x in r] for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rr = rows[r]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                f = f * inv % p
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * rr[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def mat_mul_mod(a, b, p):
    """Matrix product over GF(p); used by the benchmark only."""
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai, oi = a[i], out[i]
        for t in range(k):
            f = ai[t]
            if f:
                bt = b[t]
                for j in range(m):
                    oi[j] = (oi[j] + f * bt[j]) % p
    return out
