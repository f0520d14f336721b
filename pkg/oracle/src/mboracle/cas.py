"""Brute-force commutative algebra used to compute the fixture values.

Everything is elementary and degreewise: exact linear algebra over QQ on
coefficient matrices (through sympy), plus one Gröbner-basis call for
saturation.  Deliberately slow and obvious — these answers cross-check a
much faster library, so they must not share code with it; the only common
ground is the published file format and term-order convention.
"""

from fractions import Fraction

import sympy


class OracleComputationError(RuntimeError):
    pass


# ------------------------------------------------------------- term order


def term_key(e):
    """(degree, degrevlex) ascending, matching the published convention."""
    return (sum(e), tuple(-x for x in e))


def monomials(nv, d):
    """All exponent tuples of degree d, largest first."""
    if nv == 1:
        return [(d,)]
    out = []
    for first in range(d + 1):
        for rest in monomials(nv - 1, d - first):
            out.append((first,) + rest)
    out.sort(key=term_key, reverse=True)
    return out


def term_str(e):
    if not any(e):
        return "1"
    parts = []
    for i, p in enumerate(e):
        if p:
            parts.append("x%d" % i if p == 1 else "x%d^%d" % (i, p))
    return "*".join(parts)


def render(poly):
    """Canonical polynomial text: degrevlex-descending, explicit * and ^."""
    if not poly:
        return "0"
    bits = []
    for e in sorted(poly, key=term_key, reverse=True):
        cs, mono = str(poly[e]), term_str(e)
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


# ------------------------------------------------- degreewise linear algebra


def poly_degree(poly):
    return sum(next(iter(poly))) if poly else None


def multiply_term(poly, e):
    return {tuple(a + b for a, b in zip(k, e)): c for k, c in poly.items()}


def degree_rows(polys, t, nv):
    """Coefficient rows, over the degree-t monomial list, of every product
    monomial * generator landing in degree t.  Their span is the degree-t
    piece of the ideal the generators produce."""
    cols = {e: j for j, e in enumerate(monomials(nv, t))}
    rows = []
    for f in polys:
        d = poly_degree(f)
        if d is None or d > t:
            continue
        for m in monomials(nv, t - d):
            row = [Fraction(0)] * len(cols)
            for e, c in multiply_term(f, m).items():
                row[cols[e]] = c
            rows.append(row)
    return rows


def _rank(rows):
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(c) for c in r] for r in rows]).rank()


def _rref_data(rows, ncols):
    """(reduced echelon rows, pivot columns); empty-safe."""
    if not rows:
        return [], []
    mat = sympy.Matrix([[sympy.Rational(c) for c in r] for r in rows])
    red, pivots = mat.rref()
    keep = [[red[i, j] for j in range(ncols)] for i in range(len(pivots))]
    return keep, list(pivots)


def echelon_polys(rows, nv, d):
    """The reduced row echelon basis of the span, as polynomials.  Unit
    pivots over the fixed column order make this canonical for the
    subspace, independent of how the spanning rows were found."""
    mons = monomials(nv, d)
    keep, pivots = _rref_data(rows, len(mons))
    out = []
    for vec in keep:
        poly = {}
        for j, c in enumerate(vec):
            if c != 0:
                poly[mons[j]] = Fraction(int(c.p), int(c.q))
        out.append(poly)
    return out


def ideal_dimension(polys, t, nv):
    """dim of the degree-t piece of the ideal."""
    return _rank(degree_rows(polys, t, nv))


def quotient_dims(polys, nv, up_to):
    """{t: dim (R/I)_t} for t = 0..up_to."""
    return {t: len(monomials(nv, t)) - ideal_dimension(polys, t, nv)
            for t in range(up_to + 1)}


# -------------------------------------------------------------- saturation


def to_sympy(poly, syms):
    expr = sympy.Integer(0)
    for e, c in poly.items():
        term = sympy.Rational(c)
        for s, p in zip(syms, e):
            term *= s ** p
        expr += term
    return expr


def from_sympy(expr, syms):
    out = {}
    for monom, coeff in sympy.Poly(expr, *syms).terms():
        q = sympy.Rational(coeff)
        out[tuple(int(x) for x in monom)] = Fraction(int(q.p), int(q.q))
    return out


def saturation_generators(polys, nv):
    """Generators of (I : x0^inf): adjoin 1 - t*x0, eliminate t with a lex
    Gröbner basis (t largest), keep the t-free elements, and split them
    into homogeneous components (each component lies in the saturation)."""
    syms = sympy.symbols("x0:%d" % nv)
    t = sympy.Symbol("t")
    F = [to_sympy(p, syms) for p in polys if p]
    if not F:
        raise OracleComputationError("no generators to saturate")
    ordered = (t,) + tuple(reversed(syms))
    G = sympy.groebner(F + [1 - t * syms[0]], *ordered, order="lex",
                       domain=sympy.QQ)
    out = []
    for g in G.exprs:
        if t in g.free_symbols:
            continue
        by_degree = {}
        for e, c in from_sympy(g, syms).items():
            by_degree.setdefault(sum(e), {})[e] = c
        out.extend(by_degree[d] for d in sorted(by_degree))
    if not out:
        raise OracleComputationError("elimination produced no generators")
    return out


def new_generators_by_degree(inside, full, nv, up_to):
    """A minimal S with full = inside + <S> as ideals, found degree by
    degree through up_to.  Only the unambiguous case is handled: whenever
    new generators are needed in degree d, the established part must
    vanish there, so S_d is the reduced echelon basis of full_d and hence
    canonical.  Anything else raises rather than guessing a coset
    representative."""
    found = []
    for d in range(up_to + 1):
        full_rows = degree_rows(full, d, nv)
        full_rank = _rank(full_rows)
        have_rank = _rank(degree_rows(list(inside) + found, d, nv))
        if full_rank < have_rank:
            raise OracleComputationError(
                "degree %d: the claimed sub-ideal is not contained" % d)
        if full_rank == have_rank:
            continue
        if have_rank != 0:
            raise OracleComputationError(
                "no canonical complement in degree %d" % d)
        found.extend(echelon_polys(full_rows, nv, d))
    return found


# ------------------------------------------------------------------- socle


def _colon_space_rows(polys, nv, t):
    """A basis (as coefficient rows over the degree-t monomials) of
    (I : m)_t = {f : x_i * f in I_{t+1} for every i}."""
    mons_t = monomials(nv, t)
    mons_t1 = monomials(nv, t + 1)
    idx1 = {e: j for j, e in enumerate(mons_t1)}
    n, big = len(mons_t), len(mons_t1)
    b_rows, pivots = _rref_data(degree_rows(polys, t + 1, nv), big)
    stacked = []
    for i in range(nv):
        cols = []
        for u in mons_t:
            vec = [sympy.Integer(0)] * big
            shifted = tuple(u[k] + (1 if k == i else 0) for k in range(nv))
            vec[idx1[shifted]] = sympy.Integer(1)
            for r_vec, p in zip(b_rows, pivots):
                c = vec[p]
                if c:
                    vec = [a - c * b for a, b in zip(vec, r_vec)]
            cols.append(vec)
        for rowidx in range(big):
            stacked.append([cols[j][rowidx] for j in range(n)])
    if not stacked:
        return [[sympy.Integer(1) if j == k else sympy.Integer(0)
                 for j in range(n)] for k in range(n)]
    null = sympy.Matrix(stacked).nullspace()
    return [[v[k, 0] for k in range(n)] for v in null]


def socle_dimensions(polys, nv, scan_past=12):
    """{t: dim (I : m)_t / I_t}, zero entries dropped; the quotient must be
    Artinian (its dimensions must reach zero within the scan window)."""
    degs = [poly_degree(p) for p in polys if p]
    if not degs:
        raise OracleComputationError("the zero ideal is not Artinian")
    top = None
    for t in range(max(degs) + scan_past + 1):
        if len(monomials(nv, t)) == ideal_dimension(polys, t, nv):
            top = t - 1
            break
    if top is None:
        raise OracleComputationError("quotient dimensions never reach zero")
    out = {}
    for t in range(top + 1):
        s = len(_colon_space_rows(polys, nv, t)) - ideal_dimension(polys, t, nv)
        if s:
            out[t] = s
    return out


def socle_strings(polys, nv):
    """Rendered socle elements; only available when every degree carrying
    socle has I_t = 0, so that representatives are honest elements and the
    reduced echelon basis of (I : m)_t is canonical."""
    out = []
    for t in sorted(socle_dimensions(polys, nv)):
        if ideal_dimension(polys, t, nv) != 0:
            raise OracleComputationError(
                "socle representatives in degree %d are only cosets" % t)
        rows = _colon_space_rows(polys, nv, t)
        out.extend(render(p) for p in echelon_polys(rows, nv, t))
    return out


# -------------------------------------------------------- minimal generators


def minimal_generator_data(polys, nv, scan_past=12):
    """(counts by degree, total, codimension) for a minimal generating set
    of the ideal.  Degree t contributes dim I_t minus the dimension of the
    piece generated below t.  Only Artinian quotients are supported, which
    pins the codimension at the number of variables."""
    degs = sorted({poly_degree(p) for p in polys if p})
    if not degs:
        raise OracleComputationError("no generators")
    counts = {}
    for t in range(degs[0], degs[-1] + 1):
        whole = ideal_dimension(polys, t, nv)
        lower = [p for p in polys if p and poly_degree(p) < t]
        grown = _rank(degree_rows(lower, t, nv))
        if whole - grown:
            counts[t] = whole - grown
    artinian = any(
        len(monomials(nv, t)) == ideal_dimension(polys, t, nv)
        for t in range(degs[-1] + scan_past + 1))
    if not artinian:
        raise OracleComputationError(
            "codimension is only computed for Artinian quotients")
    return counts, sum(counts.values()), nv
