"""Regular sequences: block partitions, sampled candidates, rank verification."""

from fractions import Fraction

import pytest

from markedbases.marked import MarkedSet, monomial_marked_set, reduce, verified_basis
from markedbases.monomials import (MonomialIdeal, dimension_codimension,
                                   pommaret_basis, sous_escalier)
from markedbases.regular_sequences import (RegSeqCandidate, regseq_find,
                                           regseq_partition, regseq_sample,
                                           regseq_verify)
from markedbases.rings import (QQ, MarkedPolynomial, Ring, RingError,
                               parse_polynomial, poly_add, poly_scale_mul,
                               polynomial_str, term_str)


def QS(nv, *gens):
    return pommaret_basis(MonomialIdeal(nv, list(gens)))


def mk(ring, qs, items):
    return MarkedSet(qs, [MarkedPolynomial(head, parse_polynomial(ring, text))
                          for head, text in items])


R3 = Ring(QQ, 3)
R4 = Ring(QQ, 4)


def P3(text):
    return parse_polynomial(R3, text)


def P4(text):
    return parse_polynomial(R4, text)


def plane_curve_basis():
    # head ideal (x2^2, x1^2) in three variables; the three tails below close
    # up into a marked basis whose quotient is one-dimensional of degree 6
    qs = QS(3, (0, 0, 2), (0, 2, 0))
    H = mk(R3, qs, [
        ((0, 0, 2), "x2^2 - x1*x2 - x0*x2 + x0*x1"),
        ((0, 2, 0), "x1^2 - x1*x2"),
        ((0, 2, 1), "x1^2*x2 - 2*x0*x1*x2 + 2*x0^2*x1"),
    ])
    return verified_basis(H)


def quadric_pair_basis():
    # same head ideal, different tails; here two of the generators already
    # generate the whole ideal
    qs = QS(3, (0, 0, 2), (0, 2, 0))
    H = mk(R3, qs, [
        ((0, 0, 2), "x2^2 - 1/2*x1*x2 - x0*x2"),
        ((0, 2, 0), "x1^2 - 1/2*x1*x2 - x0*x1"),
        ((0, 2, 1), "x1^2*x2 - 2*x0*x1*x2"),
    ])
    return verified_basis(H)


FOUR_GEN_ITEMS = [
    ((0, 0, 0, 2), "x3^2"),
    ((0, 0, 1, 1), "x2*x3 + x2^2 + 2*x1*x2 + x1^2"),
    ((0, 2, 0, 1), "x1^2*x3 - x2^3 - 4*x1*x2^2 - 5*x1^2*x2 - 2*x1^3"),
    ((0, 0, 4, 0), "x2^4 + 4*x1*x2^3 + 6*x1^2*x2^2 + 4*x1^3*x2 + x1^4"),
]


def four_gen_basis():
    qs = QS(4, *(head for head, _ in FOUR_GEN_ITEMS))
    return verified_basis(mk(R4, qs, FOUR_GEN_ITEMS))


NINE_GEN_ITEMS = [
    ((0, 0, 0, 3), "x3^3"),
    ((0, 0, 1, 2), "x2*x3^2"),
    ((0, 0, 2, 1), "x2^2*x3 + x2^3 + 2*x1*x2^2 + x1^2*x2"),
    ((0, 1, 0, 2), "x1*x3^2"),
    ((0, 1, 1, 1), "x1*x2*x3 + x1*x2^2 + 2*x1^2*x2 + x1^3"),
    ((1, 0, 0, 2), "x0*x3^2"),
    ((0, 2, 0, 1), "x1^2*x3 - x2^3 - 4*x1*x2^2 - 5*x1^2*x2 - 2*x1^3"),
    ((1, 0, 1, 1), "x0*x2*x3 + x0*x2^2 + 2*x0*x1*x2 + x0*x1^2"),
    ((0, 0, 4, 0), "x2^4 + 4*x1*x2^3 + 6*x1^2*x2^2 + 4*x1^3*x2 + x1^4"),
]


def nine_gen_basis():
    qs = QS(4, *(head for head, _ in NINE_GEN_ITEMS))
    return verified_basis(mk(R4, qs, NINE_GEN_ITEMS))


def cube_tail_basis():
    # tails reach into the smallest variable, so no sampled combination is
    # ever triangular and the top forms share the factor x2
    qs = QS(3, (0, 0, 2), (0, 3, 0))
    H = mk(R3, qs, [
        ((0, 0, 2), "x2^2"),
        ((0, 3, 0), "x1^3 - x0^3"),
        ((0, 3, 1), "x1^3*x2 - x0^3*x2"),
    ])
    return verified_basis(H)


def artinian_squares_basis():
    return verified_basis(monomial_marked_set(QS(3, (0, 0, 2), (0, 2, 0), (2, 0, 0))))


# ---------------------------------------------------------------- partition


def test_partition_blocks_by_smallest_variable():
    part = regseq_partition(plane_curve_basis())
    assert part.codimension == 2
    assert part.sizes() == (1, 2)
    assert part.head_subsets() == [["x2^2"], ["x1^2", "x1^2*x2"]]


def test_partition_nine_generators():
    part = regseq_partition(nine_gen_basis())
    assert part.sizes() == (1, 3)
    assert part.head_subsets()[0] == ["x3^3"]
    assert part.head_subsets()[1] == ["x2^2*x3", "x2*x3^2", "x2^4"]


def test_partition_prefix_codimensions():
    part = regseq_partition(nine_gen_basis())
    heads = []
    for j, block in enumerate(part.k_subsets):
        heads.extend(f.head for f in block)
        _, codim = dimension_codimension(MonomialIdeal(4, heads))
        assert codim == j + 1


def test_partition_unions_reach_block_count():
    # every union of blocks cuts out at least as many dimensions as it has blocks
    part = regseq_partition(four_gen_basis())
    blocks = part.k_subsets
    for mask in range(1, 1 << len(blocks)):
        chosen = [b for j, b in enumerate(blocks) if mask >> j & 1]
        heads = [f.head for b in chosen for f in b]
        _, codim = dimension_codimension(MonomialIdeal(4, heads))
        assert codim >= len(chosen)


def test_partition_artinian_uses_every_generator():
    I = artinian_squares_basis()
    part = regseq_partition(I)
    assert part.codimension == 3
    assert sum(part.sizes()) == len(I)


def test_partition_requires_verified_basis():
    qs = QS(3, (0, 0, 2), (0, 2, 0))
    H = mk(R3, qs, [((0, 0, 2), "x2^2"), ((0, 2, 0), "x1^2"),
                    ((0, 2, 1), "x1^2*x2")])
    with pytest.raises(RingError, match="verified basis"):
        regseq_partition(H)


# ------------------------------------------------------------------- sample


def test_sample_singleton_block_is_pinned():
    part = regseq_partition(nine_gen_basis())
    for seed in (0, 1, 2, 17):
        cand = regseq_sample(part, seed)
        assert cand.coefficients[0] == [1]
        assert cand.poly_string(0) == "x3^3"


def test_sample_is_reproducible():
    part = regseq_partition(nine_gen_basis())
    assert regseq_sample(part, 9) == regseq_sample(part, 9)
    assert regseq_sample(part, 0) != regseq_sample(part, 1)


def test_sample_respects_coefficient_bound():
    part = regseq_partition(artinian_squares_basis())
    cand = regseq_sample(part, 11, coefficient_bound=3)
    assert cand.coefficients == [[1], [1, 2], [1, 1, 2, 2]]
    for row in cand.coefficients:
        for r in row:
            assert 1 <= abs(r) <= 3


def test_sample_degrees_and_length():
    part = regseq_partition(plane_curve_basis())
    cand = regseq_sample(part, 0)
    assert len(cand) == 2
    assert cand.degrees == (2, 3)
    assert not cand.is_homogeneous()


# ------------------------------------------------------------------- verify


def test_verify_single_generator():
    rep = regseq_verify([P3("x2^2 - x1*x2 - x0*x2 + x0*x1")])
    assert rep.mode == "graded"
    assert rep.rows() == [(2, 5, 5)]
    assert rep.agrees and not rep.certified


def test_verify_rejects_zero_divisor_pair():
    # x1*(first) + (x2 - x0)*(second) = 0, so the pair drops rank from degree 3
    I = plane_curve_basis()
    f, g = I.poly((0, 0, 2)).body, I.poly((0, 2, 0)).body
    rep = regseq_verify([f, g])
    assert rep.mode == "graded"
    assert rep.rows() == [(2, 4, 4), (3, 5, 4), (4, 6, 4)]
    assert rep.mismatches() == [3, 4]
    assert not rep.agrees


def test_verify_accepts_regular_pair():
    I = plane_curve_basis()
    f, g = I.poly((0, 0, 2)).body, I.poly((0, 2, 1)).body
    rep = regseq_verify([f, g])
    assert rep.rows() == [(2, 5, 5), (3, 6, 6), (4, 6, 6), (5, 6, 6)]
    assert rep.agrees


def test_verify_bound_extends_table():
    I = plane_curve_basis()
    f, g = I.poly((0, 0, 2)).body, I.poly((0, 2, 1)).body
    rep = regseq_verify([f, g], bound=7)
    assert rep.checked_up_to == 7
    assert rep.rows()[-2:] == [(6, 6, 6), (7, 6, 6)]


def test_verify_pair_generating_whole_ideal():
    I = quadric_pair_basis()
    f, g = I.poly((0, 0, 2)).body, I.poly((0, 2, 0)).body
    rep = regseq_verify([f, g])
    assert rep.rows() == [(2, 4, 4), (3, 4, 4), (4, 4, 4)]
    assert rep.agrees


def test_verify_four_gen_quadric_pair_spans_ideal():
    # two of the four generators give a regular pair whose graded pieces
    # already fill the whole quotient staircase, hence generate the ideal
    I = four_gen_basis()
    f, g = I.poly((0, 0, 0, 2)).body, I.poly((0, 0, 1, 1)).body
    rep = regseq_verify([f, g], bound=6)
    assert rep.rows() == [(2, 8, 8), (3, 12, 12), (4, 16, 16),
                          (5, 20, 20), (6, 24, 24)]
    assert rep.agrees
    for t, observed, _ in rep.rows():
        assert observed == len(sous_escalier(I.qs, t))


def test_verify_four_gen_quartic_pair():
    I = four_gen_basis()
    f, g = I.poly((0, 0, 0, 2)).body, I.poly((0, 0, 4, 0)).body
    rep = regseq_verify([f, g])
    assert rep.rows() == [(2, 9, 9), (3, 16, 16), (4, 24, 24),
                          (5, 32, 32), (6, 40, 40)]
    assert rep.agrees


def test_verify_sum_of_generators_pair():
    I = nine_gen_basis()
    f = poly_add(I.poly((0, 0, 0, 3)).body, I.poly((0, 0, 1, 2)).body)
    g = I.poly((0, 0, 4, 0)).body
    rep = regseq_verify([f, g])
    assert rep.mode == "graded"
    assert rep.rows() == [(3, 19, 19), (4, 30, 30), (5, 42, 42),
                          (6, 54, 54), (7, 66, 66)]
    assert rep.agrees


def test_verify_full_artinian_certificate():
    rep = regseq_verify([P3("x2^2"), P3("x1^2"), P3("x0^2")])
    assert rep.mode == "graded"
    assert rep.certified
    assert rep.checked_up_to == 4
    assert rep.rows() == [(2, 3, 3), (3, 1, 1), (4, 0, 0)]


def test_verify_triangular_certificate():
    part = regseq_partition(artinian_squares_basis())
    cand = regseq_sample(part, 5)
    rep = regseq_verify(cand)
    assert rep.mode == "triangular"
    assert rep.certified
    assert rep.checked_up_to == 0 and rep.rows() == []
    assert cand.poly_string(0) == "x2^2"
    assert cand.poly_string(2) == "5*x0^2*x1*x2 - 10*x0^2*x2 + 7*x0^2*x1 + 2*x0^2"


def test_verify_windowed_accepts_cube_tails():
    part = regseq_partition(cube_tail_basis())
    cand = regseq_sample(part, 0)
    rep = regseq_verify(cand)
    assert rep.mode == "windowed"
    assert rep.rows() == [(2, 9, 9), (3, 16, 16), (4, 24, 24),
                          (5, 32, 32), (6, 40, 40)]
    assert rep.agrees and not rep.certified


def test_verify_windowed_rejects_syzygy_pair():
    # x1*f - x0*g = 0 for f = x0 - x0*x1 and g = x1 - x1^2, so the ideal
    # window stays strictly bigger than the rank a free pair would give
    R2 = Ring(QQ, 2)
    f = {(1, 0): Fraction(1), (1, 1): Fraction(-1)}
    g = {(0, 1): Fraction(1), (0, 2): Fraction(-1)}
    cand = RegSeqCandidate([f, g], [[1], [1]], 0, R2)
    rep = regseq_verify(cand)
    assert rep.mode == "windowed"
    assert rep.rows() == [(2, 4, 4), (3, 5, 4), (4, 6, 4)]
    assert rep.mismatches() == [3, 4]


def test_verify_rejects_empty_and_zero_input():
    with pytest.raises(RingError, match="nothing to verify"):
        regseq_verify([])
    with pytest.raises(RingError, match="zero polynomial"):
        regseq_verify([P3("x2^2"), R3.zero()])


def test_observed_never_below_prediction():
    I = nine_gen_basis()
    part = regseq_partition(I)
    for seed in range(6):
        rep = regseq_verify(regseq_sample(part, seed))
        for _, observed, predicted in rep.rows():
            assert observed >= predicted


# --------------------------------------------------------------------- find


def test_find_on_plane_curve():
    search = regseq_find(plane_curve_basis(), seed=0)
    assert search.found and search.attempts_used == 1
    assert search.candidate.coefficients == [[1], [3, 4]]
    assert search.report.mode == "tops"
    assert search.report.rows() == [(2, 5, 5), (3, 6, 6), (4, 6, 6), (5, 6, 6)]


def test_find_on_nine_generators():
    search = regseq_find(nine_gen_basis(), seed=0)
    assert search.found and search.attempts_used == 1
    assert search.candidate.coefficients == [[1], [3, 4, -9]]
    assert search.report.mode == "tops"
    assert search.report.rows() == [(3, 19, 19), (4, 30, 30), (5, 42, 42),
                                    (6, 54, 54), (7, 66, 66)]


def test_find_certifies_artinian_case():
    search = regseq_find(artinian_squares_basis(), seed=5)
    assert search.found and search.attempts_used == 1
    assert search.report.mode == "triangular"
    assert search.report.certified
    assert search.candidate.coefficients == [[1], [10, -2], [2, 7, -10, 5]]


def test_find_monomial_ideal_first_attempt():
    I = verified_basis(monomial_marked_set(QS(2, (3, 0), (0, 2))))
    search = regseq_find(I, seed=3)
    assert search.found and search.attempts_used == 1
    assert search.report.mode == "triangular" and search.report.certified
    assert search.candidate.coefficients == [[1], [-3, 9]]


def test_find_through_window_route():
    search = regseq_find(cube_tail_basis(), seed=0)
    assert search.found and search.attempts_used == 1
    assert search.report.mode == "windowed"


def test_find_is_reproducible():
    a = regseq_find(nine_gen_basis(), seed=4)
    b = regseq_find(nine_gen_basis(), seed=4)
    assert a.found == b.found and a.attempts_used == b.attempts_used
    assert a.candidate == b.candidate


def test_find_with_no_attempts_reports_failure():
    search = regseq_find(plane_curve_basis(), attempts=0)
    assert not search.found
    assert search.candidate is None and search.report is None
    assert search.attempts_used == 0


# ------------------------------------------------- quotient head ideals


def test_quotient_heads_need_not_stay_a_basis():
    # dividing out the pure cube leaves the head ideal
    # (x3^3, x2*x3^2, x2^2*x3, x2^4), but the matching marked set fails the
    # basis criterion: multiplying the x2^2*x3 generator by x3 leaves a
    # nonzero remainder
    qs = QS(4, (0, 0, 0, 3), (0, 0, 1, 2), (0, 0, 2, 1), (0, 0, 4, 0))
    assert [term_str(u) for u in qs.pommaret] == \
        ["x2^2*x3", "x2*x3^2", "x3^3", "x2^4"]
    keep = {head: text for head, text in NINE_GEN_ITEMS}
    K = mk(R4, qs, [(h, keep[h]) for h in qs.pommaret])
    witness = poly_scale_mul(K.poly((0, 0, 2, 1)).body, QQ.one, (0, 0, 0, 1))
    rem = reduce(K, witness).remainder
    assert polynomial_str(rem) == "x1^2*x2*x3 + x1^2*x2^2 + 2*x1^3*x2 + x1^4"
    with pytest.raises(RingError, match="not a marked basis"):
        verified_basis(K)
