"""Saturation levels, hyperplane sections, and the Cohen-Macaulay loop."""

import sys
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))
import oracles

from markedbases.cohen_macaulay import (artinian_reduction, cm_check,
                                        first_difference, hilbert_function,
                                        hyperplane_section, saturate)
from markedbases.marked import MarkedSet, monomial_marked_set, normal_form, verified_basis
from markedbases.monomials import (HilbertData, MonomialIdeal, pommaret_basis,
                                   regularity, sous_escalier)
from markedbases.rings import (QQ, MarkedPolynomial, Ring, RingError,
                               parse_polynomial, poly_scale_mul)


def QS(nv, *gens):
    return pommaret_basis(MonomialIdeal(nv, list(gens)))


def mk_basis(ring, qs, items):
    return verified_basis(MarkedSet(qs, [
        MarkedPolynomial(head, parse_polynomial(ring, text))
        for head, text in items]))


def as_dict(f):
    return {e: Fraction(c) for e, c in f.coeffs.items()}


def four_var_truncation():
    # The degree-3 truncation of a saturated dim-2 ideal; nine elements,
    # two of them with head divisible by x0.
    ring = Ring(QQ, 4)
    qs = QS(4, (0, 0, 0, 3), (0, 0, 1, 2), (0, 0, 2, 1), (0, 1, 0, 2),
            (0, 1, 1, 1), (1, 0, 0, 2), (0, 2, 0, 1), (1, 0, 1, 1),
            (0, 0, 4, 0))
    I = mk_basis(ring, qs, [
        ((0, 0, 0, 3), "x3^3"),
        ((0, 0, 1, 2), "x2*x3^2"),
        ((0, 0, 2, 1), "x2^2*x3 + x2^3 + 2*x1*x2^2 + x1^2*x2"),
        ((0, 1, 0, 2), "x1*x3^2"),
        ((0, 1, 1, 1), "x1*x2*x3 + x1*x2^2 + 2*x1^2*x2 + x1^3"),
        ((1, 0, 0, 2), "x0*x3^2"),
        ((0, 2, 0, 1), "x1^2*x3 - x2^3 - 4*x1*x2^2 - 5*x1^2*x2 - 2*x1^3"),
        ((1, 0, 1, 1), "x0*x2*x3 + x0*x2^2 + 2*x0*x1*x2 + x0*x1^2"),
        ((0, 0, 4, 0), "x2^4 + 4*x1*x2^3 + 6*x1^2*x2^2 + 4*x1^3*x2 + x1^4"),
    ])
    return ring, qs, I


def five_var_saturated():
    # A saturated dim-3 basis in five variables; the cover's Pommaret basis
    # needs one completion element (x2*x3*x4) beyond the minimal generators,
    # and that element happens to lie in the ideal as a plain monomial.
    ring = Ring(QQ, 5)
    qs = QS(5, (0, 0, 1, 0, 1), (0, 0, 0, 0, 2), (0, 1, 0, 1, 1),
            (0, 0, 1, 2, 0), (0, 0, 0, 3, 0), (0, 0, 0, 2, 1))
    I = mk_basis(ring, qs, [
        ((0, 0, 1, 0, 1), "x2*x4 - x3^2 - x3*x4"),
        ((0, 0, 0, 0, 2), "x4^2"),
        ((0, 1, 0, 1, 1), "x1*x3^2 + x1*x3*x4"),
        ((0, 0, 1, 2, 0), "x2*x3^2"),
        ((0, 0, 0, 3, 0), "x3^3"),
        ((0, 0, 0, 2, 1), "x3^2*x4"),
        ((0, 0, 1, 1, 1), "x2*x3*x4"),
    ])
    return ring, qs, I


def cm_cover_basis():
    # dim 1, cover untouched by x0, nontrivial tails that are pure x0-noise.
    ring = Ring(QQ, 3)
    qs = QS(3, (0, 0, 2), (0, 1, 1), (0, 3, 0))
    I = mk_basis(ring, qs, [
        ((0, 0, 2), "x2^2"),
        ((0, 1, 1), "x1*x2 + x0*x2"),
        ((0, 3, 0), "x1^3 + x0*x1^2"),
    ])
    return ring, qs, I


# ---------------------------------------------------------------------------
# Hilbert bookkeeping


def test_hilbert_function_of_truncated_basis():
    _, _, I = four_var_truncation()
    hd = hilbert_function(I, 6)
    assert [hd.value(t) for t in range(7)] == [1, 4, 10, 12, 16, 20, 24]
    assert hd.polynomial == [0, 4]
    assert hd.poly_str() == "4*t"


def test_hilbert_function_of_saturated_five_vars():
    _, _, I = five_var_saturated()
    hd = hilbert_function(I, 4)
    assert [hd.value(t) for t in range(5)] == [1, 5, 13, 22, 33]
    assert hd.polynomial == [1, 4, 1]
    assert hd.poly_str() == "t^2 + 4*t + 1"
    assert hd.poly_value(2) == 13  # already polynomial from degree 2 on


def test_hilbert_function_artinian_counts():
    I = verified_basis(monomial_marked_set(QS(2, (2, 0), (0, 2))))
    hd = hilbert_function(I, 4)
    assert [hd.value(t) for t in range(5)] == [1, 2, 1, 0, 0]
    assert hd.polynomial == [0]


def test_hilbert_function_requires_verified_basis():
    H = monomial_marked_set(QS(2, (2, 0), (0, 2)))
    with pytest.raises(RingError):
        hilbert_function(H, 3)


def test_first_difference_table():
    hd = HilbertData({0: 1, 1: 4, 2: 8, 3: 12}, [0, 4])
    diff = first_difference(hd)
    assert diff.values == {0: 1, 1: 3, 2: 4, 3: 4}
    assert diff.polynomial == [4]
    quad = first_difference(HilbertData({0: 1}, [1, 4, 1]))
    assert quad.polynomial == [3, 2]  # (t^2+4t+1) - ((t-1)^2+4(t-1)+1)


# ---------------------------------------------------------------------------
# Artinian reduction


def test_artinian_reduction_drops_leading_variable():
    _, _, I = cm_cover_basis()
    red = artinian_reduction(I)
    assert red.nvars == 2
    assert sorted(red.by_head) == [(0, 2), (1, 1), (3, 0)]
    # every tail term carried an x0, so the reduction is monomial
    assert all(h.tail().is_zero() for h in red)
    before = hilbert_function(I, 4)
    after = hilbert_function(red, 4)
    assert first_difference(before).values == after.values


def test_artinian_reduction_identity_when_artinian():
    I = verified_basis(monomial_marked_set(QS(2, (2, 0), (0, 2))))
    assert artinian_reduction(I) is I


def test_artinian_reduction_of_monomial_cover():
    I = verified_basis(monomial_marked_set(QS(3, (0, 2, 0), (0, 0, 2))))
    red = artinian_reduction(I, d=1)
    assert red.nvars == 2
    assert red.qs.generators == [(2, 0), (0, 2)]
    assert all(h.tail().is_zero() for h in red)


def test_artinian_reduction_rejects_bad_input():
    not_cm = verified_basis(monomial_marked_set(QS(2, (1, 1), (0, 2))))
    with pytest.raises(RingError):
        artinian_reduction(not_cm)
    _, _, I = cm_cover_basis()
    with pytest.raises(RingError):
        artinian_reduction(I, d=2)  # dim R/J is 1


# ---------------------------------------------------------------------------
# saturation


def test_saturate_frees_the_all_x0_levels():
    ring, qs, I = four_var_truncation()
    sat = saturate(I)
    assert sat.m == 4
    assert not sat.empty_range
    # both x0-headed polynomials are divisible by x0 outright, so level 1
    # has no condition at all and both quotients enter S
    expected = {parse_polynomial(ring, "x3^2"),
                parse_polynomial(ring, "x2*x3 + x2^2 + 2*x1*x2 + x1^2")}
    assert set(sat.socle_like_generators) == expected
    assert [lv.level for lv in sat.levels] == [1, 2]
    assert len(sat.levels[0].vectors) == 2
    assert sat.levels[1].vectors == []  # x0^2 divides no head
    basis, gens = sat.saturated_ideal_basis
    assert basis is I and set(gens) == expected


def test_saturate_soundness_memberships():
    ring, _, I = four_var_truncation()
    sat = saturate(I)
    for g in sat.socle_like_generators:
        assert not normal_form(I, g).is_zero()
        lifted = poly_scale_mul(g, 1, (1, 0, 0, 0))
        assert normal_form(I, lifted).is_zero()


def test_saturate_trivial_on_saturated_input():
    _, _, I = five_var_saturated()
    sat = saturate(I)
    assert sat.is_trivial()
    assert sat.levels == [] and sat.m == 1
    assert not sat.empty_range


def test_saturate_flags_empty_level_range():
    # the maximal ideal is the degree-1 truncation of the unit ideal: the
    # level range 1..m-2 is empty while x0 itself is a head
    I = verified_basis(monomial_marked_set(QS(2, (1, 0), (0, 1))))
    sat = saturate(I)
    assert sat.m == 2
    assert sat.socle_like_generators == []
    assert sat.empty_range


def test_saturate_rejects_non_truncation_shape():
    I = verified_basis(monomial_marked_set(QS(2, (1, 1), (0, 3))))
    with pytest.raises(RingError):
        saturate(I)


def test_saturate_dimensions_match_brute_force_colon():
    _, _, I = four_var_truncation()
    sat = saturate(I)
    hd = sat.hilbert_function(4)
    assert [hd.value(t) for t in range(5)] == [1, 4, 8, 12, 16]
    assert hd.polynomial == [0, 4]
    gens = [as_dict(h.body) for h in I]
    dims = oracles.saturation_dims(gens, 4, 4, kmax=3)
    assert dims == {t: comb(t + 3, 3) - hd.value(t) for t in range(5)}


# ---------------------------------------------------------------------------
# hyperplane section


def test_section_of_monomial_basis_is_monomial():
    _, qs, _ = four_var_truncation()
    I = verified_basis(monomial_marked_set(qs))
    sec = hyperplane_section(I)
    assert sec.nvars == 3
    assert sorted(sec.by_head) == sorted(
        [(0, 0, 3), (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1), (2, 0, 1),
         (0, 4, 0)])
    assert all(h.tail().is_zero() for h in sec)


def test_section_of_four_var_truncation():
    _, _, I = four_var_truncation()
    sec = hyperplane_section(I)
    ring3 = Ring(QQ, 3)
    expected = {
        (0, 0, 3): "x2^3",
        (0, 1, 2): "x1*x2^2",
        (0, 2, 1): "x1^2*x2 + x1^3 + 2*x0*x1^2 + x0^2*x1",
        (1, 0, 2): "x0*x2^2",
        (1, 1, 1): "x0*x1*x2 + x0*x1^2 + 2*x0^2*x1 + x0^3",
        (2, 0, 1): "x0^2*x2 - x1^3 - 4*x0*x1^2 - 5*x0^2*x1 - 2*x0^3",
        (0, 4, 0): "x1^4 + 4*x0*x1^3 + 6*x0^2*x1^2 + 4*x0^3*x1 + x0^4",
    }
    assert sorted(sec.by_head) == sorted(expected)
    for head, text in expected.items():
        assert sec.by_head[head].body == parse_polynomial(ring3, text)


def test_section_of_five_var_saturated():
    _, _, I = five_var_saturated()
    sec = hyperplane_section(I)
    assert sec.nvars == 4
    assert len(sec) == 11
    ring4 = Ring(QQ, 4)
    # x1*(first generator) + (third generator) is exactly the monomial that
    # becomes x0*x1*x3 after the substitution, so that element has no tail;
    # the only tailed element is the image of the third generator itself.
    assert sec.by_head[(1, 0, 1, 1)].body == parse_polynomial(
        ring4, "x0*x2*x3 + x0*x2^2")
    for head, h in sec.by_head.items():
        if head != (1, 0, 1, 1):
            assert h.tail().is_zero()
    # cross-check: every section polynomial lies in the image ideal, and
    # attaching a -x0*x2^2 tail to the x0*x1*x3 element would push it out
    images = []
    for h in I:
        img = {e[1:]: Fraction(c) for e, c in h.body.coeffs.items() if e[0] == 0}
        if img:
            images.append(img)
    for h in sec:
        assert oracles.in_ideal(as_dict(h.body), images, 4)
    tailed = {(1, 1, 0, 1): Fraction(1), (1, 0, 2, 0): Fraction(-1)}
    assert not oracles.in_ideal(tailed, images, 4)


def test_section_then_saturate_forces_a_coefficient():
    ring, _, I = four_var_truncation()
    sec = hyperplane_section(I)
    sat = saturate(sec)
    assert sat.m == 4
    ring3 = Ring(QQ, 3)
    expected = {parse_polynomial(ring3, "x2^2"),
                parse_polynomial(ring3, "x1*x2 + x1^2 + 2*x0*x1 + x0^2")}
    assert set(sat.socle_like_generators) == expected
    level1 = sat.levels[0]
    assert level1.heads[0] == (2, 0, 1)
    # the x0^2-headed element cannot enter a level-1 combination
    assert all(v[0] == QQ.zero for v in level1.vectors)
    assert sat.levels[1].vectors == []
    hd = sat.hilbert_function(5)
    assert [hd.value(t) for t in range(6)] == [1, 3, 4, 4, 4, 4]
    gens = [as_dict(h.body) for h in sec]
    dims = oracles.saturation_dims(gens, 3, 4, kmax=3)
    assert dims == {t: comb(t + 2, 2) - hd.value(t) for t in range(5)}


def test_section_saturation_of_five_var_example():
    _, _, I = five_var_saturated()
    sec = hyperplane_section(I)
    sat = saturate(sec)
    ring4 = Ring(QQ, 4)
    expected = {parse_polynomial(ring4, "x3^2"),
                parse_polynomial(ring4, "x1*x3"),
                parse_polynomial(ring4, "x2*x3 + x2^2")}
    assert set(sat.socle_like_generators) == expected
    hd = sat.hilbert_function(4)
    assert [hd.value(t) for t in range(5)] == [1, 4, 7, 9, 11]
    assert hd.polynomial == [3, 2]
    # the bare x1*x3 is right: x0*x1*x3 is in the section ideal while
    # x0*(x1*x3 - x2^2) is not, so only the former can be divided down
    gens = [as_dict(h.body) for h in sec]
    assert oracles.in_ideal({(1, 1, 0, 1): Fraction(1)}, gens, 4)
    assert not oracles.in_ideal(
        {(1, 1, 0, 1): Fraction(1), (1, 0, 2, 0): Fraction(-1)}, gens, 4)
    dims = oracles.saturation_dims(gens, 4, 3, kmax=3)
    assert dims == {t: comb(t + 3, 3) - hd.value(t) for t in range(4)}


def test_section_of_artinian_two_squares():
    ring = Ring(QQ, 2)
    qs = QS(2, (2, 0), (0, 2))
    I = mk_basis(ring, qs, [((2, 0), "x0^2 + 3*x0*x1"),
                            ((0, 2), "x1^2"),
                            ((2, 1), "x0^2*x1")])
    sec = hyperplane_section(I)
    assert sec.nvars == 1
    assert list(sec.by_head) == [(2,)]
    assert sec.by_head[(2,)].tail().is_zero()


# ---------------------------------------------------------------------------
# the decision loop


def test_cm_check_accepts_dim_two_truncation():
    _, _, I = four_var_truncation()
    verdict = cm_check(I)
    assert verdict.is_cm
    assert len(verdict.trace) == 2
    step = verdict.trace[1]
    assert step.match
    assert step.difference.values == {0: 1, 1: 3, 2: 4, 3: 4, 4: 4, 5: 4}
    assert step.difference.polynomial == [4]
    assert step.section_hilbert.values == step.difference.values
    assert step.section_hilbert.polynomial == [4]


def test_cm_check_rejects_five_var_surface():
    _, _, I = five_var_saturated()
    verdict = cm_check(I)
    assert not verdict.is_cm
    assert len(verdict.trace) == 2
    step = verdict.trace[1]
    assert not step.match
    assert step.difference.values == {0: 1, 1: 4, 2: 8, 3: 9, 4: 11}
    assert step.section_hilbert.values == {0: 1, 1: 4, 2: 7, 3: 9, 4: 11}
    assert step.difference.polynomial == step.section_hilbert.polynomial == [3, 2]


def test_cm_check_fast_path_on_cm_cover():
    _, _, I = cm_cover_basis()
    verdict = cm_check(I)
    assert verdict.is_cm
    assert len(verdict.trace) == 1
    assert verdict.trace[0].note == "cover is Cohen-Macaulay"
    assert verdict.trace[0].saturation.is_trivial()


def test_cm_check_dimension_one_shortcut():
    I = verified_basis(monomial_marked_set(QS(2, (1, 1), (0, 2))))
    verdict = cm_check(I)
    assert verdict.is_cm
    assert verdict.trace[0].note == "dimension at most one"
    ring2 = Ring(QQ, 2)
    # the saturation still gets computed for the record: (x0x1, x1^2) : x0^inf
    # picks up x1 itself
    assert verdict.trace[0].saturation.socle_like_generators == [
        parse_polynomial(ring2, "x1")]


def test_cm_check_requires_verified_basis():
    H = monomial_marked_set(QS(2, (2, 0), (0, 2)))
    with pytest.raises(RingError):
        cm_check(H)
