import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from markedbases.monomials import (
    HilbertData, MonomialIdeal, NotQuasiStableError, QuasiStableIdeal,
    dimension_codimension, is_cm_quasi_stable, is_quasi_stable,
    monomial_section, monomials_of_degree, pommaret_basis, regularity,
    rho_invariant, satiety, saturate_monomial, sous_escalier, truncate,
    truncation_level,
)
from markedbases.rings import term_degree, term_div, term_key, term_min_var

sys.path.insert(0, str(Path(__file__).parent))
import oracles


def I(nv, *gens):
    return MonomialIdeal(nv, gens)


def QS(nv, *gens):
    return pommaret_basis(I(nv, *gens))


def test_quasi_stable_positive():
    assert is_quasi_stable(I(3, (0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0)))


def test_quasi_stable_negative():
    assert not is_quasi_stable(I(2, (1, 1)))


def test_artinian_is_quasi_stable():
    assert is_quasi_stable(I(3, (3, 0, 0), (0, 2, 0), (0, 0, 4), (1, 1, 1)))


def test_pommaret_two_vars():
    qs = QS(2, (2, 0), (0, 2))
    assert qs.pommaret == [(2, 0), (0, 2), (2, 1)]


def test_pommaret_three_squares():
    qs = QS(3, (0, 0, 2), (0, 2, 0), (2, 0, 0))
    want = {(0, 0, 2), (0, 2, 0), (2, 0, 0), (2, 1, 0), (2, 0, 1), (0, 2, 1),
            (2, 1, 1)}
    assert set(qs.pommaret) == want


def test_pommaret_stable_ideal_unchanged():
    qs = QS(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert qs.pommaret == qs.generators


def test_pommaret_rejects_non_quasi_stable():
    with pytest.raises(NotQuasiStableError):
        QS(2, (1, 1))


def test_involutive_factorization_unique_and_total():
    qs = QS(3, (0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0))
    for t in range(2, regularity(qs) + 2):
        for m in qs.ideal.terms_of_degree(t):
            hits = []
            for s in qs.pommaret:
                from markedbases.rings import term_divides
                if term_divides(s, m):
                    d = term_div(m, s)
                    if not any(d) or max(i for i, e in enumerate(d) if e) <= term_min_var(s):
                        hits.append(s)
            assert len(hits) == 1, (m, hits)
            d, s = qs.involutive_factor(m)
            assert (d, s) == (term_div(m, hits[0]), hits[0])


def test_pommaret_matches_min_quotient_characterization():
    # tau in P_J  <=>  tau in J and tau/x_min(tau) not in J
    for qs in (QS(2, (2, 0), (0, 2)),
               QS(3, (0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0)),
               QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1), (0, 0, 4, 0))):
        for t in range(1, regularity(qs) + 2):
            for m in monomials_of_degree(qs.nvars, t):
                in_p = m in qs.pommaret
                pred = qs.contains(m) and not qs.contains(
                    term_div(m, tuple(1 if i == term_min_var(m) else 0
                                      for i in range(qs.nvars))))
                if term_degree(m) <= regularity(qs):
                    assert in_p == pred, m
                else:
                    assert not in_p


def test_sous_escalier():
    qs = QS(2, (0, 2), (2, 0))
    assert sous_escalier(qs, 2) == [(1, 1)]
    assert sous_escalier(qs, 3) == []
    assert sous_escalier(qs, 0) == [(0, 0)]


def test_sous_escalier_counts_match_oracle():
    qs = QS(3, (0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0))
    for t in range(6):
        naive = oracles.sous_escalier_naive(qs.generators, 3, t)
        assert sorted(sous_escalier(qs, t)) == sorted(naive)


def test_satiety():
    assert satiety(QS(2, (0, 2), (2, 0))) == 3      # the term x0^2*x1
    assert satiety(QS(3, (0, 0, 2), (0, 1, 1), (0, 2, 0))) == 0  # saturated


def test_satiety_matches_oracle_saturation():
    # J=(x1^2, x0^2): dims of (J : x0^inf) stabilize to the stripped ideal,
    # and J_t = (J^sat)_t for all t >= satiety
    from fractions import Fraction
    gens = [{(2, 0): Fraction(1)}, {(0, 2): Fraction(1)}]
    sat_dims = oracles.saturation_dims(gens, 2, 5)
    qs = QS(2, (2, 0), (0, 2))
    s = satiety(qs)
    ideal_dims = oracles.ideal_dims(gens, 2, 5)
    full = {t: len(monomials_of_degree(2, t)) for t in range(6)}
    for t in range(6):
        if t >= s:
            assert ideal_dims[t] == sat_dims[t]
    assert ideal_dims[s - 1] != sat_dims[s - 1]  # satiety is sharp


def test_rho_invariant():
    assert rho_invariant(QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1),
                            (0, 0, 4, 0))) == 3
    assert rho_invariant(QS(3, (0, 0, 2))) == 1  # CM, no x0/x1 in any generator
    assert rho_invariant(QS(5, (0, 0, 1, 0, 1), (0, 0, 0, 0, 2), (0, 1, 0, 1, 1),
                            (0, 0, 1, 2, 0), (0, 0, 0, 3, 0), (0, 0, 0, 2, 1))) == 3


def test_rho_via_section_satiety():
    # the rho of J equals the satiety of (J,x0)/(x0) on this fixture
    qs = QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1), (0, 0, 4, 0))
    sec = pommaret_basis(monomial_section(qs))
    assert rho_invariant(qs) == satiety(sec) == 3


def test_truncate():
    qs = QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1), (0, 0, 4, 0))
    tr = truncate(qs, 3)
    want = {(0, 0, 0, 3), (0, 0, 1, 2), (0, 0, 2, 1), (0, 1, 0, 2),
            (0, 1, 1, 1), (1, 0, 0, 2), (0, 2, 0, 1), (1, 0, 1, 1),
            (0, 0, 4, 0)}
    assert set(tr.pommaret) == want


def test_truncate_below_min_degree_is_identity():
    qs = QS(2, (0, 2), (2, 0))
    assert truncate(qs, 1).ideal == qs.ideal
    assert truncate(qs, 2).ideal == qs.ideal


def test_truncate_second_fixture_identity_at_2():
    qs = QS(5, (0, 0, 1, 0, 1), (0, 0, 0, 0, 2), (0, 1, 0, 1, 1),
            (0, 0, 1, 2, 0), (0, 0, 0, 3, 0), (0, 0, 0, 2, 1))
    assert truncate(qs, 2).ideal == qs.ideal


def test_dimension_codimension():
    assert dimension_codimension(I(2, (2, 0), (0, 2))) == (0, 2)
    assert dimension_codimension(I(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1),
                                   (0, 0, 4, 0)))[0] == 2
    assert dimension_codimension(I(3, (0, 0, 2), (0, 2, 0)))[1] == 2


def test_dimension_agrees_with_pure_power_index():
    # quasi-stable J contains a pure power of x_k exactly for k >= dim
    for qs in (QS(2, (0, 2), (2, 0)),
               QS(3, (0, 0, 2), (0, 1, 1), (0, 3, 0)),
               QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1), (0, 0, 4, 0))):
        d, c = dimension_codimension(qs)
        have_power = [any(all(e == 0 or i == k for i, e in enumerate(g))
                          and g[k] > 0 for g in qs.pommaret)
                      for k in range(qs.nvars)]
        assert have_power == [k >= d for k in range(qs.nvars)]


def test_is_cm_quasi_stable():
    assert is_cm_quasi_stable(QS(3, (0, 0, 2), (0, 1, 1), (0, 3, 0)))
    assert not is_cm_quasi_stable(QS(3, (0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0)))
    assert not is_cm_quasi_stable(QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1),
                                     (0, 0, 4, 0)))


def test_regularity():
    assert regularity(QS(2, (0, 2), (2, 0))) == 3
    assert regularity(QS(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))) == 1


def test_saturate_monomial_and_truncation_level():
    # Artinian: (x0^2, x1^2) : x0^inf is the whole ring.
    qs = QS(2, (2, 0), (0, 2))
    sat = saturate_monomial(qs)
    assert sat.generators == [(0, 0)]
    # ... and (1)_{>=t} never equals J, so no truncation level exists.
    with pytest.raises(Exception):
        truncation_level(qs)

    # Proper stripping: (x2^2, x1*x2, x0^2*x2, x1^4) : x0^inf = (x2, x1^4).
    sat2 = saturate_monomial(QS(3, (0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0)))
    assert sat2.generators == [(0, 0, 1), (0, 4, 0)]

    tr = truncate(QS(3, (0, 0, 2), (0, 1, 1), (0, 3, 0)), 3)
    assert truncation_level(tr) == 3
    assert truncation_level(QS(3, (0, 0, 2), (0, 1, 1), (0, 3, 0))) == 0


def test_monomial_section():
    qs = QS(4, (0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 1), (0, 0, 4, 0))
    sec = monomial_section(qs)
    assert sec.generators == sorted(
        [(0, 0, 2), (0, 1, 1), (2, 0, 1), (0, 4, 0)], key=term_key)


def test_hilbert_data_poly():
    h = HilbertData({0: 1, 1: 4, 2: 8}, polynomial=[3, 2])
    assert h.poly_value(5) == 13
    assert h.poly_str() == "2*t + 3"


# --------------------------------------------------------------- properties

small_ideals = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(any),
    min_size=1, max_size=4)


@settings(max_examples=80, deadline=None)
@given(small_ideals)
def test_quasi_stable_completion_consistency(gens):
    J = MonomialIdeal(3, gens)
    if not is_quasi_stable(J):
        with pytest.raises(NotQuasiStableError):
            pommaret_basis(J)
        return
    qs = pommaret_basis(J)
    # every ideal term up to reg+1 has exactly one involutive divisor
    for t in range(1, regularity(qs) + 2):
        for m in J.terms_of_degree(t):
            qs.involutive_factor(m)
    # N(J) counts complement |J_t|
    for t in range(regularity(qs) + 2):
        total = len(monomials_of_degree(3, t))
        assert len(sous_escalier(qs, t)) + len(J.terms_of_degree(t)) == total
