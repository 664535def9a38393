from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import InsufficientOrder, OddWeight
from gw import EllipticSurfaceCalculator
from numtheory import Eisenstein, eisenstein, sigma_series
from quasimodular import QmPoly, RecognitionStatus, monomial_basis, prefactor_check, ramanujan_check, recognize
from series import Series, eta_power

E2 = QmPoly.generator(Eisenstein.E2)
E4 = QmPoly.generator(Eisenstein.E4)
E6 = QmPoly.generator(Eisenstein.E6)


def test_monomial_basis():
    assert monomial_basis(0) == [(0, 0, 0)]
    assert monomial_basis(4) == [(2, 0, 0), (0, 1, 0)]
    assert monomial_basis(6) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert len(monomial_basis(12)) == 7


@pytest.mark.parametrize("weight", [-2, 3, 7])
def test_monomial_basis_rejects_odd_or_negative_weights(weight):
    with pytest.raises(OddWeight):
        monomial_basis(weight)


def test_qmpoly_generators_expand_to_eisenstein_series():
    for which, poly in [(Eisenstein.E2, E2), (Eisenstein.E4, E4), (Eisenstein.E6, E6)]:
        assert poly.expand(10) == eisenstein(which, 10)


def test_qmpoly_arithmetic():
    prefactor = (E4 - E2 * E2).scale(Fraction(1, 288))
    assert prefactor.weight == 4
    assert prefactor.to_text() == "(-1/288) * E2^2 + (1/288) * E4^1"
    assert (E2 ** 2) == E2 * E2
    assert (2 * E4).to_text() == "2 * E4^1"
    assert (E2 * E4).weight == 6
    assert (E4 - E4).to_text() == "0"


def test_qmpoly_rejects_mixed_weights():
    with pytest.raises(ValueError):
        E2 + E4
    with pytest.raises(ValueError):
        QmPoly({(1, 0, 0): 1, (0, 1, 0): 1}, 2)


def test_qmpoly_expansion_is_a_ring_map():
    assert (E2 * E4 + E6).expand(12) == eisenstein(Eisenstein.E2, 12) * eisenstein(Eisenstein.E4, 12) \
        + eisenstein(Eisenstein.E6, 12)


def test_ramanujan_identities():
    reports = ramanujan_check(64)
    assert len(reports) == 3
    assert all(report.verified for report in reports)


def test_ramanujan_check_catches_a_corrupted_e4():
    corrupted = {Eisenstein.E4: eisenstein(Eisenstein.E4, 16, normaliser=241)}
    reports = ramanujan_check(16, eisenstein_overrides=corrupted)
    assert not reports[0].verified
    assert reports[0].failed_degree == 1


def test_prefactor_identity():
    assert prefactor_check(64).verified


def test_recognize_e2():
    s = Series.one(20) - sigma_series(1, 20).scale(24)
    result = recognize(s, 2)
    assert result.status is RecognitionStatus.FOUND
    assert result.to_text() == "1 * E2^1"
    assert result.solve_order == 9
    assert result.check_order == 20


def test_recognize_prefactor():
    s = sigma_series(1, 32).t_ddt()
    assert recognize(s, 4).to_text() == "(-1/288) * E2^2 + (1/288) * E4^1"


def test_recognize_genus_zero_series_has_no_solution():
    F0 = EllipticSurfaceCalculator(1, 32).f0_product()
    result = recognize(F0, 12)
    assert result.status is RecognitionStatus.NO_SOLUTION
    assert result.to_text().startswith("NoSolution: weight 12")


def test_recognize_rejects_a_window_match_that_fails_later():
    s = list(E4.expand(20))
    s[20] += 1
    result = recognize(Series(s), 4)
    assert result.status is RecognitionStatus.NO_SOLUTION
    assert result.check_order == 20


def test_recognize_reports_ambiguity_on_a_short_window():
    result = recognize((E4 ** 3).expand(20), 12, margin=-4)
    assert result.status is RecognitionStatus.AMBIGUOUS
    assert result.to_text().startswith("AmbiguousSolution")


def test_recognize_needs_enough_coefficients():
    with pytest.raises(InsufficientOrder):
        recognize(E4.expand(5), 4)


def test_recognize_rejects_bad_weights():
    with pytest.raises(OddWeight):
        recognize(E4.expand(20), 5)
    with pytest.raises(ValueError):
        recognize(E4.expand(80), 42)


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=30), min_size=3, max_size=3))
@settings(max_examples=20, deadline=None)
def test_recognize_inverts_expand(coefficients):
    poly = QmPoly.from_basis(6, coefficients)
    result = recognize(poly.expand(16), 6)
    assert result.status is RecognitionStatus.FOUND
    assert result.poly == poly


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("g", [1, 2, 3])
def test_genus_g_prefactor_is_quasimodular(n, g):
    calc = EllipticSurfaceCalculator(n, 48)
    prefactor = calc.fg_closed(g).mul(eta_power(12 * n, 48))
    result = recognize(prefactor, 4 * g)
    assert result.status is RecognitionStatus.FOUND
    assert result.poly == (E4 - E2 * E2).scale(Fraction(1, 288)) ** g
