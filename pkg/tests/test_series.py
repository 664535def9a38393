from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import NonUnitConstantTerm, NonzeroConstantTerm, SeriesError, SeriesParseError, ZeroConstantTerm
from series import IdentityStatus, Series, compare_scalar, compare_series, eta_power, eta_power_direct

ORDER = 6

small_fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def series_of_order(order=ORDER, constant=None):
    tail = st.lists(small_fractions, min_size=order, max_size=order)
    head = st.just(Fraction(constant)) if constant is not None else small_fractions
    return st.builds(lambda c0, rest: Series([c0] + rest), head, tail)


def test_constructor_pads_and_truncates():
    assert Series([1, 2], order=4).coeffs == (1, 2, 0, 0, 0)
    assert Series([1, 2, 3, 4], order=1).coeffs == (1, 2)
    assert Series(['1/2', 3]).coeffs == (Fraction(1, 2), 3)


def test_constructor_rejects_bad_orders():
    with pytest.raises(SeriesError):
        Series([1], order=-1)
    with pytest.raises(SeriesError):
        Series([])


def test_constructors():
    assert Series.zero(3).coeffs == (0, 0, 0, 0)
    assert Series.one(2).coeffs == (1, 0, 0)
    assert Series.monomial(2, 4, 5).coeffs == (0, 0, 5, 0, 0)
    assert Series.monomial(7, 3) == Series.zero(3)
    assert Series.from_function(lambda d: d * d, 4, start=2).coeffs == (0, 0, 4, 9, 16)


def test_truncate_and_valuation():
    s = Series([0, 0, 3, 4])
    assert s.truncate(2).coeffs == (0, 0, 3)
    assert s.valuation() == 2
    assert Series.zero(5).valuation() is None
    with pytest.raises(SeriesError):
        s.truncate(5)


def test_text_form():
    s = Series([1, Fraction(-1, 12), 0, 7])
    assert s.to_text() == "1 -1/12 0 7"
    assert Series.from_text(s.to_text()) == s
    assert Series.from_text("  1   2\n3 ") == Series([1, 2, 3])


@pytest.mark.parametrize("text,position", [
    ("1 2 x", 3),
    ("1 0.5", 2),
    ("1/0", 1),
    ("1 2 3 1e3", 4),
])
def test_text_parse_errors_name_the_token(text, position):
    with pytest.raises(SeriesParseError) as excinfo:
        Series.from_text(text)
    assert excinfo.value.position == position
    assert f"token {position}" in str(excinfo.value)


def test_empty_text_is_rejected():
    with pytest.raises(SeriesParseError):
        Series.from_text("   ")


def test_operators():
    s = Series([1, 2, 3])
    assert (s + 1).coeffs == (2, 2, 3)
    assert (1 + s).coeffs == (2, 2, 3)
    assert (s - 1).coeffs == (0, 2, 3)
    assert (1 - s).coeffs == (0, -2, -3)
    assert (-s).coeffs == (-1, -2, -3)
    assert (2 * s).coeffs == (2, 4, 6)
    assert (s * Fraction(1, 2)).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))
    assert (s * s).coeffs == (1, 4, 10)


def test_mismatched_orders_truncate_to_the_shorter():
    a = Series([1, 1, 1, 1, 1])
    b = Series([1, 1])
    assert (a + b).order == 1
    assert a.mul(b).coeffs == (1, 2)


@given(series_of_order(), series_of_order(), series_of_order())
@settings(max_examples=50)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Series.zero(ORDER) == a
    assert a * Series.one(ORDER) == a


@given(series_of_order(), series_of_order())
@settings(max_examples=50)
def test_t_ddt_is_a_derivation(a, b):
    assert (a * b).t_ddt() == a.t_ddt() * b + a * b.t_ddt()


@given(series_of_order())
@settings(max_examples=50)
def test_inverse(a):
    if a[0] == 0:
        with pytest.raises(ZeroConstantTerm):
            a.inverse()
    else:
        assert a * a.inverse() == Series.one(ORDER)


@given(series_of_order(constant=1))
@settings(max_examples=50)
def test_exp_of_log_is_identity(a):
    assert a.log().exp() == a


@given(series_of_order(constant=0))
@settings(max_examples=50)
def test_log_of_exp_is_identity(a):
    assert a.exp().log() == a


def test_log_and_exp_reject_wrong_constant_terms():
    with pytest.raises(NonUnitConstantTerm):
        Series([2, 1]).log()
    with pytest.raises(NonzeroConstantTerm):
        Series([1, 1]).exp()


@given(series_of_order(constant=1), st.integers(min_value=-4, max_value=4))
@settings(max_examples=30)
def test_pow_int_matches_repeated_product(a, exponent):
    expected = Series.one(ORDER)
    factor = a if exponent >= 0 else a.inverse()
    for _ in range(abs(exponent)):
        expected = expected * factor
    assert a.pow_int(exponent) == expected
    assert a ** exponent == expected


def test_negative_power_of_one_minus_t():
    s = Series([1, -1], order=3)
    assert s.pow_int(-12).coeffs == (1, 12, 78, 364)


@pytest.mark.parametrize("exponent,expected", [
    (-12, (1, 12, 90, 520)),
    (-24, (1, 24, 324, 3200)),
    (1, (1, -1, -1, 0)),
    (0, (1, 0, 0, 0)),
])
def test_eta_power(exponent, expected):
    assert eta_power(exponent, 3).coeffs == expected


@pytest.mark.parametrize("exponent", [-24, -12, -1, 1, 3, 24])
def test_eta_power_matches_direct_product(exponent):
    assert eta_power(exponent, 16) == eta_power_direct(exponent, 16)


@pytest.mark.parametrize("exponent", [-12, -24, -36])
def test_eta_power_inverse_pair(exponent):
    assert eta_power(exponent, 64) * eta_power(-exponent, 64) == Series.one(64)


def test_compare_series_reports_first_difference():
    report = compare_series('sample identity', 1, Series([1, 2, 3, 4]), Series([1, 2, 5, 6]))
    assert report.status is IdentityStatus.FAILED
    assert (report.failed_degree, report.lhs, report.rhs) == (2, 3, 5)
    assert 'failed at d=2' in report.describe()
    assert report.to_dict()['lhs'] == '3'


def test_compare_series_verified_through_common_order():
    report = compare_series('sample identity', None, Series([1, 2, 3]), Series([1, 2]))
    assert report.verified
    assert report.order == 1
    assert report.to_dict()['failed_degree'] is None


def test_compare_scalar():
    assert compare_scalar('constant', 1, 0, Fraction(-1, 12), Fraction(-2, 24)).verified
    failed = compare_scalar('constant', 1, 0, 1, 2)
    assert not failed.verified
    assert failed.failed_degree == 0
