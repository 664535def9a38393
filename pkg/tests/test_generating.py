from fractions import Fraction

import pytest

from errors import InvalidSurface
from gw import EllipticSurfaceCalculator, GwTable, SurfaceParams
from numtheory import SigmaConvention, colored_partitions
from series import Series


@pytest.fixture(scope="module")
def calculators():
    return {n: EllipticSurfaceCalculator(n, 32) for n in range(1, 6)}


def test_surface_params():
    p = SurfaceParams(3)
    assert p.pg == 2
    assert p.param_dim == 4
    assert p.euler_characteristic == 36
    assert p.c1_dot_A == -1
    assert p.self_intersection(5) == 7
    assert p.canonical_degree(5) == 1
    assert p.fiber_genus_one(2) == Fraction(-3, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("g,k", [(0, 0), (1, 1), (3, 3), (2, 5)])
def test_dimension_formula(n, g, k):
    assert SurfaceParams(n).dimension(g, k) == 2 * (g + k)


def test_surface_rejects_n_below_one():
    with pytest.raises(InvalidSurface, match="n >= 1"):
        SurfaceParams(0).validate()
    with pytest.raises(InvalidSurface):
        EllipticSurfaceCalculator(0, 4)


def test_calculator_rejects_bad_arguments():
    with pytest.raises(ValueError):
        EllipticSurfaceCalculator(1, -1)
    with pytest.raises(ValueError, match="Unknown fault hooks"):
        EllipticSurfaceCalculator(1, 4, faults=['bogus'])


def test_g_series():
    calc = EllipticSurfaceCalculator(1, 5)
    assert calc.g_series().coeffs == (0, 1, 3, 4, 7, 6)
    assert calc.dg_series().coeffs == (0, 1, 6, 12, 28, 30)


@pytest.mark.parametrize("n,expected", [
    (1, (1, 12, 90, 520)),
    (2, (1, 24, 324, 3200)),
])
def test_f0_first_coefficients(n, expected):
    assert EllipticSurfaceCalculator(n, 3).f0_product().coeffs == expected


@pytest.mark.parametrize("n", [1, 2])
def test_f0_matches_colored_partitions(n):
    F0 = EllipticSurfaceCalculator(n, 8).f0_product()
    assert list(F0) == [colored_partitions(d, 12 * n) for d in range(9)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_f0_product_equals_ode_solution(calculators, n):
    calc = calculators[n]
    assert calc.f0_product() == calc.f0_ode()
    assert calc.f0_product()[0] == 1


def test_f1_small_degrees():
    F1 = EllipticSurfaceCalculator(1, 3).fg_closed(1)
    assert F1.coeffs == (0, 1, 18, 174)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("g", [1, 2, 3, 4, 5, 6, 7, 8])
def test_genus_routes_agree(calculators, n, g):
    calc = calculators[n]
    closed = calc.fg_closed(g)
    assert closed == calc.fg_recursive(g)
    assert closed == calc.fg_step(g)


def test_fg_step_needs_positive_genus():
    with pytest.raises(ValueError):
        EllipticSurfaceCalculator(1, 4).fg_step(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_fg_coefficients_are_non_negative_integers(calculators, n):
    for g in range(9):
        F = calculators[n].fg_closed(g)
        assert F.is_integral()
        assert all(c >= 0 for c in F)


def test_fg_valuation_is_genus():
    calc = EllipticSurfaceCalculator(2, 12)
    for g in range(5):
        assert calc.fg_closed(g).valuation() == g


def test_genus_weights_conventions():
    calc = EllipticSurfaceCalculator(1, 4)
    assert calc.genus_weights(SigmaConvention.EXTENDED) == [0, 1, 6, 12, 28]
    assert calc.genus_weights(SigmaConvention.STRICT) == [None, 1, 6, 12, 28]


@pytest.mark.parametrize("n,g", [(1, 1), (2, 3), (4, 2)])
def test_genus_recursion_agrees_under_both_conventions(n, g):
    calc = EllipticSurfaceCalculator(n, 12)
    strict = calc.fg_recursive(g, SigmaConvention.STRICT)
    assert strict == calc.fg_recursive(g, SigmaConvention.EXTENDED)
    assert strict == calc.fg_closed(g)


def test_convention_check_detects_a_nonzero_zero_weight(monkeypatch):
    calc = EllipticSurfaceCalculator(1, 6)
    original = calc.genus_weights

    def shifted(conv=SigmaConvention.EXTENDED):
        weights = original(conv)
        if conv is SigmaConvention.EXTENDED:
            weights[0] = Fraction(1, 24)
        return weights

    monkeypatch.setattr(calc, 'genus_weights', shifted)
    report = next(r for r in calc.verify_all(1) if 'convention' in r.identity_name)
    assert not report.verified
    assert (report.failed_degree, report.lhs, report.rhs) == (0, Fraction(1, 24), 0)


def test_gw_table():
    table = EllipticSurfaceCalculator(1, 3).gw_table(1)
    assert len(table) == 8
    assert (1, 1, 3) in table
    assert table.get(1, 1, 2) == 18
    assert list(table.rows(1))[:2] == [(0, 0, 1), (0, 1, 12)]
    assert table.genera(1) == [0, 1]
    with pytest.raises(KeyError):
        table.get(1, 2, 0)


def test_gw_table_rejects_invalid_surface():
    with pytest.raises(InvalidSurface):
        GwTable(order=2).add_series(0, 0, Series([1, 2, 3]))


def test_calculator_caches_results():
    calc = EllipticSurfaceCalculator(2, 8)
    assert calc.fg_closed(2) is calc.fg_closed(2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_all_is_clean(n):
    reports = EllipticSurfaceCalculator(n, 16).verify_all(4)
    assert all(report.verified for report in reports), [r.describe() for r in reports if not r.verified]


def test_verify_all_includes_k3_check_for_n_2():
    names = [r.identity_name for r in EllipticSurfaceCalculator(2, 8).verify_all(1)]
    assert any('K3' in name for name in names)
    names = [r.identity_name for r in EllipticSurfaceCalculator(3, 8).verify_all(1)]
    assert not any('K3' in name for name in names)


def test_verify_all_at_order_zero():
    reports = EllipticSurfaceCalculator(1, 0).verify_all(4)
    assert all(report.verified for report in reports)


@pytest.mark.parametrize("fault", ['sigma', 'f0'])
def test_fault_hooks_break_the_product_ode_identity(fault):
    reports = EllipticSurfaceCalculator(1, 8, faults=[fault]).verify_all(2)
    failed = [r for r in reports if not r.verified]
    assert failed
    assert failed[0].identity_name == 'F0 product = F0 ODE solution'
    assert failed[0].failed_degree == 3


def test_fault_hook_needs_the_degree_in_range():
    reports = EllipticSurfaceCalculator(1, 2, faults=['sigma']).verify_all(1)
    assert all(report.verified for report in reports)
