import json
from fractions import Fraction

import pytest

from errors import NeckContributionError, UnknownTableRow
from gw import EllipticSurfaceCalculator, SurfaceParams
from relative import (
    Constraint,
    Contact,
    RelInvariantKey,
    SumFormulaSpec,
    Surface,
    convolve_sum_formula,
    descendent_split_spec,
    e0_key,
    en_key,
    export_table,
    export_table_json,
    neck_correction,
    rederive_gamma_row,
    relative_E0,
    relative_En,
    verify_relative_tables,
)
from relative import sum_formula


def delta(d):
    return Fraction(1 if d == 0 else 0)


@pytest.mark.parametrize("genus,constraint,contact,degree,expected", [
    (0, Constraint.TAU_FSTAR, Contact.C_F, 3, 0),
    (1, Constraint.TAU_FSTAR, Contact.C_PT, 0, Fraction(-1, 12)),
    (1, Constraint.TAU_FSTAR, Contact.C_PT, 2, 6),
    (0, Constraint.PT, Contact.C_F, 0, 1),
    (0, Constraint.PT, Contact.C_F, 4, 0),
    (0, Constraint.NONE, Contact.C_PT, 0, 1),
    (1, Constraint.PT, Contact.C_PT, 0, 0),
    (1, Constraint.PT, Contact.C_PT, 3, 12),
    (1, Constraint.NONE, Contact.C_PT_PT, 5, 0),
    (0, Constraint.GAMMA12, Contact.C_F, 0, 1),
    (1, Constraint.GAMMA12, Contact.C_PT, 6, 0),
])
def test_relative_e0_rows(genus, constraint, contact, degree, expected):
    assert relative_E0(e0_key(genus, constraint, contact, degree)) == expected


def test_relative_e0_unknown_rows():
    with pytest.raises(UnknownTableRow):
        relative_E0(e0_key(2, Constraint.PT, Contact.C_PT, 1))
    with pytest.raises(UnknownTableRow):
        relative_E0(e0_key(0, Constraint.PT, Contact.C_F, -1))
    with pytest.raises(UnknownTableRow):
        relative_E0(en_key(1, 1, 1, Contact.C_F, 1))


def test_gamma11_reading_is_rejected():
    with pytest.raises(UnknownTableRow, match="gamma1, gamma1"):
        relative_E0(e0_key(1, Constraint.GAMMA11, Contact.C_PT, 1))


def test_relative_en_rows():
    p = SurfaceParams(1)
    assert relative_En(p, en_key(1, 1, 1, Contact.C_F, 3), order=3) == 174
    assert relative_En(p, en_key(1, 0, 0, Contact.C_F, 2), order=2) == 90
    assert relative_En(p, en_key(1, 2, 1, Contact.C_PT, 4), order=4) == 0


def test_relative_en_unknown_rows():
    p = SurfaceParams(1)
    with pytest.raises(UnknownTableRow):
        relative_En(p, en_key(1, 2, 2, Contact.C_PT, 1), order=4)
    with pytest.raises(UnknownTableRow):
        relative_En(p, en_key(1, 1, 1, Contact.C_F, 5), order=3)
    with pytest.raises(UnknownTableRow):
        relative_En(p, en_key(2, 1, 1, Contact.C_F, 1), order=3)
    with pytest.raises(UnknownTableRow):
        key = RelInvariantKey(Surface.EN, 1, 1, Constraint.TAU_FSTAR, Contact.C_F, n=1)
        relative_En(p, key, order=3)


def test_sum_formula_reproduces_h():
    calc = EllipticSurfaceCalculator(3, 16)
    assert convolve_sum_formula(descendent_split_spec(calc), 16) == calc.h_sum()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_relative_tables_is_clean(n):
    calc = EllipticSurfaceCalculator(n, 32)
    reports = verify_relative_tables(calc, 4)
    assert all(report.verified for report in reports), [r.describe() for r in reports if not r.verified]


def test_verify_relative_tables_at_order_zero():
    reports = verify_relative_tables(EllipticSurfaceCalculator(1, 0), 3)
    assert all(report.verified for report in reports)


def test_neck_correction_vanishes():
    calc = EllipticSurfaceCalculator(1, 32)
    assert all(c == 0 for c in neck_correction(descendent_split_spec(calc), 32))


def test_nonzero_neck_contribution_raises(monkeypatch):
    monkeypatch.setattr(sum_formula, '_neck', lambda d: Fraction(1 if d == 1 else 0))
    spec = SumFormulaSpec(name='unit neck', left=delta, right=delta, neck_left=delta, neck_right=delta)
    with pytest.raises(NeckContributionError, match="degree 1"):
        convolve_sum_formula(spec, 4)


def test_two_term_convolution():
    spec = SumFormulaSpec(name='constant times degree', left=lambda d: Fraction(1), right=lambda d: Fraction(d),
                          second_left=delta, second_right=lambda d: Fraction(10))
    assert list(convolve_sum_formula(spec, 3)) == [10, 11, 13, 16]


@pytest.mark.parametrize("d", range(1, 33))
def test_gamma_row_rederivation(d):
    lhs, rhs = rederive_gamma_row(d)
    assert lhs == rhs


def test_gamma_row_rederivation_excludes_degree_zero():
    with pytest.raises(ValueError):
        rederive_gamma_row(0)


def test_export_table():
    rows = export_table()['rows']
    assert len(rows) == 11
    assert rows[0]['row_id'] == 'e0_tau_fiber_contact'
    tau_point = next(row for row in rows if row['row_id'] == 'e0_tau_point_contact')
    assert tau_point['samples'][:3] == ['-1/12', '2', '6']
    assert all('samples_genus_1' not in row for row in rows)


def test_export_table_samples_en_rows():
    rows = json.loads(export_table_json(1))['rows']
    fiber = next(row for row in rows if row['row_id'] == 'en_points_fiber_contact')
    assert fiber['surface'] == 'E(1)'
    assert fiber['samples_genus_1'][:4] == ['0', '1', '18', '174']
    point = next(row for row in rows if row['row_id'] == 'en_points_point_contact')
    assert set(point['samples_genus_1']) == {'0'}
