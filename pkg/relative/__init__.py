"""Relative invariant tables and symplectic sum convolutions for ellipticgw."""

from .tables import (
    Constraint,
    Contact,
    RelInvariantKey,
    Surface,
    e0_key,
    en_key,
    relative_E0,
    relative_En,
)
from .sum_formula import (
    SumFormulaSpec,
    convolve_sum_formula,
    descendent_split_spec,
    genus_step_spec,
    neck_correction,
    point_split_spec,
    rederive_gamma_row,
    simply_connected_spec,
    verify_relative_tables,
)
from .export import export_table, export_table_json

__all__ = [
    'Constraint',
    'Contact',
    'RelInvariantKey',
    'Surface',
    'e0_key',
    'en_key',
    'relative_E0',
    'relative_En',
    'SumFormulaSpec',
    'convolve_sum_formula',
    'descendent_split_spec',
    'genus_step_spec',
    'neck_correction',
    'point_split_spec',
    'rederive_gamma_row',
    'simply_connected_spec',
    'verify_relative_tables',
    'export_table',
    'export_table_json',
]
