"""JSON export of the relative invariant value table for documentation tooling."""

import json
from typing import Dict, List, Optional
from constants import TABLE_EXPORT_SAMPLES
from gw.calculator import EllipticSurfaceCalculator
from .tables import E0_ROWS, EN_ROWS, absolute_e0_point_gammas, en_key, en_row_value


def export_table(n: Optional[int] = None) -> Dict:
    """Build the table document: row id, formula text and sample values d = 0..8.

    Args:
        n: Surface index for sampling the E(n) rows; without it those rows
            carry their formula only

    Returns:
        Dictionary ready for json.dumps
    """
    degrees = range(TABLE_EXPORT_SAMPLES)
    rows: List[Dict] = []
    for row in E0_ROWS:
        rows.append({
            'row_id': row.row_id,
            'surface': 'E(0)',
            'genus': row.genus,
            'constraint': row.constraint.value,
            'contact': row.contact.value,
            'formula': row.formula,
            'samples': [str(row.value(d)) for d in degrees],
        })
    rows.append({
        'row_id': 'e0_absolute_point_gammas',
        'surface': 'E(0)',
        'genus': 1,
        'constraint': 'pt,gamma1,gamma2',
        'contact': None,
        'formula': "d sigma(d)",
        'samples': [str(absolute_e0_point_gammas(d)) for d in degrees],
    })

    calculator = EllipticSurfaceCalculator(n, TABLE_EXPORT_SAMPLES - 1) if n is not None else None
    for row_id, contact, points, formula in EN_ROWS:
        entry = {
            'row_id': row_id,
            'surface': 'E(n)' if n is None else f'E({n})',
            'genus': 'g',
            'constraint': 'pt^(g-1)' if points(1) == 0 else 'pt^g',
            'contact': contact.value,
            'formula': formula,
        }
        if calculator is not None:
            # sampled at genus 1
            entry['samples_genus_1'] = [
                str(en_row_value(calculator, en_key(n, 1, points(1), contact, d))) for d in degrees
            ]
        rows.append(entry)
    return {'rows': rows}


def export_table_json(n: Optional[int] = None, indent: int = 2) -> str:
    return json.dumps(export_table(n), indent=indent)
