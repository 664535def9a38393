"""Quasimodular forms in E2, E4, E6 for ellipticgw."""

from .qmpoly import QmPoly, monomial_basis
from .recognition import Recognition, RecognitionStatus, recognize
from .ramanujan import prefactor_check, ramanujan_check

__all__ = [
    'QmPoly',
    'monomial_basis',
    'Recognition',
    'RecognitionStatus',
    'recognize',
    'prefactor_check',
    'ramanujan_check',
]
