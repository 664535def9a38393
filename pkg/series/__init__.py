"""Exact truncated power series package for ellipticgw."""

from .series import Series
from .identity import IdentityReport, IdentityStatus, compare_series, compare_scalar
from .products import eta_power, eta_power_direct

__all__ = [
    'Series',
    'IdentityReport',
    'IdentityStatus',
    'compare_series',
    'compare_scalar',
    'eta_power',
    'eta_power_direct',
]
