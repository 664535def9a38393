"""Number-theoretic functions and reference q-expansions for ellipticgw."""

from .divisors import SigmaConvention, divisors, sigma, sigma_k
from .partitions import colored_partitions
from .eisenstein import Eisenstein, eisenstein, sigma_series

__all__ = [
    'SigmaConvention',
    'divisors',
    'sigma',
    'sigma_k',
    'colored_partitions',
    'Eisenstein',
    'eisenstein',
    'sigma_series',
]
