"""Divisor-sum series and the Eisenstein series E2, E4, E6."""

from enum import Enum
from typing import Optional
from constants import EISENSTEIN_SERIES
from series.series import Series
from .divisors import sigma_k


class Eisenstein(Enum):
    E2 = 'E2'
    E4 = 'E4'
    E6 = 'E6'

    @property
    def normaliser(self) -> int:
        return EISENSTEIN_SERIES[self.value][0]

    @property
    def divisor_power(self) -> int:
        return EISENSTEIN_SERIES[self.value][1]


def sigma_series(k: int, order: int) -> Series:
    """sum_{d>=1} sigma_k(d) t^d truncated at order."""
    return Series.from_function(lambda d: sigma_k(k, d), order, start=1)


def eisenstein(which: Eisenstein, order: int, normaliser: Optional[int] = None) -> Series:
    """Return the q-expansion 1 + c * sum sigma_{k}(d) t^d of an Eisenstein series.

    Args:
        which: E2, E4 or E6
        order: Truncation order
        normaliser: Override of the constant c (-24, 240, -504); only the
            verification fault hooks pass this

    Returns:
        The truncated expansion as a Series
    """
    c = which.normaliser if normaliser is None else normaliser
    return sigma_series(which.divisor_power, order).scale(c).add_scalar(1)
