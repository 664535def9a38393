"""Divisor enumeration and divisor-power sums."""

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Tuple
from constants import SIGMA_ZERO
from errors import UndefinedAtZero


class SigmaConvention(Enum):
    """How sigma treats d = 0.

    STRICT leaves sigma(0) undefined. EXTENDED sets sigma_1(0) = -1/24, the
    value that makes the d2 = 0 term of genus-0 convolutions produce -F0/12.
    """

    STRICT = 'strict'
    EXTENDED = 'extended'


@lru_cache(maxsize=None)
def divisors(d: int) -> Tuple[int, ...]:
    """Sorted positive divisors of d by trial division up to sqrt(d)."""
    if d < 1:
        raise ValueError(f"divisors needs a positive integer, got {d}")
    small = []
    large = []
    for k in range(1, math.isqrt(d) + 1):
        if d % k == 0:
            small.append(k)
            if k != d // k:
                large.append(d // k)
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def sigma_k(k: int, d: int, conv: SigmaConvention = SigmaConvention.STRICT) -> Fraction:
    """Return sigma_k(d) = sum of m^k over the divisors m of d.

    Args:
        k: Divisor power
        d: Argument, d >= 1 (d = 0 allowed only for k = 1 under EXTENDED)
        conv: Convention for d = 0

    Raises:
        UndefinedAtZero: for d = 0 outside the extended k = 1 case
    """
    if d == 0:
        if conv is SigmaConvention.EXTENDED and k == 1:
            return SIGMA_ZERO
        raise UndefinedAtZero(f"sigma_{k}(0) is undefined under the {conv.value} convention")
    if d < 0:
        raise ValueError(f"sigma_k needs a natural number, got {d}")
    return Fraction(sum(m ** k for m in divisors(d)))


def sigma(d: int, conv: SigmaConvention = SigmaConvention.STRICT) -> Fraction:
    """Sum of divisors sigma_1(d)."""
    return sigma_k(1, d, conv)
