"""Infinite products prod_{d>=1} (1 - t^d)^e as truncated series."""

from fractions import Fraction
from numtheory.divisors import sigma_k
from .series import Series


def eta_power(exponent: int, order: int) -> Series:
    """Return prod_{d>=1} (1 - t^d)^exponent truncated at order.

    Computed as exp of the logarithm
        log prod (1 - t^d)^e = -e * sum_{m>=1} (sigma(m)/m) t^m,
    which needs one exp instead of order-many multiplications.

    Args:
        exponent: Integer exponent e
        order: Truncation order

    Returns:
        The product as a Series with constant term 1
    """
    if exponent == 0:
        return Series.one(order)
    log_series = Series.from_function(
        lambda m: Fraction(-exponent * sigma_k(1, m), m), order, start=1
    )
    return log_series.exp()


def eta_power_direct(exponent: int, order: int) -> Series:
    """Finite product prod_{d=1..order} (1 - t^d)^exponent by multiplication.

    Kept as an independent cross-check of eta_power.
    """
    result = Series.one(order)
    for d in range(1, order + 1):
        factor = Series.one(order) - Series.monomial(d, order)
        result = result.mul(factor.pow_int(exponent))
    return result
