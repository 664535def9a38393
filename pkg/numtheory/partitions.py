"""Brute-force colored partition counts.

Shares no code with the series package; the product expansions are checked
against these counts.
"""

import math
from functools import lru_cache


def colored_partitions(d: int, colors: int) -> int:
    """Count partitions of d whose parts each carry one of `colors` labels.

    Parts of equal size are distinguished only by their labels, so choosing
    j parts of size m contributes a multiset of j labels: C(colors + j - 1, j).

    Args:
        d: Integer being partitioned
        colors: Number of labels available to each part

    Returns:
        The number of colored partitions of d
    """
    if d < 0 or colors < 0:
        raise ValueError(f"colored_partitions needs naturals, got d={d}, colors={colors}")
    return _count(d, d, colors)


@lru_cache(maxsize=None)
def _count(remaining: int, largest: int, colors: int) -> int:
    # partitions of `remaining` into parts of size <= largest
    if remaining == 0:
        return 1
    if largest == 0:
        return 0
    total = 0
    for multiplicity in range(remaining // largest + 1):
        labels = math.comb(colors + multiplicity - 1, multiplicity) if multiplicity else 1
        total += labels * _count(remaining - multiplicity * largest, largest - 1, colors)
    return total
