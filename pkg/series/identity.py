"""Coefficient-wise identity checks between series."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional
from .base import BaseSeries


class IdentityStatus(Enum):
    VERIFIED = 'verified'
    FAILED = 'failed'


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity through a truncation order.

    A failed report carries the first degree where the sides differ and
    both coefficients there.
    """

    identity_name: str
    n: Optional[int]
    order: int
    status: IdentityStatus
    failed_degree: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    @property
    def verified(self) -> bool:
        return self.status is IdentityStatus.VERIFIED

    def describe(self) -> str:
        surface = f"E({self.n})" if self.n is not None else "-"
        if self.verified:
            return f"{self.identity_name} [{surface}] verified through order {self.order}"
        return (f"{self.identity_name} [{surface}] failed at d={self.failed_degree}: "
                f"lhs={self.lhs}, rhs={self.rhs}")

    def to_dict(self) -> Dict:
        return {
            'identity': self.identity_name,
            'n': self.n,
            'order': self.order,
            'status': self.status.value,
            'failed_degree': self.failed_degree,
            'lhs': None if self.lhs is None else str(self.lhs),
            'rhs': None if self.rhs is None else str(self.rhs),
        }


def compare_series(name: str, n: Optional[int], lhs: BaseSeries, rhs: BaseSeries) -> IdentityReport:
    """Compare two series exactly up to their common order.

    Args:
        name: Identity name used in reports
        n: Surface index, or None for surface-independent identities
        lhs: Left-hand side
        rhs: Right-hand side

    Returns:
        IdentityReport, failed at the first differing degree if any
    """
    order = min(lhs.order, rhs.order)
    for d in range(order + 1):
        if lhs[d] != rhs[d]:
            return IdentityReport(name, n, order, IdentityStatus.FAILED, d, lhs[d], rhs[d])
    return IdentityReport(name, n, order, IdentityStatus.VERIFIED)


def compare_scalar(name: str, n: Optional[int], degree: int, lhs, rhs, order: int = 0) -> IdentityReport:
    """Compare a single coefficient-level equation lhs = rhs at one degree."""
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    if lhs != rhs:
        return IdentityReport(name, n, order, IdentityStatus.FAILED, degree, lhs, rhs)
    return IdentityReport(name, n, order, IdentityStatus.VERIFIED)
