"""Main E(n) calculator combining all generating function functionality."""

from .base import BaseCalculator
from .generating import GeneratingMixin
from .trr import TrrMixin
from .verification import VerificationMixin


class EllipticSurfaceCalculator(BaseCalculator, GeneratingMixin, TrrMixin, VerificationMixin):
    """Calculator for the family GW generating functions of E(n) in classes s + d f.

    This class combines the functionality from different mixins:
    - BaseCalculator: surface validation, truncation order, result cache
    - GeneratingMixin: G, tG', F0 by product and by ODE, F_g by three routes
    - TrrMixin: H by recursion relation, sum formula and convolution
    - VerificationMixin: every identity among the above as IdentityReports
    """

    def __init__(self, n, order, faults=None):
        """Initialize the calculator.

        Args:
            n: Index of the elliptic surface E(n), n >= 1
            order: Truncation order
            faults: Optional mutation hooks for verification tests
        """
        super().__init__(n=n, order=order, faults=faults)
