"""The descendent series H(t) computed by recursion relation and by sum formula."""

from fractions import Fraction
from typing import Tuple
from numtheory.divisors import SigmaConvention, sigma
from series import Series


class TrrMixin:
    """Mixin class for the genus-1 descendent generating function H(t).

    H is computed three ways; their agreement is equivalent to F0 solving
    the ODE t F0' = 12n G F0.
    """

    def h_trr(self) -> Series:
        """H = (1/12) t F0' - (1/12) F0 + (2 - n) F0 G, from the genus-1 recursion."""
        def compute():
            F0 = self.f0_product()
            G = self.g_series()
            return (F0.t_ddt().scale(Fraction(1, 12))
                    - F0.scale(Fraction(1, 12))
                    + F0.mul(G).scale(self.surface.c1_dot_A))
        return self._cached('H TRR', compute)

    def h_sum(self) -> Series:
        """H = 2 F0 (G - 1/24), from the symplectic sum formula."""
        def compute():
            F0 = self.f0_product()
            shifted = self.g_series().add_scalar(Fraction(-1, 24))
            return F0.mul(shifted).scale(2)
        return self._cached('H sum', compute)

    def h_convolution(self) -> Series:
        """H_d = sum_{d1+d2=d} 2 GW_{d1,0} sigma(d2) with sigma(0) = -1/24."""
        def compute():
            F0 = self.f0_product()
            G = self.g_series()
            weights = [sigma(0, SigmaConvention.EXTENDED)] + [G[d] for d in range(1, self.order + 1)]
            coeffs = []
            for d in range(self.order + 1):
                coeffs.append(2 * sum((F0[d1] * weights[d - d1] for d1 in range(d + 1)), Fraction(0)))
            return Series(coeffs)
        return self._cached('H convolution', compute)

    def trr_boundary_decomposition(self) -> Tuple[Series, Series]:
        """Split H into the psi-class stratum SC and the fiber-bubble strata FC.

        SC_d = (A^2 / 24) GW_{d,0} with A = s + d f, so A^2 = 2d - n.
        FC_d = sum_{1<=d2<=d} GW_{d-d2,0} * d2 GW_{d2 f,1}
               + (K . A / 24) GW_{d,0},
        where d2 GW_{d2 f,1} = (2 - n) sigma(d2) and K . A = n - 2.

        Returns:
            Tuple of (SC, FC) series; their sum is H
        """
        surface = self.surface
        F0 = self.f0_product()
        sc = []
        fc = []
        for d in range(self.order + 1):
            sc.append(Fraction(surface.self_intersection(d), 24) * F0[d])
            bubbles = sum((F0[d - d2] * d2 * surface.fiber_genus_one(d2) for d2 in range(1, d + 1)), Fraction(0))
            fc.append(bubbles + Fraction(surface.canonical_degree(d), 24) * F0[d])
        return Series(sc), Series(fc)
