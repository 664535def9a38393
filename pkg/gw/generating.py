"""Generating functions F_g(t) and G(t) of the elliptic surface E(n)."""

from fractions import Fraction
from constants import FAULT_DEGREE
from numtheory.divisors import SigmaConvention, sigma
from series import Series, eta_power
from .table import GwTable


class GeneratingMixin:
    """Mixin class computing F_g by three independent routes.

    - closed form: (tG')^g * prod (1 - t^d)^(-12n)
    - genus-0 ODE recursion followed by the genus convolution with d*sigma(d)
    - one-step product F_{g-1} * tG'
    """

    def g_series(self) -> Series:
        """G(t) = sum_{d>=1} sigma(d) t^d."""
        def compute():
            coeffs = [Fraction(0)] + [sigma(d) for d in range(1, self.order + 1)]
            if 'sigma' in self.faults and FAULT_DEGREE <= self.order:
                coeffs[FAULT_DEGREE] += 1
            return Series(coeffs)
        return self._cached('G', compute)

    def dg_series(self) -> Series:
        """t G'(t), the genus-raising factor."""
        return self._cached('tG\'', lambda: self.g_series().t_ddt())

    def f0_product(self) -> Series:
        """Genus-0 series from the product prod_{d>=1} (1 - t^d)^(-12n)."""
        def compute():
            product = eta_power(-self.surface.euler_characteristic, self.order)
            if 'f0' in self.faults and FAULT_DEGREE <= self.order:
                coeffs = list(product)
                coeffs[FAULT_DEGREE] += 1
                product = Series(coeffs)
            return product
        return self._cached('F0 product', compute)

    def f0_ode(self) -> Series:
        """Genus-0 series as the solution of t F0' = 12n G F0 with F0(0) = 1.

        The recursion d*a_d = 12n * sum_{k=1..d} sigma(k) a_{d-k} is forced
        once a_0 is fixed, so no product expansion is involved.
        """
        def compute():
            G = self.g_series()
            rate = self.surface.euler_characteristic
            a = [Fraction(1)]
            for d in range(1, self.order + 1):
                total = sum((G[k] * a[d - k] for k in range(1, d + 1)), Fraction(0))
                a.append(rate * total / d)
            return Series(a)
        return self._cached('F0 ODE', compute)

    def fg_closed(self, g: int) -> Series:
        """F_g(t) = (tG')^g * F0(t)."""
        if g == 0:
            return self.f0_product()
        return self._cached(('Fg closed', g), lambda: self.dg_series().pow_int(g).mul(self.f0_product()))

    def fg_recursive(self, g: int, conv: SigmaConvention = SigmaConvention.EXTENDED) -> Series:
        """F_g by the genus convolution GW_{g,d} = sum GW_{g-1,d1} d2 sigma(d2).

        Under EXTENDED the d2 = 0 term is evaluated with weight 0 * sigma(0);
        under STRICT, where sigma(0) is undefined, the sum starts at d2 = 1.
        """
        if g == 0:
            return self.f0_ode()

        def compute():
            previous = self.fg_recursive(g - 1, conv)
            weights = self.genus_weights(conv)
            start = 0 if conv is SigmaConvention.EXTENDED else 1
            coeffs = []
            for d in range(self.order + 1):
                coeffs.append(sum((previous[d - d2] * weights[d2] for d2 in range(start, d + 1)), Fraction(0)))
            return Series(coeffs)
        return self._cached(('Fg recursive', g, conv), compute)

    def genus_weights(self, conv: SigmaConvention = SigmaConvention.EXTENDED) -> list:
        """The weights d * sigma(d) for 0 <= d <= order; None at d = 0 under STRICT."""
        G = self.g_series()
        zero_weight = 0 * sigma(0, conv) if conv is SigmaConvention.EXTENDED else None
        return [zero_weight] + [d * G[d] for d in range(1, self.order + 1)]

    def fg_step(self, g: int) -> Series:
        """F_{g-1} * tG' as a direct series product."""
        if g < 1:
            raise ValueError(f"genus step needs g >= 1, got {g}")
        return self.fg_closed(g - 1).mul(self.dg_series())

    def gw_table(self, g_max: int) -> GwTable:
        """Populate a GwTable with the closed-form F_g coefficients for g <= g_max."""
        table = GwTable(order=self.order)
        for g in range(g_max + 1):
            table.add_series(self.n, g, self.fg_closed(g))
        return table
