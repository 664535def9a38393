"""Derivation, inversion, log/exp and integer powers of truncated series."""

from fractions import Fraction
from errors import NonUnitConstantTerm, NonzeroConstantTerm, ZeroConstantTerm


class CalculusMixin:
    """Mixin class for the analytic operations on truncated power series.

    All recursions are the standard exact coefficient formulas; nothing here
    leaves the rationals.
    """

    def t_ddt(self):
        """Apply t d/dt: the t^d coefficient is multiplied by d."""
        return type(self)([d * c for d, c in enumerate(self)])

    def inverse(self):
        """Multiplicative inverse to the same order.

        Raises:
            ZeroConstantTerm: if the constant coefficient is zero
        """
        a = self.coeffs
        if not a[0]:
            raise ZeroConstantTerm("Cannot invert a series with zero constant term")
        inv_a0 = 1 / a[0]
        b = [inv_a0]
        for d in range(1, self.order + 1):
            total = sum((a[k] * b[d - k] for k in range(1, d + 1) if a[k]), Fraction(0))
            b.append(-inv_a0 * total)
        return type(self)(b)

    def log(self):
        """Logarithm of a series with constant term 1.

        Uses d*a_d = sum_{k=1..d} k*L_k*a_{d-k}, solved for L_d since a_0 = 1.

        Raises:
            NonUnitConstantTerm: if the constant coefficient is not 1
        """
        a = self.coeffs
        if a[0] != 1:
            raise NonUnitConstantTerm(f"log needs constant term 1, got {a[0]}")
        log_coeffs = [Fraction(0)]
        for d in range(1, self.order + 1):
            total = sum((k * log_coeffs[k] * a[d - k] for k in range(1, d) if a[d - k]), Fraction(0))
            log_coeffs.append(a[d] - total / d)
        return type(self)(log_coeffs)

    def exp(self):
        """Exponential of a series with constant term 0.

        Raises:
            NonzeroConstantTerm: if the constant coefficient is not 0
        """
        a = self.coeffs
        if a[0]:
            raise NonzeroConstantTerm(f"exp needs constant term 0, got {a[0]}")
        e = [Fraction(1)]
        for d in range(1, self.order + 1):
            total = sum((k * a[k] * e[d - k] for k in range(1, d + 1) if a[k]), Fraction(0))
            e.append(total / d)
        return type(self)(e)

    def pow_int(self, exponent: int):
        """Integer power by repeated squaring; negative powers go through inverse."""
        if exponent < 0:
            return self.inverse().pow_int(-exponent)
        result = type(self).one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result.mul(base)
            exponent >>= 1
            if exponent:
                base = base.mul(base)
        return result

    def __pow__(self, exponent: int):
        return self.pow_int(exponent)
