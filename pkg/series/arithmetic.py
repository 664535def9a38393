"""Ring operations on truncated power series."""

from fractions import Fraction
from numbers import Rational


class ArithmeticMixin:
    """Mixin class for addition, scaling and Cauchy products.

    Binary operations truncate to the smaller of the two orders.
    """

    def add(self, other):
        order = self._common_order(other)
        return type(self)([self[d] + other[d] for d in range(order + 1)])

    def sub(self, other):
        order = self._common_order(other)
        return type(self)([self[d] - other[d] for d in range(order + 1)])

    def scale(self, c):
        c = Fraction(c)
        return type(self)([c * a for a in self])

    def add_scalar(self, c):
        """Add a constant to the t^0 coefficient."""
        coeffs = list(self)
        coeffs[0] += Fraction(c)
        return type(self)(coeffs)

    def mul(self, other):
        """Cauchy product truncated at the common order."""
        order = self._common_order(other)
        a = self.coeffs
        b = other.coeffs
        # skip leading zeros of both factors; the series here often start at t^1 or later
        a_start = next((i for i in range(order + 1) if a[i]), order + 1)
        b_start = next((i for i in range(order + 1) if b[i]), order + 1)
        result = [Fraction(0)] * (order + 1)
        for i in range(a_start, order + 1 - b_start):
            ai = a[i]
            if not ai:
                continue
            for j in range(b_start, order + 1 - i):
                bj = b[j]
                if bj:
                    result[i + j] += ai * bj
        return type(self)(result)

    def __add__(self, other):
        if isinstance(other, Rational):
            return self.add_scalar(other)
        return self.add(other)

    def __radd__(self, other):
        if isinstance(other, Rational):
            return self.add_scalar(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Rational):
            return self.add_scalar(-other)
        return self.sub(other)

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return (-self).add_scalar(other)
        return NotImplemented

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented
