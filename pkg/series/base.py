"""Base truncated power series with construction and canonical text form."""

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Union
from errors import SeriesError, SeriesParseError

Scalar = Union[int, Fraction]


class BaseSeries:
    """Dense truncated power series c0 + c1 t + ... + cN t^N over the rationals.

    Instances are immutable. The truncation order N is always len(coeffs) - 1,
    so a series of order N knows nothing about t^(N+1) and beyond.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[Scalar], order: Optional[int] = None):
        """Build a series from its coefficients.

        Args:
            coeffs: Coefficients c0, c1, ... (ints, Fractions or rational strings)
            order: Truncation order; pads with zeros or truncates to fit.
                Defaults to len(coeffs) - 1.
        """
        values = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError(f"Truncation order must be non-negative, got {order}")
            values = values[:order + 1]
            values.extend([Fraction(0)] * (order + 1 - len(values)))
        if not values:
            raise SeriesError("A series needs at least its constant coefficient")
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls, order: int):
        return cls([], order)

    @classmethod
    def one(cls, order: int):
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient: Scalar = 1):
        """Return coefficient * t^power truncated at order."""
        coeffs = [Fraction(0)] * (order + 1)
        if power <= order:
            coeffs[power] = Fraction(coefficient)
        return cls(coeffs)

    @classmethod
    def from_function(cls, func: Callable[[int], Scalar], order: int, start: int = 0):
        """Tabulate func(d) for start <= d <= order; lower coefficients are 0."""
        return cls([func(d) if d >= start else 0 for d in range(order + 1)])

    @classmethod
    def from_text(cls, text: str):
        """Parse the canonical form "c0 c1 ... cN".

        Raises:
            SeriesParseError: naming the 1-based position of the bad token
        """
        tokens = text.split()
        if not tokens:
            raise SeriesParseError("Series text is empty", 0)
        coeffs = []
        for position, token in enumerate(tokens, start=1):
            try:
                value = Fraction(token)
            except (ValueError, ZeroDivisionError):
                raise SeriesParseError(f"Invalid rational coefficient '{token}'", position)
            if '.' in token or 'e' in token.lower():
                raise SeriesParseError(f"Coefficient '{token}' is not an exact rational", position)
            coeffs.append(value)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def truncate(self, order: int):
        """Drop coefficients above order. Never extends a series."""
        if order > self.order:
            raise SeriesError(f"Cannot extend a series of order {self.order} to order {order}")
        return type(self)(self._coeffs[:order + 1])

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None for the zero series."""
        for index, value in enumerate(self._coeffs):
            if value:
                return index
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def to_text(self) -> str:
        """Canonical form: space separated 'p/q' or 'p' coefficients."""
        return " ".join(str(c) for c in self._coeffs)

    def _common_order(self, other: 'BaseSeries') -> int:
        # mismatched orders truncate to the shorter series
        return min(self.order, other.order)

    def __getitem__(self, index):
        return self._coeffs[index]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaseSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self.to_text()}')"
