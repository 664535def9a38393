"""Homogeneous polynomials in the Eisenstein series E2, E4, E6."""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple
from constants import GENERATOR_WEIGHTS
from errors import OddWeight
from numtheory.eisenstein import Eisenstein, eisenstein
from series import Series

# (a, b, c) stands for E2^a E4^b E6^c
Monomial = Tuple[int, int, int]

_GENERATOR_EXPONENTS = {
    Eisenstein.E2: (1, 0, 0),
    Eisenstein.E4: (0, 1, 0),
    Eisenstein.E6: (0, 0, 1),
}


def monomial_weight(monomial: Monomial) -> int:
    a, b, c = monomial
    return GENERATOR_WEIGHTS['E2'] * a + GENERATOR_WEIGHTS['E4'] * b + GENERATOR_WEIGHTS['E6'] * c


def monomial_basis(weight: int) -> List[Monomial]:
    """All (a, b, c) with 2a + 4b + 6c = weight, in descending lexicographic order.

    Raises:
        OddWeight: if weight is odd or negative
    """
    if weight < 0 or weight % 2:
        raise OddWeight(f"Quasimodular weight must be even and non-negative, got {weight}")
    basis = []
    for a in range(weight // 2, -1, -1):
        rest = weight - 2 * a
        for b in range(rest // 4, -1, -1):
            remainder = rest - 4 * b
            if remainder % 6 == 0:
                basis.append((a, b, remainder // 6))
    return basis


def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1 and c >= 0:
        return str(c.numerator)
    return f"({c})"


def _format_monomial(monomial: Monomial) -> str:
    factors = [f"{name}^{power}" for name, power in zip(('E2', 'E4', 'E6'), monomial) if power]
    return " ".join(factors) if factors else "1"


class QmPoly:
    """Weight-homogeneous polynomial in E2, E4, E6 with rational coefficients."""

    def __init__(self, terms: Mapping[Monomial, object], weight: int):
        """Build a polynomial.

        Args:
            terms: Monomial -> coefficient; zero coefficients are dropped
            weight: Common weight of every monomial

        Raises:
            OddWeight: for an odd or negative weight
            ValueError: if a monomial has a different weight
        """
        if weight < 0 or weight % 2:
            raise OddWeight(f"Quasimodular weight must be even and non-negative, got {weight}")
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in terms.items():
            coefficient = Fraction(coefficient)
            if not coefficient:
                continue
            if monomial_weight(monomial) != weight:
                raise ValueError(f"Monomial {monomial} has weight {monomial_weight(monomial)}, expected {weight}")
            cleaned[tuple(monomial)] = coefficient
        self.terms = cleaned
        self.weight = weight

    @classmethod
    def generator(cls, which: Eisenstein) -> 'QmPoly':
        monomial = _GENERATOR_EXPONENTS[which]
        return cls({monomial: 1}, monomial_weight(monomial))

    @classmethod
    def from_basis(cls, weight: int, coefficients: Iterable) -> 'QmPoly':
        return cls(dict(zip(monomial_basis(weight), coefficients)), weight)

    def expand(self, order: int) -> Series:
        """q-expansion truncated at order."""
        generators = {which: eisenstein(which, order) for which in Eisenstein}
        result = Series.zero(order)
        for (a, b, c), coefficient in self.terms.items():
            term = (generators[Eisenstein.E2].pow_int(a)
                    .mul(generators[Eisenstein.E4].pow_int(b))
                    .mul(generators[Eisenstein.E6].pow_int(c)))
            result = result + term.scale(coefficient)
        return result

    def scale(self, c) -> 'QmPoly':
        c = Fraction(c)
        return QmPoly({m: c * v for m, v in self.terms.items()}, self.weight)

    def __add__(self, other: 'QmPoly') -> 'QmPoly':
        if self.weight != other.weight and self.terms and other.terms:
            raise ValueError(f"Cannot add weights {self.weight} and {other.weight}")
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return QmPoly(terms, self.weight if self.terms else other.weight)

    def __sub__(self, other: 'QmPoly') -> 'QmPoly':
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, QmPoly):
            return self.scale(other)
        terms: Dict[Monomial, Fraction] = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                monomial = (a1 + a2, b1 + b2, c1 + c2)
                terms[monomial] = terms.get(monomial, Fraction(0)) + v1 * v2
        return QmPoly(terms, self.weight + other.weight)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> 'QmPoly':
        result = QmPoly({(0, 0, 0): 1}, 0)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, QmPoly):
            return NotImplemented
        return self.weight == other.weight and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.weight, tuple(sorted(self.terms.items()))))

    def to_text(self) -> str:
        """Canonical text "c * E2^a E4^b E6^c + ..." in descending monomial order."""
        if not self.terms:
            return "0"
        return " + ".join(
            f"{_format_coefficient(self.terms[m])} * {_format_monomial(m)}"
            for m in sorted(self.terms, reverse=True)
        )

    def __repr__(self) -> str:
        return f"QmPoly('{self.to_text()}', weight={self.weight})"
