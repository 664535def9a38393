"""Exact recognition of a q-series as a quasimodular form of given weight."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional
from sympy import Matrix, Rational
from constants import MAX_RECOGNITION_WEIGHT, RECOGNITION_MARGIN
from errors import InsufficientOrder
from series import Series
from .qmpoly import QmPoly, monomial_basis


class RecognitionStatus(Enum):
    FOUND = 'found'
    NO_SOLUTION = 'no solution'
    AMBIGUOUS = 'ambiguous'


@dataclass(frozen=True)
class Recognition:
    """Outcome of matching a series against the weight-w monomial basis."""

    status: RecognitionStatus
    weight: int
    solve_order: int
    check_order: int
    poly: Optional[QmPoly] = None

    @property
    def found(self) -> bool:
        return self.status is RecognitionStatus.FOUND

    def to_text(self) -> str:
        if self.found:
            return self.poly.to_text()
        label = 'NoSolution' if self.status is RecognitionStatus.NO_SOLUTION else 'AmbiguousSolution'
        return (f"{label}: weight {self.weight}, solved through order {self.solve_order}, "
                f"checked through order {self.check_order}")


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def recognize(s: Series, weight: int, margin: int = RECOGNITION_MARGIN) -> Recognition:
    """Express s as a homogeneous polynomial in E2, E4, E6 of the given weight.

    The linear system is solved on the first len(basis) + margin coefficients;
    a candidate is accepted only if its expansion matches s through s.order.

    Args:
        s: Series to recognize
        weight: Even weight, at most 40
        margin: Extra coefficients beyond the basis size used in the solve

    Returns:
        Recognition with status FOUND, NO_SOLUTION or AMBIGUOUS

    Raises:
        OddWeight: for odd or negative weight
        InsufficientOrder: if s is shorter than the solve window
    """
    basis = monomial_basis(weight)
    if weight > MAX_RECOGNITION_WEIGHT:
        raise ValueError(f"Weights above {MAX_RECOGNITION_WEIGHT} are not supported, got {weight}")
    solve_order = len(basis) + margin
    if s.order < solve_order:
        raise InsufficientOrder(
            f"Recognition at weight {weight} needs order >= {solve_order}, series has order {s.order}"
        )

    columns = [QmPoly({monomial: 1}, weight).expand(solve_order) for monomial in basis]
    system = Matrix(solve_order + 1, len(basis),
                    lambda d, j: Rational(columns[j][d].numerator, columns[j][d].denominator))
    target = Matrix(solve_order + 1, 1, lambda d, _: Rational(s[d].numerator, s[d].denominator))

    try:
        solution, free = system.gauss_jordan_solve(target)
    except ValueError:
        return Recognition(RecognitionStatus.NO_SOLUTION, weight, solve_order, solve_order)
    if free.shape[0] > 0:
        return Recognition(RecognitionStatus.AMBIGUOUS, weight, solve_order, solve_order)

    poly = QmPoly.from_basis(weight, [_to_fraction(v) for v in solution])
    # a match on the solve window alone is not enough
    if poly.expand(s.order) != s:
        return Recognition(RecognitionStatus.NO_SOLUTION, weight, solve_order, s.order)
    return Recognition(RecognitionStatus.FOUND, weight, solve_order, s.order, poly)
