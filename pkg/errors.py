"""Exception hierarchy for ellipticgw."""


class EllipticGwError(Exception):
    """Base class for every error raised by ellipticgw."""


class SeriesError(EllipticGwError):
    """Invalid operation on a truncated power series."""


class ZeroConstantTerm(SeriesError):
    """Inverse requested for a series whose constant term is zero."""


class NonzeroConstantTerm(SeriesError):
    """exp requested for a series whose constant term is not zero."""


class NonUnitConstantTerm(SeriesError):
    """log requested for a series whose constant term is not one."""


class SeriesParseError(SeriesError):
    """Canonical series text could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position


class UndefinedAtZero(EllipticGwError):
    """sigma_k evaluated at zero outside the extended convention."""


class InvalidSurface(EllipticGwError):
    """Surface index outside the range where the product formula holds."""


class UnknownTableRow(EllipticGwError):
    """Relative invariant key that matches no tabulated row."""


class NeckContributionError(EllipticGwError):
    """Sum formula whose neck correction does not vanish."""


class OddWeight(EllipticGwError):
    """Quasimodular weight that is odd or negative."""


class InsufficientOrder(EllipticGwError):
    """Series too short for the requested computation."""
