"""Value tables of the relative invariants of E(0) and E(n) along a fiber V.

The E(0) rows are literal data: each row fixes a genus, a constraint and a
contact condition and gives the invariant of s + d f as a function of d.
The E(n) rows are either zero or read off the closed-form F_g.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Tuple
from errors import UnknownTableRow
from gw.calculator import EllipticSurfaceCalculator
from gw.surface import SurfaceParams
from numtheory.divisors import SigmaConvention, sigma


class Surface(Enum):
    E0 = 'E(0)'
    EN = 'E(n)'


class Constraint(Enum):
    TAU_FSTAR = 'tau(f*)'
    PT = 'pt'
    PT_POWER = 'pt^m'
    GAMMA11 = 'gamma1,gamma1'
    GAMMA12 = 'gamma1,gamma2'
    NONE = 'none'


class Contact(Enum):
    C_PT = 'C(pt)'
    C_F = 'C(f)'
    C_PT_PT = 'C(pt),C(pt)'


@dataclass(frozen=True)
class RelInvariantKey:
    """Address of one relative invariant of the class s + d f.

    points is the m of a pt^m constraint and is ignored otherwise; n is
    required for E(n) keys.
    """

    surface: Surface
    genus: int
    degree: int
    constraint: Constraint
    contact: Contact
    points: int = 0
    n: Optional[int] = None


@dataclass(frozen=True)
class TableRow:
    row_id: str
    genus: int
    constraint: Constraint
    contact: Contact
    formula: str
    value: Callable[[int], Fraction]


def _delta(d: int) -> Fraction:
    return Fraction(1 if d == 0 else 0)


def _zero(d: int) -> Fraction:
    return Fraction(0)


E0_ROWS: Tuple[TableRow, ...] = (
    TableRow('e0_tau_fiber_contact', 0, Constraint.TAU_FSTAR, Contact.C_F,
             "0", _zero),
    TableRow('e0_tau_point_contact', 1, Constraint.TAU_FSTAR, Contact.C_PT,
             "2 sigma(d), sigma(0) = -1/24", lambda d: 2 * sigma(d, SigmaConvention.EXTENDED)),
    TableRow('e0_point_fiber_contact', 0, Constraint.PT, Contact.C_F,
             "1 if d = 0 else 0", _delta),
    TableRow('e0_point_contact', 0, Constraint.NONE, Contact.C_PT,
             "1 if d = 0 else 0", _delta),
    TableRow('e0_point_point_contact', 1, Constraint.PT, Contact.C_PT,
             "d sigma(d)", lambda d: d * sigma(d, SigmaConvention.EXTENDED)),
    TableRow('e0_neck', 1, Constraint.NONE, Contact.C_PT_PT,
             "0", _zero),
    TableRow('e0_gamma_fiber_contact', 0, Constraint.GAMMA12, Contact.C_F,
             "1 if d = 0 else 0", _delta),
    TableRow('e0_gamma_point_contact', 1, Constraint.GAMMA12, Contact.C_PT,
             "0", _zero),
)

# E(n) rows: (row id, contact, points as a function of genus, formula)
EN_ROWS: Tuple[Tuple[str, Contact, Callable[[int], int], str], ...] = (
    ('en_points_point_contact', Contact.C_PT, lambda g: g - 1, "0"),
    ('en_points_fiber_contact', Contact.C_F, lambda g: g, "GW^H_{s+df,g}(pt^g), the t^d coefficient of F_g"),
)


def absolute_e0_point_gammas(d: int) -> Fraction:
    """Absolute genus-1 invariant of E(0) with constraints pt, gamma1, gamma2: d sigma(d)."""
    return d * sigma(d, SigmaConvention.EXTENDED)


def _reject_gamma11(key: RelInvariantKey) -> None:
    if key.constraint is Constraint.GAMMA11:
        raise UnknownTableRow(
            "Constraint (gamma1, gamma1) is not tabulated; the table stores the "
            "(gamma1, gamma2) reading used by the sum formula derivations"
        )


def find_e0_row(key: RelInvariantKey) -> TableRow:
    """Locate the E(0) row matching genus, constraint and contact.

    Raises:
        UnknownTableRow: if no row matches
    """
    _reject_gamma11(key)
    if key.surface is not Surface.E0:
        raise UnknownTableRow(f"Key for {key.surface.value} looked up in the E(0) table")
    for row in E0_ROWS:
        if (row.genus, row.constraint, row.contact) == (key.genus, key.constraint, key.contact):
            return row
    raise UnknownTableRow(
        f"No E(0) row for genus {key.genus}, constraint {key.constraint.value}, contact {key.contact.value}"
    )


def relative_E0(key: RelInvariantKey) -> Fraction:
    """Tabulated relative invariant of E(0) for s + d f.

    Args:
        key: Table address; degree d >= 0

    Returns:
        The invariant as an exact rational
    """
    if key.degree < 0:
        raise UnknownTableRow(f"Degree must be non-negative, got {key.degree}")
    return Fraction(find_e0_row(key).value(key.degree))


def find_en_row(key: RelInvariantKey) -> str:
    """Return the E(n) row id matching key, or raise UnknownTableRow."""
    _reject_gamma11(key)
    if key.surface is not Surface.EN:
        raise UnknownTableRow(f"Key for {key.surface.value} looked up in the E(n) table")
    if key.constraint is Constraint.PT_POWER and key.degree >= 0:
        for row_id, contact, points, _ in EN_ROWS:
            if key.contact is contact and key.points == points(key.genus) and key.points >= 0:
                return row_id
    raise UnknownTableRow(
        f"No E(n) row for genus {key.genus}, constraint {key.constraint.value}"
        f"{'^' + str(key.points) if key.constraint is Constraint.PT_POWER else ''}, contact {key.contact.value}"
    )


def en_row_value(calculator: EllipticSurfaceCalculator, key: RelInvariantKey) -> Fraction:
    """Evaluate an E(n) row with the series of an existing calculator."""
    if key.n is not None and key.n != calculator.n:
        raise UnknownTableRow(f"Key for E({key.n}) evaluated against E({calculator.n})")
    row_id = find_en_row(key)
    if row_id == 'en_points_point_contact':
        return Fraction(0)
    if key.degree > calculator.order:
        raise UnknownTableRow(f"Degree {key.degree} exceeds the computed order {calculator.order}")
    return calculator.fg_closed(key.genus)[key.degree]


def relative_En(p: SurfaceParams, key: RelInvariantKey, order: int) -> Fraction:
    """Relative invariant of E(n) along V for s + d f.

    The point-contact row with pt^(g-1) vanishes; the fiber-contact row
    with pt^g equals the absolute family invariant.

    Args:
        p: Surface E(n), n >= 1
        key: E(n) table address
        order: Truncation order used to compute F_g; must be >= key.degree

    Returns:
        The invariant as an exact rational
    """
    calculator = EllipticSurfaceCalculator(p.n, order)
    return en_row_value(calculator, key)


def e0_key(genus: int, constraint: Constraint, contact: Contact, degree: int = 0) -> RelInvariantKey:
    return RelInvariantKey(Surface.E0, genus, degree, constraint, contact)


def en_key(n: int, genus: int, points: int, contact: Contact, degree: int = 0) -> RelInvariantKey:
    return RelInvariantKey(Surface.EN, genus, degree, Constraint.PT_POWER, contact, points, n)
