"""Ramanujan's derivative identities for E2, E4, E6 and the genus-raising prefactor."""

from fractions import Fraction
from typing import Dict, List, Optional
from numtheory.eisenstein import Eisenstein, eisenstein, sigma_series
from series import IdentityReport, Series, compare_series


def ramanujan_check(order: int, eisenstein_overrides: Optional[Dict[Eisenstein, Series]] = None) -> List[IdentityReport]:
    """Check t dE2/dt = (E2^2 - E4)/12, t dE4/dt = (E2 E4 - E6)/3, t dE6/dt = (E2 E6 - E4^2)/2.

    Args:
        order: Truncation order
        eisenstein_overrides: Replacement expansions, used to test that a
            corrupted generator is caught

    Returns:
        Three IdentityReports
    """
    overrides = eisenstein_overrides or {}
    E2, E4, E6 = (overrides.get(which) or eisenstein(which, order) for which in Eisenstein)
    return [
        compare_series('Ramanujan: t dE2/dt = (E2^2 - E4)/12', None,
                       E2.t_ddt(), (E2.mul(E2) - E4).scale(Fraction(1, 12))),
        compare_series('Ramanujan: t dE4/dt = (E2 E4 - E6)/3', None,
                       E4.t_ddt(), (E2.mul(E4) - E6).scale(Fraction(1, 3))),
        compare_series('Ramanujan: t dE6/dt = (E2 E6 - E4^2)/2', None,
                       E6.t_ddt(), (E2.mul(E6) - E4.mul(E4)).scale(Fraction(1, 2))),
    ]


def prefactor_check(order: int) -> IdentityReport:
    """tG' = (E4 - E2^2)/288, placing the genus-raising factor in the quasimodular ring."""
    E2 = eisenstein(Eisenstein.E2, order)
    E4 = eisenstein(Eisenstein.E4, order)
    return compare_series("quasimodular prefactor: tG' = (E4 - E2^2)/288", None,
                          sigma_series(1, order).t_ddt(), (E4 - E2.mul(E2)).scale(Fraction(1, 288)))
