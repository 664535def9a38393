"""Truncated power series type combining all series functionality."""

from .base import BaseSeries
from .arithmetic import ArithmeticMixin
from .calculus import CalculusMixin


class Series(BaseSeries, ArithmeticMixin, CalculusMixin):
    """Exact truncated power series in t over the rationals.

    This class combines the functionality from:
    - BaseSeries: storage, constructors, canonical text form
    - ArithmeticMixin: add, scale, Cauchy product and operators
    - CalculusMixin: t d/dt, inverse, log, exp, integer powers
    """
