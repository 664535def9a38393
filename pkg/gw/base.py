"""Base calculator with surface validation and result caching."""

from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Optional
from constants import FAULT_HOOKS
from .surface import SurfaceParams


class BaseCalculator:
    """Base for the E(n) generating function calculator."""

    def __init__(self, n: int, order: int, faults: Optional[Iterable[str]] = None):
        """Initialize the calculator.

        Args:
            n: Index of the elliptic surface E(n), n >= 1
            order: Truncation order of every series produced
            faults: Mutation hooks to enable (see constants.FAULT_HOOKS);
                only the verification tests use these
        """
        self.surface = SurfaceParams(n).validate()
        if order < 0:
            raise ValueError(f"Truncation order must be non-negative, got {order}")
        self.order = order
        self.faults: FrozenSet[str] = frozenset(faults or ())
        unknown = self.faults.difference(FAULT_HOOKS)
        if unknown:
            raise ValueError(f"Unknown fault hooks: {', '.join(sorted(unknown))}")
        self._cache: Dict[Hashable, object] = {}

    @property
    def n(self) -> int:
        return self.surface.n

    def _cached(self, key: Hashable, compute: Callable[[], object]):
        # series are immutable, so results can be shared freely
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]
