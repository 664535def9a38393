"""Point-lookup table of family GW invariants."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Tuple
from errors import InvalidSurface

TableKey = Tuple[int, int, int]


@dataclass
class GwTable:
    """Map (n, g, d) -> GW^H_{s+df,g}(pt^g) for degrees up to order.

    Populating the table is the only mutation point; callers computing in
    parallel must partition by key or synchronize.
    """

    order: int
    entries: Dict[TableKey, Fraction] = field(default_factory=dict)

    def add_series(self, n: int, g: int, series) -> None:
        if n < 1:
            raise InvalidSurface(f"E({n}) has no tabulated invariants; n >= 1 is required")
        for d in range(min(series.order, self.order) + 1):
            self.entries[(n, g, d)] = series[d]

    def get(self, n: int, g: int, d: int) -> Fraction:
        try:
            return self.entries[(n, g, d)]
        except KeyError:
            raise KeyError(f"No invariant tabulated for n={n}, g={g}, d={d}")

    def rows(self, n: int) -> Iterator[Tuple[int, int, Fraction]]:
        """Yield (g, d, value) for one surface, g ascending then d ascending."""
        for (key_n, g, d) in sorted(self.entries):
            if key_n == n:
                yield g, d, self.entries[(key_n, g, d)]

    def genera(self, n: int) -> list:
        return sorted({g for (key_n, g, _) in self.entries if key_n == n})

    def __contains__(self, key: TableKey) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)
