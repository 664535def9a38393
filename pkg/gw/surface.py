"""Elliptic surface parameters and the section/fiber intersection lattice."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple
from errors import InvalidSurface
from numtheory.divisors import sigma

# A homology class a*s + b*f in the span of the section s and fiber f
LatticeClass = Tuple[int, int]


@dataclass(frozen=True)
class SurfaceParams:
    """The elliptic surface E(n) and its derived numbers.

    The lattice spanned by s and f has s.s = -n, s.f = 1, f.f = 0, and the
    canonical class is K = (n - 2) f.
    """

    n: int

    @property
    def canonical_multiple(self) -> int:
        return self.n - 2

    @property
    def c1_dot_A(self) -> int:
        """c1 . (s + d f), independent of d because c1 = (2 - n) f."""
        return 2 - self.n

    @property
    def pg(self) -> int:
        return self.n - 1

    @property
    def param_dim(self) -> int:
        """Real dimension of the family of anti-invariant forms."""
        return 2 * self.pg

    @property
    def euler_characteristic(self) -> int:
        return 12 * self.n

    @property
    def canonical_class(self) -> LatticeClass:
        return (0, self.canonical_multiple)

    def validate(self) -> 'SurfaceParams':
        """Reject surfaces outside n >= 1, where the product formula is stated.

        Raises:
            InvalidSurface: for n < 1
        """
        if self.n < 1:
            raise InvalidSurface(
                f"E({self.n}) is not supported: the genus g generating functions "
                f"are only established for n >= 1"
            )
        return self

    def section_class(self, d: int) -> LatticeClass:
        return (1, d)

    def pairing(self, x: LatticeClass, y: LatticeClass) -> int:
        """Intersection number of a1 s + b1 f and a2 s + b2 f."""
        a1, b1 = x
        a2, b2 = y
        return -self.n * a1 * a2 + a1 * b2 + b1 * a2

    def self_intersection(self, d: int) -> int:
        """(s + d f)^2 = 2d - n."""
        A = self.section_class(d)
        return self.pairing(A, A)

    def canonical_degree(self, d: int) -> int:
        """K . (s + d f) = n - 2."""
        return self.pairing(self.canonical_class, self.section_class(d))

    def fiber_genus_one(self, d: int) -> Fraction:
        """Genus-1 invariant of the multiple fiber class d f, d >= 1.

        Known input: d * GW_{df,1} = (2 - n) sigma(d).
        """
        if d < 1:
            raise ValueError(f"fiber class multiple must be positive, got {d}")
        return self.c1_dot_A * sigma(d) / d

    def dimension(self, g: int, k: int) -> int:
        """Dimension of the family moduli space of genus g maps with k marked points.

        2 c1(A) + 2(g - 1) + 2k + dim H, which collapses to 2(g + k).
        """
        self.validate()
        dim = 2 * self.c1_dot_A + 2 * (g - 1) + 2 * k + self.param_dim
        if dim != 2 * (g + k):
            raise RuntimeError(f"Dimension count {dim} for E({self.n}) disagrees with 2(g+k) = {2 * (g + k)}")
        return dim
