"""Family GW generating functions of elliptic surfaces for ellipticgw."""

from .surface import SurfaceParams
from .table import GwTable
from .calculator import EllipticSurfaceCalculator

__all__ = ['SurfaceParams', 'GwTable', 'EllipticSurfaceCalculator']
