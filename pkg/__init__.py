"""ellipticgw - exact Gromov-Witten generating functions of the elliptic surfaces E(n)."""

__version__ = "0.1.0"
