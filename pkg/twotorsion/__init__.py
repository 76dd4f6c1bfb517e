from .curves import EllipticModel, HyperellipticModel, TwoTorsionClass
from .exact_math import Place, Poly, SquareClass
from .exceptions import DomainError, ParseError, TwoTorsionError
from .f2_theta import F2Vector, RealCurveType
from .gw_forms import GWElement

__all__ = [
    "EllipticModel",
    "HyperellipticModel",
    "TwoTorsionClass",
    "Place",
    "Poly",
    "SquareClass",
    "DomainError",
    "ParseError",
    "TwoTorsionError",
    "F2Vector",
    "RealCurveType",
    "GWElement",
]
__version__ = "0.0.0-dev"
