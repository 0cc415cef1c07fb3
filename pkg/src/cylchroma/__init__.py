"""Cylindric P-Schur functions, P-tableaux and chromatic symmetric functions of
incomparability graphs of (3+1)-free posets."""
from .errors import (CycleError, CylchromaError, IntegralityError, NoIntersectionError,
                     NotInBError, ParseError, PreconditionError, RibbonError, ShapeError,
                     ShiftError, SizeError)
from .poset import Poset, all_posets, chain, antichain, inc_graph, is_31_free, parse_poset
from .shapes import CylindricShape, SkewShape, ColumnDiagram, parse_shape
from .tableaux import PFilling
from .upoly import UPolynomial, s_P_cylindric, s_P_skew

__version__ = "0.1.0"

__all__ = [
    "CycleError", "CylchromaError", "IntegralityError", "NoIntersectionError", "NotInBError",
    "ParseError", "PreconditionError", "RibbonError", "ShapeError", "ShiftError", "SizeError",
    "Poset", "all_posets", "chain", "antichain", "inc_graph", "is_31_free", "parse_poset",
    "CylindricShape", "SkewShape", "ColumnDiagram", "parse_shape", "PFilling",
    "UPolynomial", "s_P_cylindric", "s_P_skew",
]
