"""Toroidal 2-connected graphs without K3,3-subdivisions: recognition and labelled counts."""

from .graph import LabelledGraph, ParseError, parse_edge_list
from .recognizer import (ContainsK33, CoreKind, Decomposition, NotToroidal, NotTwoConnected, PlanarInput,
                         RecognitionError, is_member, recognize)

__all__ = [
    "ContainsK33", "CoreKind", "Decomposition", "LabelledGraph", "NotToroidal", "NotTwoConnected",
    "ParseError", "PlanarInput", "RecognitionError", "is_member", "parse_edge_list", "recognize",
]

__version__ = "0.1.0"
