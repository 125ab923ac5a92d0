"""Exact valuated Δ-matroids: tropical Wick vectors, cocycle spaces and isotropical linear spaces."""

from .delta_matroid import EvenDeltaMatroid
from .linear_spaces import TropicalPluckerVector
from .puiseux import PuiseuxScalar
from .trop_core import INF, SignedVector
from .wick import TropicalWickVector

__all__ = ["INF", "EvenDeltaMatroid", "PuiseuxScalar", "SignedVector",
           "TropicalPluckerVector", "TropicalWickVector"]
