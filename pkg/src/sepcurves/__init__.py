"""Exact combinatorics of separating curves on closed surfaces.

The surface of genus g is modelled as the double branched cover of the
sphere over 2g+2 points, which carries the closed chain c_0, ..., c_{2g+1}.
Curves are transverse to the lifted one-skeleton and all topological
queries (intersection numbers, isotopy, cutting) are decided exactly.
"""

from .surface import ChainSurface, CutPiece, build_chain_surface
from .curves import Curve

__all__ = ["ChainSurface", "CutPiece", "Curve", "build_chain_surface"]
__version__ = "0.1.0"
