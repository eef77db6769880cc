"""Geometric multigrid for the 2D Poisson equation with Dirichlet boundary
conditions on stretched rectilinear grids.

Smoothing schemes: pointwise checkerboard, line-based zebra (one-direction
and alternating), and two branched-line schemes, tweed (legs perpendicular to
the nearest boundary, for near-wall grid clustering) and wireframe
(concentric rectangular rings, for near-centre clustering), plus their
alternating combination.  A matrix-free two-grid analyzer estimates the
asymptotic convergence factor of any smoother/restriction combination.
"""

from . import grid, layout, mgcycle, smoothers, spectral, stencil, transfer, tridiag
from .kernels import HAVE_EXT

__all__ = [
    "grid", "layout", "mgcycle", "smoothers", "spectral", "stencil",
    "transfer", "tridiag", "HAVE_EXT",
]

__version__ = "0.1.0"
