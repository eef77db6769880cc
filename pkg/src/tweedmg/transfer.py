"""Inter-grid transfer: defect restriction and correction prolongation.

Weights are index-based (the same on stretched grids as on uniform ones).
Coarse point (i, j) sits at fine point (2i, 2j).  Defect and correction
fields are zero on every boundary ring, so the stencils below never pick up
nonzero boundary values.
"""

import numpy as np

RESTRICTIONS = ("half", "full")


def _coarse_shape(fine_shape):
    nxp, nyp = fine_shape
    if (nxp - 1) % 2 or (nyp - 1) % 2:
        raise ValueError(f"fine grid {fine_shape} cannot be halved")
    return ((nxp - 1) // 2 + 1, (nyp - 1) // 2 + 1)


def restrict(kind: str, d: np.ndarray) -> np.ndarray:
    """Restrict a fine defect to the next coarser grid.

    half: 1/2 at the centre, 1/8 at the four edge neighbours.
    full: 1/4 centre, 1/8 edge neighbours, 1/16 diagonal neighbours.
    """
    if kind not in RESTRICTIONS:
        raise ValueError(f"unknown restriction kind {kind!r}")
    out = np.zeros(_coarse_shape(d.shape))
    ctr = d[2:-2:2, 2:-2:2]
    edges = (d[1:-3:2, 2:-2:2] + d[3:-1:2, 2:-2:2]
             + d[2:-2:2, 1:-3:2] + d[2:-2:2, 3:-1:2])
    if kind == "half":
        out[1:-1, 1:-1] = 0.5 * ctr + 0.125 * edges
    else:
        diags = (d[1:-3:2, 1:-3:2] + d[3:-1:2, 1:-3:2]
                 + d[1:-3:2, 3:-1:2] + d[3:-1:2, 3:-1:2])
        out[1:-1, 1:-1] = 0.25 * ctr + 0.125 * edges + 0.0625 * diags
    return out


def prolong(uc: np.ndarray) -> np.ndarray:
    """Bilinear interpolation of a coarse correction to the next finer grid
    (the dual of full weighting: R_full = P^T / 4)."""
    ncx, ncy = uc.shape
    if min(ncx, ncy) < 3:
        raise ValueError(f"coarse grid {uc.shape} has no interior to interpolate")
    v = np.zeros((2 * ncx - 1, 2 * ncy - 1))
    v[0::2, 0::2] = uc
    v[0::2, 1::2] = 0.5 * (uc[:, :-1] + uc[:, 1:])
    v[1::2, 0::2] = 0.5 * (uc[:-1, :] + uc[1:, :])
    v[1::2, 1::2] = 0.25 * (uc[:-1, :-1] + uc[1:, :-1] + uc[:-1, 1:] + uc[1:, 1:])
    # corrections are zero on the boundary ring by convention
    v[0, :] = v[-1, :] = 0.0
    v[:, 0] = v[:, -1] = 0.0
    return v
