"""Direct solvers for the line and block relaxation systems.

Three kernels: the standard Thomas algorithm, a periodic (circulant) Thomas
solver for closed rings, and a branched solver for m tridiagonal legs coupled
through a single shared branch unknown.  All systems arising from the block
relaxations are strictly diagonally dominant, so no pivoting is performed; a
vanishing pivot is a hard error.

Array conventions (length m): sub-diagonal a (a[0] unused), diagonal b,
super-diagonal c (c[m-1] unused except where noted), right-hand side r.
These are the reference implementations; the compiled kernels embed the same
algorithms.
"""

import numpy as np

_PIVOT_MIN = 1e-300


class SingularSystemError(ValueError):
    """Raised when elimination encounters a vanishing pivot."""


def _pivot(p: float) -> float:
    if abs(p) < _PIVOT_MIN:
        raise SingularSystemError("zero pivot during tridiagonal elimination")
    return p


def thomas(a, b, c, r) -> np.ndarray:
    """Solve the tridiagonal system: a[k] x[k-1] + b[k] x[k] + c[k] x[k+1] = r[k]."""
    m = len(b)
    bb = np.array(b, dtype=float)
    rr = np.array(r, dtype=float)
    for k in range(1, m):
        w = a[k] / _pivot(bb[k - 1])
        bb[k] -= w * c[k - 1]
        rr[k] -= w * rr[k - 1]
    x = np.empty(m)
    x[m - 1] = rr[m - 1] / _pivot(bb[m - 1])
    for k in range(m - 2, -1, -1):
        x[k] = (rr[k] - c[k] * x[k + 1]) / bb[k]
    return x


def circulant_thomas(a, b, c, r) -> np.ndarray:
    """Solve the periodic tridiagonal system of a closed ring.

    Wraparound entries: a[0] couples x[0] to x[m-1], c[m-1] couples x[m-1]
    to x[0].  Cost is O(m): the unknowns 0..m-2 are eliminated as an open
    chain carrying the coupling column to x[m-1], then the last row closes
    the system with a scalar solve.
    """
    m = len(b)
    if m < 3:
        raise ValueError(f"circulant system needs m >= 3, got {m}")
    mm = m - 1
    bb = np.array(b[:mm], dtype=float)
    rr = np.array(r[:mm], dtype=float)
    gg = np.zeros(mm)
    gg[0] = a[0]
    gg[mm - 1] += c[mm - 1]
    for k in range(1, mm):
        w = a[k] / _pivot(bb[k - 1])
        bb[k] -= w * c[k - 1]
        rr[k] -= w * rr[k - 1]
        gg[k] -= w * gg[k - 1]
    # back-substitute x[k] = y[k] - z[k] * x[m-1] along the open chain
    y = np.empty(mm)
    z = np.empty(mm)
    y[mm - 1] = rr[mm - 1] / _pivot(bb[mm - 1])
    z[mm - 1] = gg[mm - 1] / bb[mm - 1]
    for k in range(mm - 2, -1, -1):
        y[k] = (rr[k] - c[k] * y[k + 1]) / bb[k]
        z[k] = (gg[k] - c[k] * z[k + 1]) / bb[k]
    den = _pivot(b[m - 1] - c[m - 1] * z[0] - a[m - 1] * z[mm - 1])
    xm = (r[m - 1] - c[m - 1] * y[0] - a[m - 1] * y[mm - 1]) / den
    x = np.empty(m)
    x[:mm] = y - z * xm
    x[m - 1] = xm
    return x


def m_legged_thomas(legs, d, d_centre, r_centre):
    """Solve m tridiagonal legs joined at one branch unknown.

    Each leg is a tuple (a, b, c, r) ordered from its tip towards the branch;
    the last super-diagonal entry c[-1] couples the leg's innermost point to
    the branch unknown.  d[k] is the branch-row coupling to leg k's innermost
    point and d_centre the branch diagonal.  Legs may have unequal lengths.

    Forward elimination runs from each tip inwards, expressing the innermost
    point of each leg affinely in the branch value; the branch row then
    reduces to a scalar solve, and back substitution runs back out the legs.

    Returns (list of per-leg solution arrays, branch value).
    """
    if len(legs) < 2:
        raise ValueError(f"need m >= 2 legs, got {len(legs)}")
    num = float(r_centre)
    den = float(d_centre)
    reduced = []
    for (a, b, c, r), dk in zip(legs, d):
        p = len(b)
        bb = np.array(b, dtype=float)
        rr = np.array(r, dtype=float)
        for k in range(1, p):
            w = a[k] / _pivot(bb[k - 1])
            bb[k] -= w * c[k - 1]
            rr[k] -= w * rr[k - 1]
        _pivot(bb[p - 1])
        # innermost point: x[p-1] = (rr[p-1] - c[p-1] * x_branch) / bb[p-1]
        num -= dk * rr[p - 1] / bb[p - 1]
        den -= dk * c[p - 1] / bb[p - 1]
        reduced.append((bb, rr, c))
    x_branch = num / _pivot(den)
    xs = []
    for bb, rr, c in reduced:
        p = len(bb)
        x = np.empty(p)
        x[p - 1] = (rr[p - 1] - c[p - 1] * x_branch) / bb[p - 1]
        for k in range(p - 2, -1, -1):
            x[k] = (rr[k] - c[k] * x[k + 1]) / bb[k]
        xs.append(x)
    return xs, x_branch
