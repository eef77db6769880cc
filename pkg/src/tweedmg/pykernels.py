"""Pure-Python/numpy relaxation kernels (fallback for the compiled core).

Each function relaxes one set of same-colour blocks exactly, updating u in
place.  Index arrays ii, jj hold interior point coordinates; u and f are the
full (nx+1) x (ny+1) fields; W, E, S, N are the stencil coefficient arrays.
The compiled extension in _ckernels implements the same operations with
identical arithmetic ordering.
"""

import numpy as np

from . import tridiag

NAME = "python"


def _coupling(W, E, S, N, i, j, pi, pj):
    """Coefficient in row (i, j) multiplying neighbour (pi, pj), vectorized."""
    out = np.empty(np.shape(i), dtype=float)
    out[...] = np.where(pi == i - 1, W[i],
               np.where(pi == i + 1, E[i],
               np.where(pj == j - 1, S[j], N[j])))
    return out


def _row_terms(W, E, S, N, u, f, ii, jj):
    """Diagonal and rhs with all four neighbours frozen at current values."""
    b = -(W[ii] + E[ii] + S[jj] + N[jj])
    r = (f[ii, jj] - W[ii] * u[ii - 1, jj] - E[ii] * u[ii + 1, jj]
         - S[jj] * u[ii, jj - 1] - N[jj] * u[ii, jj + 1])
    return b, r


def relax_points(ii, jj, W, E, S, N, u, f):
    b, r = _row_terms(W, E, S, N, u, f, ii, jj)
    u[ii, jj] = r / b


def _chain_system(ii, jj, W, E, S, N, u, f):
    """Tridiagonal system along an open chain of 4-neighbour points; in-block
    neighbour contributions are added back onto the frozen-rhs."""
    b, r = _row_terms(W, E, S, N, u, f, ii, jj)
    m = len(ii)
    a = np.zeros(m)
    c = np.zeros(m)
    a[1:] = _coupling(W, E, S, N, ii[1:], jj[1:], ii[:-1], jj[:-1])
    c[:-1] = _coupling(W, E, S, N, ii[:-1], jj[:-1], ii[1:], jj[1:])
    r[1:] += a[1:] * u[ii[:-1], jj[:-1]]
    r[:-1] += c[:-1] * u[ii[1:], jj[1:]]
    return a, b, c, r


def relax_chain(ii, jj, W, E, S, N, u, f):
    if len(ii) == 1:
        relax_points(ii, jj, W, E, S, N, u, f)
        return
    a, b, c, r = _chain_system(ii, jj, W, E, S, N, u, f)
    u[ii, jj] = tridiag.thomas(a, b, c, r)


def relax_ring(ii, jj, W, E, S, N, u, f):
    a, b, c, r = _chain_system(ii, jj, W, E, S, N, u, f)
    a[0] = _coupling(W, E, S, N, ii[0], jj[0], ii[-1], jj[-1])
    c[-1] = _coupling(W, E, S, N, ii[-1], jj[-1], ii[0], jj[0])
    r[0] += a[0] * u[ii[-1], jj[-1]]
    r[-1] += c[-1] * u[ii[0], jj[0]]
    u[ii, jj] = tridiag.circulant_thomas(a, b, c, r)


def relax_legged(ii, jj, offs, bi, bj, W, E, S, N, u, f):
    """Legs concatenated tip->innermost in (ii, jj) with boundaries offs
    (length m+1); (bi, bj) is the branch point."""
    m = len(offs) - 1
    legs = []
    d = np.empty(m)
    for k in range(m):
        li = ii[offs[k]:offs[k + 1]]
        lj = jj[offs[k]:offs[k + 1]]
        a, b, c, r = _chain_system(li, lj, W, E, S, N, u, f)
        # innermost point couples to the branch
        c[-1] = _coupling(W, E, S, N, li[-1], lj[-1], bi, bj)
        r[-1] += c[-1] * u[bi, bj]
        legs.append((a, b, c, r))
        d[k] = _coupling(W, E, S, N, bi, bj, li[-1], lj[-1])
    d_centre = -(W[bi] + E[bi] + S[bj] + N[bj])
    r_centre = (f[bi, bj] - W[bi] * u[bi - 1, bj] - E[bi] * u[bi + 1, bj]
                - S[bj] * u[bi, bj - 1] - N[bj] * u[bi, bj + 1])
    for k in range(m):
        li = ii[offs[k]:offs[k + 1]]
        lj = jj[offs[k]:offs[k + 1]]
        r_centre += d[k] * u[li[-1], lj[-1]]
    xs, x_branch = tridiag.m_legged_thomas(legs, d, d_centre, r_centre)
    for k in range(m):
        u[ii[offs[k]:offs[k + 1]], jj[offs[k]:offs[k + 1]]] = xs[k]
    u[bi, bj] = x_branch
