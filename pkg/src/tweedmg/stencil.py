"""Five-point finite-difference operator on a (possibly stretched) grid.

Coefficient convention, for interior point (i, j):

    W[i] u[i-1,j] + E[i] u[i+1,j] + S[j] u[i,j-1] + N[j] u[i,j+1] + C(i,j) u[i,j]

with W[i] = 1/(dx_i dx_{i-1/2}), E[i] = 1/(dx_i dx_{i+1/2}),
dx_{i-1/2} = x_i - x_{i-1}, dx_i = (x_{i+1} - x_{i-1})/2, and the analogous
S, N in y.  C(i,j) = -(W[i] + E[i] + S[j] + N[j]) is always derived on the
fly, never stored.

Scalar fields are (nx+1) x (ny+1) arrays indexed [i, j]; Dirichlet data lives
in the boundary ring and is read by the operator as frozen neighbour values.
Dense/sparse assembly over interior unknowns uses row-major ordering with j
outer and i inner.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla


@dataclass(frozen=True)
class StencilCoeffs:
    """W, E indexed by i (length nx+1, entries valid for 1..nx-1, zero at the
    boundary indices); S, N indexed by j likewise."""

    W: np.ndarray
    E: np.ndarray
    S: np.ndarray
    N: np.ndarray

    @property
    def nx(self) -> int:
        return len(self.W) - 1

    @property
    def ny(self) -> int:
        return len(self.S) - 1

    def centre(self, i, j):
        """C(i, j), broadcastable over index arrays."""
        return -(self.W[i] + self.E[i] + self.S[j] + self.N[j])


def assemble(x, y) -> StencilCoeffs:
    """Build the coefficient arrays from 1D coordinates (Coords1D)."""
    xv, yv = x.values, y.values
    nx, ny = len(xv) - 1, len(yv) - 1

    W = np.zeros(nx + 1)
    E = np.zeros(nx + 1)
    hx = np.diff(xv)  # hx[i] = x_{i+1} - x_i
    dxc = (xv[2:] - xv[:-2]) / 2.0  # dx_i for i = 1..nx-1
    W[1:nx] = 1.0 / (dxc * hx[:-1])
    E[1:nx] = 1.0 / (dxc * hx[1:])

    S = np.zeros(ny + 1)
    N = np.zeros(ny + 1)
    hy = np.diff(yv)
    dyc = (yv[2:] - yv[:-2]) / 2.0
    S[1:ny] = 1.0 / (dyc * hy[:-1])
    N[1:ny] = 1.0 / (dyc * hy[1:])

    return StencilCoeffs(W, E, S, N)


def _check_shape(st: StencilCoeffs, u: np.ndarray):
    if u.shape != (st.nx + 1, st.ny + 1):
        raise ValueError(f"field shape {u.shape} does not match grid "
                         f"({st.nx + 1}, {st.ny + 1})")


def apply(st: StencilCoeffs, u: np.ndarray) -> np.ndarray:
    """L u on the interior (boundary entries of the result are zero)."""
    _check_shape(st, u)
    out = np.zeros_like(u)
    W = st.W[1:-1][:, None]
    E = st.E[1:-1][:, None]
    S = st.S[1:-1][None, :]
    N = st.N[1:-1][None, :]
    C = -(W + E + S + N)
    out[1:-1, 1:-1] = (W * u[:-2, 1:-1] + E * u[2:, 1:-1]
                       + S * u[1:-1, :-2] + N * u[1:-1, 2:]
                       + C * u[1:-1, 1:-1])
    return out


def defect(st: StencilCoeffs, u: np.ndarray, f: np.ndarray) -> np.ndarray:
    """d = f - L u on the interior, zero on the boundary ring."""
    _check_shape(st, f)
    d = -apply(st, u)
    d[1:-1, 1:-1] += f[1:-1, 1:-1]
    return d


def assemble_dense(st: StencilCoeffs) -> np.ndarray:
    """Dense interior operator (oracle use only); Dirichlet couplings dropped."""
    return _assemble(st).toarray()


def _assemble(st: StencilCoeffs) -> sp.csr_matrix:
    nx, ny = st.nx, st.ny
    mi, mj = nx - 1, ny - 1
    n = mi * mj
    ii, jj = np.meshgrid(np.arange(1, nx), np.arange(1, ny), indexing="ij")
    ii = ii.ravel()
    jj = jj.ravel()
    idx = (jj - 1) * mi + (ii - 1)  # j outer, i inner

    rows = [idx]
    cols = [idx]
    vals = [st.centre(ii, jj)]
    for di, dj, coef in ((-1, 0, st.W[ii]), (1, 0, st.E[ii]),
                         (0, -1, st.S[jj]), (0, 1, st.N[jj])):
        ni, nj = ii + di, jj + dj
        keep = (ni >= 1) & (ni <= nx - 1) & (nj >= 1) & (nj <= ny - 1)
        rows.append(idx[keep])
        cols.append((nj[keep] - 1) * mi + (ni[keep] - 1))
        vals.append(coef[keep])
    A = sp.coo_matrix((np.concatenate(vals),
                       (np.concatenate(rows), np.concatenate(cols))),
                      shape=(n, n))
    return A.tocsr()


class DirectSolver:
    """Sparse LU factorization of the interior operator, factored once.

    Boundary values are folded into the right-hand side, matching the
    identity-row treatment of Dirichlet points.
    """

    def __init__(self, st: StencilCoeffs):
        self.st = st
        self._lu = spla.splu(_assemble(st).tocsc())

    def solve(self, f: np.ndarray, g: np.ndarray | None = None) -> np.ndarray:
        """Solve L u = f with boundary data g (zero if omitted)."""
        st = self.st
        _check_shape(st, f)
        u = np.zeros_like(f)
        if g is not None:
            _check_shape(st, g)
            u[0, :] = g[0, :]
            u[-1, :] = g[-1, :]
            u[:, 0] = g[:, 0]
            u[:, -1] = g[:, -1]
        # with zero interior, L u picks up exactly the boundary couplings
        rhs = f[1:-1, 1:-1] - apply(st, u)[1:-1, 1:-1]
        x = self._lu.solve(rhs.T.ravel())  # j outer, i inner
        u[1:-1, 1:-1] = x.reshape(st.ny - 1, st.nx - 1).T
        return u


def direct_solve(st: StencilCoeffs, f: np.ndarray,
                 g: np.ndarray | None = None) -> np.ndarray:
    """One-shot direct solve (factors the operator each call)."""
    return DirectSolver(st).solve(f, g)
