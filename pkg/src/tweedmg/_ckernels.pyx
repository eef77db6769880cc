# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled relaxation kernels (hot inner loops of the block smoothers).

Mirrors pykernels: same block semantics, same arithmetic ordering per block.
"""

import numpy as np

NAME = "cython"

class SingularSystemError(ValueError):
    pass


cdef inline int _checkpiv(double v) except -1:
    if -1e-300 < v < 1e-300:
        raise SingularSystemError("zero pivot")
    return 0


cdef inline double _coupling(double[::1] W, double[::1] E,
                             double[::1] S, double[::1] N,
                             Py_ssize_t i, Py_ssize_t j,
                             Py_ssize_t pi, Py_ssize_t pj) nogil:
    if pi == i - 1:
        return W[i]
    if pi == i + 1:
        return E[i]
    if pj == j - 1:
        return S[j]
    return N[j]


cdef inline double _frozen_rhs(double[::1] W, double[::1] E,
                               double[::1] S, double[::1] N,
                               double[:, ::1] u, double[:, ::1] f,
                               Py_ssize_t i, Py_ssize_t j) nogil:
    return (f[i, j] - W[i] * u[i - 1, j] - E[i] * u[i + 1, j]
            - S[j] * u[i, j - 1] - N[j] * u[i, j + 1])


def relax_points(long[::1] ii, long[::1] jj,
                 double[::1] W, double[::1] E, double[::1] S, double[::1] N,
                 double[:, ::1] u, double[:, ::1] f):
    cdef Py_ssize_t k, i, j
    cdef double b
    for k in range(ii.shape[0]):
        i = ii[k]
        j = jj[k]
        b = -(W[i] + E[i] + S[j] + N[j])
        u[i, j] = _frozen_rhs(W, E, S, N, u, f, i, j) / b


cdef int _chain_system(long[::1] ii, long[::1] jj,
                       double[::1] W, double[::1] E,
                       double[::1] S, double[::1] N,
                       double[:, ::1] u, double[:, ::1] f,
                       double[::1] a, double[::1] b,
                       double[::1] c, double[::1] r) nogil:
    cdef Py_ssize_t k, m = ii.shape[0]
    for k in range(m):
        b[k] = -(W[ii[k]] + E[ii[k]] + S[jj[k]] + N[jj[k]])
        r[k] = _frozen_rhs(W, E, S, N, u, f, ii[k], jj[k])
    a[0] = 0.0
    c[m - 1] = 0.0
    for k in range(1, m):
        a[k] = _coupling(W, E, S, N, ii[k], jj[k], ii[k - 1], jj[k - 1])
        r[k] += a[k] * u[ii[k - 1], jj[k - 1]]
        c[k - 1] = _coupling(W, E, S, N, ii[k - 1], jj[k - 1], ii[k], jj[k])
        r[k - 1] += c[k - 1] * u[ii[k], jj[k]]
    return 0


cdef int _thomas_inplace(double[::1] a, double[::1] b,
                         double[::1] c, double[::1] r) except -1:
    """Overwrites r with the solution; destroys b."""
    cdef Py_ssize_t k, m = b.shape[0]
    cdef double w
    for k in range(1, m):
        _checkpiv(b[k - 1])
        w = a[k] / b[k - 1]
        b[k] -= w * c[k - 1]
        r[k] -= w * r[k - 1]
    _checkpiv(b[m - 1])
    r[m - 1] /= b[m - 1]
    for k in range(m - 2, -1, -1):
        r[k] = (r[k] - c[k] * r[k + 1]) / b[k]
    return 0


def relax_chain(long[::1] ii, long[::1] jj,
                double[::1] W, double[::1] E, double[::1] S, double[::1] N,
                double[:, ::1] u, double[:, ::1] f):
    cdef Py_ssize_t k, m = ii.shape[0]
    if m == 1:
        relax_points(ii, jj, W, E, S, N, u, f)
        return
    scratch = np.empty((4, m))
    cdef double[::1] a = scratch[0], b = scratch[1], c = scratch[2], r = scratch[3]
    _chain_system(ii, jj, W, E, S, N, u, f, a, b, c, r)
    _thomas_inplace(a, b, c, r)
    for k in range(m):
        u[ii[k], jj[k]] = r[k]


def relax_ring(long[::1] ii, long[::1] jj,
               double[::1] W, double[::1] E, double[::1] S, double[::1] N,
               double[:, ::1] u, double[:, ::1] f):
    cdef Py_ssize_t k, m = ii.shape[0], mm = m - 1
    cdef double w, xm, den
    scratch = np.empty((7, m))
    cdef double[::1] a = scratch[0], b = scratch[1], c = scratch[2], r = scratch[3]
    cdef double[::1] g = scratch[4], y = scratch[5], z = scratch[6]
    _chain_system(ii, jj, W, E, S, N, u, f, a, b, c, r)
    a[0] = _coupling(W, E, S, N, ii[0], jj[0], ii[mm], jj[mm])
    c[mm] = _coupling(W, E, S, N, ii[mm], jj[mm], ii[0], jj[0])
    r[0] += a[0] * u[ii[mm], jj[mm]]
    r[mm] += c[mm] * u[ii[0], jj[0]]
    # eliminate the open chain 0..m-2 carrying the column coupled to x[m-1]
    for k in range(mm):
        g[k] = 0.0
    g[0] = a[0]
    g[mm - 1] += c[mm - 1]
    for k in range(1, mm):
        _checkpiv(b[k - 1])
        w = a[k] / b[k - 1]
        b[k] -= w * c[k - 1]
        r[k] -= w * r[k - 1]
        g[k] -= w * g[k - 1]
    _checkpiv(b[mm - 1])
    y[mm - 1] = r[mm - 1] / b[mm - 1]
    z[mm - 1] = g[mm - 1] / b[mm - 1]
    for k in range(mm - 2, -1, -1):
        y[k] = (r[k] - c[k] * y[k + 1]) / b[k]
        z[k] = (g[k] - c[k] * z[k + 1]) / b[k]
    den = b[mm] - c[mm] * z[0] - a[mm] * z[mm - 1]
    _checkpiv(den)
    xm = (r[mm] - c[mm] * y[0] - a[mm] * y[mm - 1]) / den
    for k in range(mm):
        u[ii[k], jj[k]] = y[k] - z[k] * xm
    u[ii[mm], jj[mm]] = xm


def relax_legged(long[::1] ii, long[::1] jj, long[::1] offs,
                 Py_ssize_t bi, Py_ssize_t bj,
                 double[::1] W, double[::1] E, double[::1] S, double[::1] N,
                 double[:, ::1] u, double[:, ::1] f):
    cdef Py_ssize_t k, t, p, lo, hi, m = offs.shape[0] - 1
    cdef Py_ssize_t n = ii.shape[0]
    cdef double w, dk, num, den, x_branch, xk
    scratch = np.empty((4, n))
    dcol = np.empty(m)
    cdef double[::1] a = scratch[0], b = scratch[1], c = scratch[2], r = scratch[3]
    cdef double[::1] d = dcol
    num = _frozen_rhs(W, E, S, N, u, f, bi, bj)
    den = -(W[bi] + E[bi] + S[bj] + N[bj])
    for k in range(m):
        lo = offs[k]
        hi = offs[k + 1]
        _chain_system(ii[lo:hi], jj[lo:hi],
                      W, E, S, N, u, f, a[lo:hi], b[lo:hi], c[lo:hi], r[lo:hi])
        c[hi - 1] = _coupling(W, E, S, N, ii[hi - 1], jj[hi - 1], bi, bj)
        r[hi - 1] += c[hi - 1] * u[bi, bj]
        d[k] = _coupling(W, E, S, N, bi, bj, ii[hi - 1], jj[hi - 1])
        num += d[k] * u[ii[hi - 1], jj[hi - 1]]
        # forward elimination from the tip towards the branch
        for t in range(lo + 1, hi):
            _checkpiv(b[t - 1])
            w = a[t] / b[t - 1]
            b[t] -= w * c[t - 1]
            r[t] -= w * r[t - 1]
        _checkpiv(b[hi - 1])
        num -= d[k] * r[hi - 1] / b[hi - 1]
        den -= d[k] * c[hi - 1] / b[hi - 1]
    _checkpiv(den)
    x_branch = num / den
    u[bi, bj] = x_branch
    for k in range(m):
        lo = offs[k]
        hi = offs[k + 1]
        xk = (r[hi - 1] - c[hi - 1] * x_branch) / b[hi - 1]
        u[ii[hi - 1], jj[hi - 1]] = xk
        for t in range(hi - 2, lo - 1, -1):
            xk = (r[t] - c[t] * xk) / b[t]
            u[ii[t], jj[t]] = xk
