"""Direct solvers for tridiagonal, periodic, and branched-line systems.

Every solver is checked against dense LU factorization of the explicitly
assembled matrix on randomly generated diagonally dominant systems.
"""

import numpy as np
import pytest
import scipy.linalg as la

from tweedmg import tridiag
from tweedmg.rng import Lcg64


def _dd_bands(rng, m):
    """Random bands with a row-wise diagonally dominant main diagonal."""
    a = rng.fill(m) - 0.5
    c = rng.fill(m) - 0.5
    b = np.abs(a) + np.abs(c) + 1.0 + rng.fill(m)
    sign = np.where(rng.fill(m) < 0.5, -1.0, 1.0)
    return a, sign * b, c


def _tridiag_dense(a, b, c):
    m = len(b)
    A = np.diag(b)
    for k in range(1, m):
        A[k, k - 1] = a[k]
        A[k - 1, k] = c[k - 1]
    return A


def test_thomas_random():
    rng = Lcg64(2024)
    for trial in range(200):
        m = 1 + trial % 25
        a, b, c = _dd_bands(rng, m)
        r = rng.fill(m) - 0.5
        x = tridiag.thomas(a, b, c, r)
        ref = la.solve(_tridiag_dense(a, b, c), r)
        assert np.max(np.abs(x - ref)) <= 1e-12 * max(1.0, np.max(np.abs(ref)))


def test_circulant_thomas_random():
    rng = Lcg64(77)
    for trial in range(200):
        m = 3 + trial % 23
        a, b, c = _dd_bands(rng, m)
        b += np.sign(b) * 1.0        # extra margin for the wraparound band
        r = rng.fill(m) - 0.5
        x = tridiag.circulant_thomas(a, b, c, r)
        A = _tridiag_dense(a, b, c)
        A[0, m - 1] = a[0]
        A[m - 1, 0] = c[m - 1]
        ref = la.solve(A, r)
        assert np.max(np.abs(x - ref)) <= 1e-12 * max(1.0, np.max(np.abs(ref)))


def _legged_dense(legs, d, d_centre):
    """Assemble the coupled system: legs stacked tip-to-branch, branch last."""
    sizes = [len(leg[1]) for leg in legs]
    ntot = sum(sizes) + 1
    A = np.zeros((ntot, ntot))
    off = 0
    for (a, b, c, _), dk in zip(legs, d):
        p = len(b)
        A[off:off + p, off:off + p] = _tridiag_dense(a, b, c)
        A[off + p - 1, ntot - 1] = c[p - 1]       # innermost point -> branch
        A[ntot - 1, off + p - 1] = dk             # branch row -> innermost point
        off += p
    return A


def test_m_legged_random():
    rng = Lcg64(4242)
    for trial in range(200):
        m = 2 + trial % 4
        sizes = [1 + int(rng.uniform() * 7) for _ in range(m)]  # unequal legs
        legs, d = [], []
        for p in sizes:
            a, b, c = _dd_bands(rng, p)
            r = rng.fill(p) - 0.5
            legs.append((a, b, c, r))
            d.append(rng.uniform() - 0.5)
        d_centre = m + 1.0 + rng.uniform()
        r_centre = rng.uniform() - 0.5
        xs, xb = tridiag.m_legged_thomas(legs, d, d_centre, r_centre)
        A = _legged_dense(legs, d, d_centre)
        A[-1, -1] = d_centre
        rhs = np.concatenate([leg[3] for leg in legs] + [[r_centre]])
        ref = la.solve(A, rhs)
        got = np.concatenate(xs + [[xb]])
        assert np.max(np.abs(got - ref)) <= 1e-12 * max(1.0, np.max(np.abs(ref)))


def test_two_legs_equal_open_chain():
    # two legs through a branch form one open chain; both solvers must agree
    rng = Lcg64(9)
    a1, b1, c1 = _dd_bands(rng, 3)
    a2, b2, c2 = _dd_bands(rng, 4)
    r1, r2 = rng.fill(3) - 0.5, rng.fill(4) - 0.5
    d = [rng.uniform() - 0.5, rng.uniform() - 0.5]
    d_centre, r_centre = 4.0, rng.uniform()
    xs, xb = tridiag.m_legged_thomas([(a1, b1, c1, r1), (a2, b2, c2, r2)],
                                     d, d_centre, r_centre)
    # chain ordering: leg 1 tip..branch-neighbour, branch, reversed leg 2
    ca = np.concatenate([a1, [d[0]], [c2[-1]], c2[:-1][::-1]])
    cb = np.concatenate([b1, [d_centre], b2[::-1]])
    cc = np.concatenate([c1, [d[1]], a2[1:][::-1], [0.0]])
    cr = np.concatenate([r1, [r_centre], r2[::-1]])
    chain = tridiag.thomas(ca, cb, cc, cr)
    got = np.concatenate([xs[0], [xb], xs[1][::-1]])
    assert np.max(np.abs(got - chain)) < 1e-12


def test_singular_pivot_raises():
    with pytest.raises(tridiag.SingularSystemError):
        tridiag.thomas(np.zeros(2), np.zeros(2), np.zeros(2), np.ones(2))
    with pytest.raises(tridiag.SingularSystemError):
        tridiag.circulant_thomas(np.ones(3), np.zeros(3), np.ones(3), np.ones(3))


def test_singular_is_value_error():
    assert issubclass(tridiag.SingularSystemError, ValueError)


def test_m_legged_needs_two_legs():
    with pytest.raises(ValueError):
        tridiag.m_legged_thomas([(np.ones(1), np.ones(1), np.ones(1), np.ones(1))],
                                [0.1], 2.0, 1.0)
