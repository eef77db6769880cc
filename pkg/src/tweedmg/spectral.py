"""Matrix-free two-grid error-propagation operator and its spectral radius.

The two-grid operator is

    M = S^nu2 (I - P Lc^-1 R Lf) S^nu1

acting on fine-interior error vectors, where S is one sweep unit of the
chosen smoother applied to the homogeneous problem, R/P the restriction and
prolongation, and Lc^-1 an exact direct factorization of the coarse interior
operator.  Only the sum nu1 + nu2 affects the spectrum, so estimation
defaults to all-pre-smoothing (nu1 = nu, nu2 = 0); the split invariance is
exercised by the test suite rather than assumed.

The spectral radius is estimated by power iteration from a seeded random
vector.  A complex dominant pair shows up as an oscillating Rayleigh-quotient
trace; in that case the geometric mean over the tail window is reported and
an oscillation flag is set.
"""

from dataclasses import dataclass, field

import numpy as np

from . import smoothers, stencil, transfer
from .grid import Level
from .rng import Lcg64


@dataclass
class TwoGridConfig:
    fine: Level
    coarse: Level
    smoother: str = "tweed"
    restriction: str = "full"
    nu1: int = 1
    nu2: int = 0
    max_iters: int = 3000
    rel_tol: float = 1e-4
    tail_window: int = 30
    seed: int = 1

    _bundle: smoothers.PlanBundle = field(default=None, repr=False)
    _coarse_solver: stencil.DirectSolver = field(default=None, repr=False)

    def __post_init__(self):
        if self.nu1 + self.nu2 < 1:
            raise ValueError("need nu1 + nu2 >= 1")
        if (self.coarse.nx * 2, self.coarse.ny * 2) != (self.fine.nx, self.fine.ny):
            raise ValueError("coarse level must halve the fine level")
        self._bundle = smoothers.PlanBundle(self.fine.nx, self.fine.ny)
        self._coarse_solver = stencil.DirectSolver(self.coarse.stencil)


def _interior_to_field(level: Level, e: np.ndarray) -> np.ndarray:
    u = np.zeros((level.nx + 1, level.ny + 1))
    u[1:-1, 1:-1] = e.reshape(level.nx - 1, level.ny - 1)
    return u


def two_grid_apply(cfg: TwoGridConfig, e: np.ndarray) -> np.ndarray:
    """Apply M to a fine-interior error vector (flattened, i-major)."""
    lev = cfg.fine
    st = lev.stencil
    u = _interior_to_field(lev, np.asarray(e, dtype=float))
    f0 = np.zeros_like(u)
    for _ in range(cfg.nu1):
        smoothers.sweep(cfg.smoother, st, cfg._bundle, u, f0)
    # coarse-grid correction of the smoothed error: u += P Lc^-1 R (-Lf u)
    d = stencil.defect(st, u, f0)
    fc = transfer.restrict(cfg.restriction, d)
    uc = cfg._coarse_solver.solve(fc)
    u += transfer.prolong(uc)
    for _ in range(cfg.nu2):
        smoothers.sweep(cfg.smoother, st, cfg._bundle, u, f0)
    return u[1:-1, 1:-1].ravel()


@dataclass
class PowerIterationResult:
    rho: float
    converged: bool
    oscillation: bool
    iters: int
    estimates: list = field(repr=False, default_factory=list)


def _tail_stable(vals: np.ndarray, rel_tol: float) -> bool:
    hi = vals.max()
    lo = vals.min()
    return hi > 0 and (hi - lo) <= rel_tol * hi


def spectral_radius(cfg: TwoGridConfig) -> PowerIterationResult:
    """Power iteration for rho(M); see module docstring for the stopping and
    oscillation rules."""
    n = (cfg.fine.nx - 1) * (cfg.fine.ny - 1)
    v = Lcg64(cfg.seed).fill(n) - 0.5
    v /= np.linalg.norm(v)
    estimates = []
    for it in range(1, cfg.max_iters + 1):
        w = two_grid_apply(cfg, v)
        rho_k = float(np.linalg.norm(w))
        estimates.append(rho_k)
        if rho_k < 1e-300:  # operator annihilated the iterate
            return PowerIterationResult(0.0, True, False, it, estimates)
        v = w / rho_k
        if len(estimates) >= cfg.tail_window:
            tail = np.array(estimates[-cfg.tail_window:])
            if _tail_stable(tail, cfg.rel_tol):
                return PowerIterationResult(float(tail[-1]), True, False,
                                            it, estimates)
            # complex dominant pair: |estimate| oscillates but the two-step
            # geometric mean settles
            gm = np.sqrt(tail[1:] * tail[:-1])
            if _tail_stable(gm, cfg.rel_tol):
                rho = float(np.exp(np.mean(np.log(tail))))
                return PowerIterationResult(rho, True, True, it, estimates)
    tail = np.array(estimates[-cfg.tail_window:])
    rho = float(np.exp(np.mean(np.log(tail))))
    return PowerIterationResult(rho, False, False, cfg.max_iters, estimates)
