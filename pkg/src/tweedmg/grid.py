"""1D grid generation, coarsening, and the multigrid level hierarchy.

Coordinates along one axis are stored including both boundary points:
``values[0] = 0`` and ``values[n] = L`` with n even on any level that is
smoothed.  Stretched grids use hyperbolic-tangent clustering, either towards
both walls or towards the domain centre.
"""

from dataclasses import dataclass, field

import numpy as np

from . import layout as layout_mod
from . import stencil as stencil_mod


@dataclass(frozen=True)
class Coords1D:
    """Strictly increasing coordinates of one axis, boundaries included."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def length(self) -> float:
        return float(self.values[-1])


def _check_n(n: int):
    if n < 2 or n % 2:
        raise ValueError(f"grid intervals must be even and >= 2, got n={n}")


def make_uniform(n: int, L: float) -> Coords1D:
    """Equispaced coordinates, values[i] = i*L/n."""
    _check_n(n)
    if L <= 0:
        raise ValueError(f"domain length must be positive, got {L}")
    return Coords1D(np.arange(n + 1) * (L / n))


def make_tanh_wall(n: int, L: float, c: float) -> Coords1D:
    """Near-wall clustering: x_i = (L/2)(1 + tanh(c(2i/n - 1))/tanh c).

    Larger c clusters points more strongly towards both ends.  Endpoints are
    analytically exact at 0 and L; they are clamped to remove rounding residue.
    """
    _check_n(n)
    if L <= 0 or c <= 0:
        raise ValueError(f"need L > 0 and c > 0, got L={L}, c={c}")
    i = np.arange(n + 1)
    v = (L / 2.0) * (1.0 + np.tanh(c * (2.0 * i / n - 1.0)) / np.tanh(c))
    v[0] = 0.0
    v[n] = L
    return Coords1D(v)


def make_tanh_centre(n: int, L: float, c: float) -> Coords1D:
    """Near-centre clustering, the shifted counterpart of make_tanh_wall.

    x_i = (L/2) tanh(2ci/n)/tanh c for i <= n/2, mirrored about L/2 above.
    """
    _check_n(n)
    if L <= 0 or c <= 0:
        raise ValueError(f"need L > 0 and c > 0, got L={L}, c={c}")
    i = np.arange(n + 1)
    lo = (L / 2.0) * np.tanh(2.0 * c * i / n) / np.tanh(c)
    hi = (L / 2.0) * (2.0 - np.tanh(c * (2.0 - 2.0 * i / n)) / np.tanh(c))
    v = np.where(i <= n // 2, lo, hi)
    v[0] = 0.0
    v[n] = L
    return Coords1D(v)


_STRETCH_MAKERS = {
    "uniform": lambda n, L, c: make_uniform(n, L),
    "wall": make_tanh_wall,
    "centre": make_tanh_centre,
}


def make_coords(kind: str, n: int, L: float, c: float | None = None) -> Coords1D:
    """Dispatch on stretching kind ('uniform', 'wall', 'centre')."""
    if kind not in _STRETCH_MAKERS:
        raise ValueError(f"unknown stretching kind {kind!r}")
    if kind != "uniform" and (c is None or c <= 0):
        raise ValueError(f"stretching kind {kind!r} requires c > 0")
    return _STRETCH_MAKERS[kind](n, L, c)


def coarsen(fine: Coords1D) -> Coords1D:
    """Remove every other interior point; coarse values are the fine values
    at even indices, bit-exact (injection, not re-evaluation)."""
    n = fine.n
    if n % 2:
        raise ValueError(f"cannot coarsen a grid with odd n={n}")
    if n // 2 < 2:
        raise ValueError(f"coarsening n={n} would leave no interior point")
    return Coords1D(fine.values[::2].copy())


class Level:
    """One level of the hierarchy: coordinates, stencil, cached smoother plans."""

    def __init__(self, x: Coords1D, y: Coords1D):
        self.x = x
        self.y = y
        self.stencil = stencil_mod.assemble(x, y)
        self._plans: dict[str, object] = {}

    @property
    def nx(self) -> int:
        return self.x.n

    @property
    def ny(self) -> int:
        return self.y.n

    def plan(self, scheme: str):
        """Compiled colour plan for one smoothing scheme, built lazily."""
        from . import smoothers  # local import: smoothers depends on grid types

        if scheme not in self._plans:
            self._plans[scheme] = smoothers.compile_plan(scheme, self.nx, self.ny)
        return self._plans[scheme]

    def layout(self, scheme: str) -> "layout_mod.BlockLayout":
        if scheme == "tweed":
            return layout_mod.tweed_layout(self.nx, self.ny)
        if scheme == "wireframe":
            return layout_mod.wireframe_layout(self.nx, self.ny)
        raise ValueError(f"no block layout for scheme {scheme!r}")


@dataclass
class Hierarchy:
    """Sequence of levels, finest first."""

    levels: list[Level]
    _coarse_solver: object = field(default=None, repr=False)

    @property
    def finest(self) -> Level:
        return self.levels[0]

    @property
    def coarsest(self) -> Level:
        return self.levels[-1]

    def coarse_solver(self) -> "stencil_mod.DirectSolver":
        """Direct factorization of the coarsest-level operator (cached)."""
        if self._coarse_solver is None:
            self._coarse_solver = stencil_mod.DirectSolver(self.coarsest.stencil)
        return self._coarse_solver


def build_hierarchy(x: Coords1D, y: Coords1D) -> Hierarchy:
    """Coarsen both axes simultaneously until halving either axis would leave
    fewer than one interior point (coarsest level keeps >= 3 points per axis)."""
    levels = [Level(x, y)]
    while True:
        lx, ly = levels[-1].x, levels[-1].y
        if lx.n % 2 or ly.n % 2 or lx.n // 2 < 2 or ly.n // 2 < 2:
            break
        levels.append(Level(coarsen(lx), coarsen(ly)))
    return Hierarchy(levels)
