"""Exact block Gauss-Seidel sweeps over colour-partitioned blocks.

One sweep of any scheme is a red sub-sweep followed by a black sub-sweep.
The two alternating schemes count the full pair as one sweep unit:
zebra_alt = zebra_x then zebra_y, tweed_wire_alt = tweed then wireframe.

Block layouts are compiled once per level into flat index arrays grouped by
colour and kernel kind, so a sweep performs no per-block Python-side
geometry work.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels, layout as layout_mod

KINDS = ("checkerboard", "zebra_x", "zebra_y", "zebra_alt",
         "tweed", "wireframe", "tweed_wire_alt")

#: schemes whose sweep unit is a pair of relaxations
PAIR_KINDS = ("zebra_alt", "tweed_wire_alt")


@dataclass
class ColourPlan:
    """Flat per-colour execution plan: merged point blocks, then legged,
    line, and ring blocks in construction order."""

    points_i: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    points_j: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    legged: list = field(default_factory=list)   # (ii, jj, offs, bi, bj)
    chains: list = field(default_factory=list)   # (ii, jj)
    rings: list = field(default_factory=list)    # (ii, jj)


def _idx(points) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(points, dtype=np.int64).reshape(-1, 2)
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


def compile_layout(lay: layout_mod.BlockLayout) -> dict[str, ColourPlan]:
    plans = {"red": ColourPlan(), "black": ColourPlan()}
    points = {"red": [], "black": []}
    for blk in lay.blocks:
        plan = plans[blk.colour]
        if blk.kind == "point":
            points[blk.colour].extend(blk.members)
        elif blk.kind == "line":
            plan.chains.append(_idx(blk.members))
        elif blk.kind == "ring":
            plan.rings.append(_idx(blk.members))
        else:  # legged
            flat = [p for leg in blk.legs for p in leg]
            offs = np.zeros(len(blk.legs) + 1, dtype=np.int64)
            np.cumsum([len(leg) for leg in blk.legs], out=offs[1:])
            ii, jj = _idx(flat)
            plan.legged.append((ii, jj, offs, blk.branch[0], blk.branch[1]))
    for colour in ("red", "black"):
        if points[colour]:
            plans[colour].points_i, plans[colour].points_j = _idx(points[colour])
    return plans


def _checkerboard_plan(nx: int, ny: int) -> dict[str, ColourPlan]:
    ii, jj = np.meshgrid(np.arange(1, nx, dtype=np.int64),
                         np.arange(1, ny, dtype=np.int64), indexing="ij")
    ii, jj = ii.ravel(), jj.ravel()
    red = (ii + jj) % 2 == 0
    plans = {}
    for colour, mask in (("red", red), ("black", ~red)):
        plans[colour] = ColourPlan(points_i=np.ascontiguousarray(ii[mask]),
                                   points_j=np.ascontiguousarray(jj[mask]))
    return plans


def _zebra_plan(nx: int, ny: int, axis: str) -> dict[str, ColourPlan]:
    plans = {"red": ColourPlan(), "black": ColourPlan()}
    if axis == "x":  # lines along x at fixed j; red lines have odd j
        along = np.arange(1, nx, dtype=np.int64)
        for j in range(1, ny):
            plan = plans["red" if j % 2 else "black"]
            plan.chains.append((along, np.full_like(along, j)))
    else:
        along = np.arange(1, ny, dtype=np.int64)
        for i in range(1, nx):
            plan = plans["red" if i % 2 else "black"]
            plan.chains.append((np.full_like(along, i), along))
    return plans


def compile_plan(scheme: str, nx: int, ny: int) -> dict[str, ColourPlan]:
    """Colour plans for one non-alternating scheme on an nx x ny grid."""
    if scheme == "checkerboard":
        return _checkerboard_plan(nx, ny)
    if scheme == "zebra_x":
        return _zebra_plan(nx, ny, "x")
    if scheme == "zebra_y":
        return _zebra_plan(nx, ny, "y")
    if scheme == "tweed":
        return compile_layout(layout_mod.tweed_layout(nx, ny))
    if scheme == "wireframe":
        return compile_layout(layout_mod.wireframe_layout(nx, ny))
    raise ValueError(f"unknown smoother scheme {scheme!r}")


class PlanBundle:
    """Lazy cache of compiled plans for one grid size."""

    def __init__(self, nx: int, ny: int):
        self.nx = nx
        self.ny = ny
        self._plans: dict[str, dict] = {}

    def plans(self, scheme: str) -> dict[str, ColourPlan]:
        if scheme not in self._plans:
            self._plans[scheme] = compile_plan(scheme, self.nx, self.ny)
        return self._plans[scheme]


def sweep(kind: str, st, bundle: PlanBundle, u: np.ndarray, f: np.ndarray):
    """One sweep unit of the given scheme, updating u in place.

    After each colour sub-sweep the defect vanishes at every point of that
    colour (blocks are solved exactly with out-of-block values frozen)."""
    if kind == "zebra_alt":
        sweep("zebra_x", st, bundle, u, f)
        sweep("zebra_y", st, bundle, u, f)
        return
    if kind == "tweed_wire_alt":
        sweep("tweed", st, bundle, u, f)
        sweep("wireframe", st, bundle, u, f)
        return
    if kind not in KINDS:
        raise ValueError(f"unknown smoother kind {kind!r}")
    if u.shape != (st.nx + 1, st.ny + 1) or u.shape != f.shape:
        raise ValueError("field shapes do not match the stencil grid")
    plans = bundle.plans(kind)
    k = kernels.active()
    W, E, S, N = st.W, st.E, st.S, st.N
    for colour in ("red", "black"):
        p = plans[colour]
        if p.points_i.size:
            k.relax_points(p.points_i, p.points_j, W, E, S, N, u, f)
        for ii, jj, offs, bi, bj in p.legged:
            k.relax_legged(ii, jj, offs, bi, bj, W, E, S, N, u, f)
        for ii, jj in p.chains:
            k.relax_chain(ii, jj, W, E, S, N, u, f)
        for ii, jj in p.rings:
            k.relax_ring(ii, jj, W, E, S, N, u, f)


def sweep_cost(kind: str, n: int) -> int:
    """Flops for one sweep unit on a square n x n interior (n odd).

    Closed forms for tweed and wireframe; leading-order counts otherwise.
    Alternating kinds are per pair."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"interior side must be odd and >= 3, got {n}")
    if kind == "tweed":
        return 12 * n * n - 10 * n + 11
    if kind == "wireframe":
        return 18 * n * n - 8 * n - 1
    if kind == "checkerboard":
        return 9 * n * n
    if kind in ("zebra_x", "zebra_y"):
        return 12 * n * n
    if kind == "zebra_alt":
        return 24 * n * n
    if kind == "tweed_wire_alt":
        return 30 * n * n
    raise ValueError(f"unknown smoother kind {kind!r}")
