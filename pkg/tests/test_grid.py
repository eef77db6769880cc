"""Coordinate generation, coarsening, and hierarchy construction."""

import numpy as np
import pytest

from tweedmg import grid


# Values evaluated from the stretching formulas at 40-digit precision
# (independent high-precision arithmetic, frozen here).
WALL_N4_C15 = [0.0, 0.1491464520703328565, 0.5, 0.8508535479296671435, 1.0]
CENTRE_N4_C15 = [0.0, 0.3508535479296671435, 0.5, 0.6491464520703328565, 1.0]


def test_uniform_spacing():
    x = grid.make_uniform(8, 2.0)
    assert x.n == 8
    assert x.length == 2.0
    assert np.allclose(np.diff(x.values), 0.25, rtol=0, atol=1e-15)
    assert x.values[0] == 0.0 and x.values[-1] == 2.0


def test_wall_frozen_values():
    x = grid.make_tanh_wall(4, 1.0, 1.5)
    assert np.max(np.abs(x.values - WALL_N4_C15)) < 1e-15


def test_centre_frozen_values():
    x = grid.make_tanh_centre(4, 1.0, 1.5)
    assert np.max(np.abs(x.values - CENTRE_N4_C15)) < 1e-15


@pytest.mark.parametrize("maker", [grid.make_tanh_wall, grid.make_tanh_centre])
@pytest.mark.parametrize("n,L,c", [(8, 1.0, 1.5), (32, 2.5, 3.0), (128, 1.0, 3.0)])
def test_stretch_symmetry_and_endpoints(maker, n, L, c):
    x = maker(n, L, c)
    v = x.values
    assert v[0] == 0.0 and v[n] == L
    # mirror symmetry about the midpoint
    assert np.max(np.abs(v + v[::-1] - L)) <= 1e-13 * L
    # strictly increasing
    assert np.all(np.diff(v) > 0)


def test_wall_clusters_at_walls_centre_at_middle():
    wall = grid.make_tanh_wall(64, 1.0, 3.0).values
    ctr = grid.make_tanh_centre(64, 1.0, 3.0).values
    dw, dc = np.diff(wall), np.diff(ctr)
    assert dw[0] < dw[31]     # finest spacing at the wall
    assert dc[31] < dc[0]     # finest spacing at the middle


def test_make_coords_dispatch():
    u = grid.make_coords("uniform", 8, 1.0)
    assert np.allclose(np.diff(u.values), 0.125)
    w = grid.make_coords("wall", 4, 1.0, 1.5)
    assert np.max(np.abs(w.values - WALL_N4_C15)) < 1e-15
    with pytest.raises(ValueError):
        grid.make_coords("spline", 8, 1.0)
    with pytest.raises(ValueError):
        grid.make_coords("wall", 8, 1.0)          # missing strength


def test_invalid_parameters():
    with pytest.raises(ValueError):
        grid.make_uniform(1, 1.0)
    with pytest.raises(ValueError):
        grid.make_tanh_wall(8, -1.0, 1.5)
    with pytest.raises(ValueError):
        grid.make_tanh_centre(8, 1.0, 0.0)


def test_coarsen_is_injection():
    x = grid.make_tanh_wall(16, 1.0, 2.0)
    xc = grid.coarsen(x)
    assert xc.n == 8
    assert np.array_equal(xc.values, x.values[::2])


def test_coarsen_nested_tanh():
    # every-other-point injection of the n=128 wall grid equals the n=64 grid
    fine = grid.make_tanh_wall(128, 1.0, 3.0)
    assert np.max(np.abs(grid.coarsen(fine).values
                         - grid.make_tanh_wall(64, 1.0, 3.0).values)) < 1e-15


def test_coarsen_errors():
    with pytest.raises(ValueError):
        grid.coarsen(grid.make_uniform(9, 1.0))   # odd interval count
    with pytest.raises(ValueError):
        grid.coarsen(grid.make_uniform(2, 1.0))   # would leave a single cell


def test_hierarchy_depth_square():
    x = grid.make_uniform(128, 1.0)
    h = grid.build_hierarchy(x, x)
    sizes = [(lv.nx, lv.ny) for lv in h.levels]
    assert sizes == [(n, n) for n in (128, 64, 32, 16, 8, 4, 2)]
    assert h.finest is h.levels[0]
    assert h.coarsest is h.levels[-1]


def test_hierarchy_depth_rectangular():
    h = grid.build_hierarchy(grid.make_uniform(8, 1.0), grid.make_uniform(4, 1.0))
    assert [(lv.nx, lv.ny) for lv in h.levels] == [(8, 4), (4, 2)]


def test_hierarchy_single_level():
    h = grid.build_hierarchy(grid.make_uniform(2, 1.0), grid.make_uniform(2, 1.0))
    assert len(h.levels) == 1


def test_level_caches_stencil_and_plans():
    lv = grid.Level(grid.make_uniform(8, 1.0), grid.make_uniform(8, 1.0))
    assert lv.stencil is lv.stencil
    assert lv.plan("tweed") is lv.plan("tweed")
    assert lv.layout("wireframe").scheme == "wireframe"
