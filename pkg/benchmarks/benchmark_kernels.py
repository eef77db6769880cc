#!/usr/bin/env python3
"""Compare the compiled relaxation kernels against the pure-Python fallback.

Times full smoothing sweeps per scheme and grid size on a wall-clustered grid
and reports the per-sweep wall time of both backends plus the speedup.

Usage:
    python benchmarks/benchmark_kernels.py [--sizes 64 128 256] [--repeats 5]
"""

import argparse
import time

import numpy as np

import tweedmg
from tweedmg import grid, kernels, mgcycle, smoothers, stencil

SCHEMES = ("checkerboard", "zebra_x", "zebra_alt", "tweed", "wireframe")


def time_sweeps(scheme, st, bundle, u0, f, repeats):
    best = float("inf")
    for _ in range(repeats):
        u = u0.copy()
        t0 = time.perf_counter()
        smoothers.sweep(scheme, st, bundle, u, f)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    if not tweedmg.HAVE_EXT:
        raise SystemExit("compiled kernels are not available; nothing to compare")

    print(f"{'n':>5} {'scheme':<14} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for n in args.sizes:
        x = grid.make_tanh_wall(n, 1.0, 3.0)
        st = stencil.assemble(x, x)
        bundle = smoothers.PlanBundle(n, n)
        f = mgcycle.random_rhs(n, n, seed=1)
        u0 = np.zeros_like(f)
        for scheme in SCHEMES:
            times = {}
            for backend in ("python", "cython"):
                prev = kernels.set_backend(backend)
                try:
                    times[backend] = time_sweeps(scheme, st, bundle, u0, f,
                                                 args.repeats)
                finally:
                    kernels.set_backend(prev)
            print(f"{n:>5} {scheme:<14} {times['python'] * 1e3:>12.2f} "
                  f"{times['cython'] * 1e3:>12.2f} "
                  f"{times['python'] / times['cython']:>7.1f}x")


if __name__ == "__main__":
    main()
