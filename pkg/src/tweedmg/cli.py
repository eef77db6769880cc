"""Command-line front end: solve runs, spectral sweeps, grid/layout/defect
dumps.  All output is deterministic CSV/JSON for external plotting; floats
are written with 17 significant digits and JSON keys are sorted.

Exit codes: 0 on completion (including flagged non-convergence, which is a
scientific result, not a failure), 2 on usage errors, 1 on IO errors.
"""

import argparse
import json
import sys

import numpy as np

from . import grid, layout, mgcycle, smoothers, spectral, stencil, transfer


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _add_stretch_flags(p: argparse.ArgumentParser):
    p.add_argument("--stretch", choices=("uniform", "wall", "centre"),
                   default="uniform")
    p.add_argument("--c", type=float, default=None,
                   help="stretching strength (required for wall/centre)")


def _add_problem_flags(p: argparse.ArgumentParser):
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--lx", type=float, default=1.0)
    p.add_argument("--ly", type=float, default=1.0)
    _add_stretch_flags(p)
    p.add_argument("--smoother", choices=smoothers.KINDS, required=True)
    p.add_argument("--restrict", choices=transfer.RESTRICTIONS, default="full")
    p.add_argument("--seed", type=int, default=0)


def _coords(parser, args):
    try:
        x = grid.make_coords(args.stretch, args.nx, args.lx, args.c)
        y = grid.make_coords(args.stretch, args.ny, args.ly, args.c)
    except ValueError as exc:
        parser.error(str(exc))
    return x, y


def _write(path, text):
    try:
        if path == "-":
            sys.stdout.write(text)
        else:
            with open(path, "w") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)


def _run_solve(h, args):
    cfg = mgcycle.CycleConfig(smoother=args.smoother, restriction=args.restrict,
                              nu1=args.nu1, nu2=args.nu2, tol=args.tol,
                              max_cycles=args.max_cycles, seed=args.seed)
    f = mgcycle.random_rhs(args.nx, args.ny, args.seed)
    u, report = mgcycle.solve(h, cfg, f)
    return cfg, f, u, report


def cmd_solve(parser, args) -> int:
    x, y = _coords(parser, args)
    h = grid.build_hierarchy(x, y)
    cfg, _, _, rep = _run_solve(h, args)
    d0 = rep.defect_norms[0]
    lines = ["cycle,relaxations,defect_max,rel_defect"]
    lines.append(f"0,0,{_fmt(d0)},{_fmt(1.0)}")
    for k, dn in enumerate(rep.defect_norms[1:]):
        lines.append(f"{k + 1},{rep.relaxations[k]},{_fmt(dn)},{_fmt(dn / d0)}")
    _write(args.trace, "\n".join(lines) + "\n")
    doc = {
        "config": {
            "nx": args.nx, "ny": args.ny, "stretch": args.stretch, "c": args.c,
            "smoother": args.smoother, "restrict": args.restrict,
            "nu1": args.nu1, "nu2": args.nu2, "tol": args.tol,
            "max_cycles": args.max_cycles, "seed": args.seed,
        },
        "converged": rep.converged,
        "cycles": rep.cycles,
        "final_rel_defect": rep.final_rel_defect,
        "per_cycle_ratios": rep.per_cycle_ratios,
    }
    _write(args.out, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 0


def cmd_spectral(parser, args) -> int:
    if args.nu < 1:
        parser.error("--nu must be >= 1")
    x, y = _coords(parser, args)
    h = grid.build_hierarchy(x, y)
    if len(h.levels) < 2:
        parser.error("grid too coarse for a two-grid analysis")
    cfg = spectral.TwoGridConfig(h.levels[0], h.levels[1],
                                 smoother=args.smoother,
                                 restriction=args.restrict,
                                 nu1=args.nu, nu2=0,
                                 max_iters=args.max_iters, seed=args.seed)
    res = spectral.spectral_radius(cfg)
    doc = {"rho": res.rho, "converged": res.converged,
           "oscillation": res.oscillation, "iters": res.iters}
    _write(args.out, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 0


def cmd_defect_field(parser, args) -> int:
    x, y = _coords(parser, args)
    h = grid.build_hierarchy(x, y)
    cfg = mgcycle.CycleConfig(smoother=args.smoother, restriction=args.restrict,
                              nu1=args.nu1, nu2=args.nu2, seed=args.seed,
                              tol=1e-300, max_cycles=max(args.cycles, 1))
    f = mgcycle.random_rhs(args.nx, args.ny, args.seed)
    u = np.zeros((args.nx + 1, args.ny + 1))
    state = mgcycle._CycleState(h)
    for _ in range(args.cycles):
        mgcycle.v_cycle(h, cfg, u, f, _state=state)
    d = np.abs(stencil.defect(h.finest.stencil, u, f))
    rows = [",".join(_fmt(d[i, j]) for i in range(args.nx + 1))
            for j in range(args.ny + 1)]
    _write(args.out, "\n".join(rows) + "\n")
    return 0


def cmd_grid(parser, args) -> int:
    try:
        coords = grid.make_coords(args.stretch, args.n, args.length, args.c)
    except ValueError as exc:
        parser.error(str(exc))
    lines = ["index,coord"]
    lines += [f"{i},{_fmt(v)}" for i, v in enumerate(coords.values)]
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_layout(parser, args) -> int:
    try:
        if args.scheme == "tweed":
            lay = layout.tweed_layout(args.nx, args.ny)
        else:
            lay = layout.wireframe_layout(args.nx, args.ny)
    except ValueError as exc:
        parser.error(str(exc))
    lines = ["i,j,block_id,colour,scheme"]
    for bid, blk in enumerate(lay.blocks):
        for (i, j) in blk.members:
            lines.append(f"{i},{j},{bid},{blk.colour},{lay.scheme}")
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="tweedmg")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run multigrid V-cycles on a random RHS")
    _add_problem_flags(p)
    p.add_argument("--nu1", type=int, default=2)
    p.add_argument("--nu2", type=int, default=2)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-cycles", type=int, default=50)
    p.add_argument("--trace", default="-", help="trace CSV path ('-' = stdout)")
    p.add_argument("--out", default="-", help="report JSON path")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("spectral", help="two-grid spectral radius")
    _add_problem_flags(p)
    p.add_argument("--nu", type=int, required=True,
                   help="total smoothing units nu1 + nu2")
    p.add_argument("--max-iters", type=int, default=3000)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("defect-field", help="dump |defect| after K cycles")
    _add_problem_flags(p)
    p.add_argument("--nu1", type=int, default=2)
    p.add_argument("--nu2", type=int, default=2)
    p.add_argument("--cycles", type=int, default=3)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_defect_field)

    p = sub.add_parser("grid", help="dump 1D grid coordinates as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=float, default=1.0)
    _add_stretch_flags(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("layout", help="dump block membership as CSV")
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--scheme", choices=("tweed", "wireframe"), required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_layout)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
