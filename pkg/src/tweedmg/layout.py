"""Colour-partitioned block decompositions for tweed and wireframe relaxation.

Interior points are indexed (i, j) with 1 <= i <= nx-1, 1 <= j <= ny-1; both
interior side lengths are odd.  Tweed covers the interior with branched lines
perpendicular to the nearest boundary (point blocks at the four interior
corners, L-shaped two-legged blocks growing inwards from each corner, and a
central cross, T-pair, or line strip depending on the aspect ratio).
Wireframe covers it with concentric rectangular rings, outermost first, plus
a terminal centre point or centre line.

Conventions fixed for determinism: corner blocks and the outermost wireframe
ring are red; leg point lists run tip -> branch; ring traversal starts at the
ring's lower-left point and proceeds with x increasing first.
"""

from dataclasses import dataclass, field

RED = "red"
BLACK = "black"


def _parity_colour(k: int) -> str:
    return RED if k % 2 else BLACK


@dataclass(frozen=True)
class Block:
    """One relaxation block.

    kind: 'point' | 'line' | 'legged' | 'ring'.  members lists all points
    (for legged blocks: legs concatenated tip->branch, branch last; for rings:
    the cyclic order).  legs/branch are populated for legged blocks only.
    """

    kind: str
    colour: str
    members: tuple
    legs: tuple = field(default=())
    branch: tuple | None = None


@dataclass(frozen=True)
class BlockLayout:
    scheme: str
    nx: int
    ny: int
    blocks: tuple


def _check_dims(nx: int, ny: int):
    if nx < 4 or ny < 4 or nx % 2 or ny % 2:
        raise ValueError(f"block layouts need even nx, ny >= 4, got ({nx}, {ny})")


def _make_legged(colour: str, legs: list, branch: tuple) -> Block:
    members = tuple(p for leg in legs for p in leg) + (branch,)
    return Block("legged", colour, members,
                 legs=tuple(tuple(leg) for leg in legs), branch=branch)


def tweed_layout(nx: int, ny: int) -> BlockLayout:
    """Branched-line decomposition with legs perpendicular to the nearest
    boundary; blocks alternate colour outwards-in starting red at the corners."""
    _check_dims(nx, ny)
    mx, my = nx - 1, ny - 1
    s = min(mx, my)
    c = (s + 1) // 2
    blocks = []

    # interior corner point blocks, lower-left, lower-right, upper-left, upper-right
    corners = [(1, 1, 1, 1), (mx, 1, -1, 1), (1, my, 1, -1), (mx, my, -1, -1)]
    for x0, y0, sx, sy in corners:
        blocks.append(Block("point", RED, ((x0, y0),)))

    # L-shaped two-legged blocks at diagonal distance k from each corner
    for k in range(2, c):
        colour = _parity_colour(k)
        for x0, y0, sx, sy in corners:
            bi = x0 + sx * (k - 1)
            bj = y0 + sy * (k - 1)
            leg_x = [(x0 + sx * t, bj) for t in range(k - 1)]      # tip -> branch
            leg_y = [(bi, y0 + sy * t) for t in range(k - 1)]
            blocks.append(_make_legged(colour, [leg_x, leg_y], (bi, bj)))

    colour_c = _parity_colour(c)
    if mx == my:
        # central four-legged cross
        legs = [
            [(t, c) for t in range(1, c)],                  # west, tip -> branch
            [(t, c) for t in range(mx, c, -1)],             # east
            [(c, t) for t in range(1, c)],                  # south
            [(c, t) for t in range(my, c, -1)],             # north
        ]
        blocks.append(_make_legged(colour_c, legs, (c, c)))
    elif mx > my:
        # two three-legged T-blocks facing the short (vertical) boundaries
        legs_l = [
            [(t, c) for t in range(1, c)],                  # towards x = 0
            [(c, t) for t in range(1, c)],                  # towards y = 0
            [(c, t) for t in range(my, c, -1)],             # towards y = Ly
        ]
        blocks.append(_make_legged(colour_c, legs_l, (c, c)))
        br = mx + 1 - c
        legs_r = [
            [(t, c) for t in range(mx, br, -1)],
            [(br, t) for t in range(1, c)],
            [(br, t) for t in range(my, c, -1)],
        ]
        blocks.append(_make_legged(colour_c, legs_r, (br, c)))
        # full-height vertical lines across the central strip
        for i in range(c + 1, mx - c + 1):
            members = tuple((i, j) for j in range(1, my + 1))
            blocks.append(Block("line", _parity_colour(i), members))
    else:
        # mirror construction: T-blocks face the short (horizontal) boundaries
        legs_b = [
            [(c, t) for t in range(1, c)],
            [(t, c) for t in range(1, c)],
            [(t, c) for t in range(mx, c, -1)],
        ]
        blocks.append(_make_legged(colour_c, legs_b, (c, c)))
        br = my + 1 - c
        legs_t = [
            [(c, t) for t in range(my, br, -1)],
            [(t, br) for t in range(1, c)],
            [(t, br) for t in range(mx, c, -1)],
        ]
        blocks.append(_make_legged(colour_c, legs_t, (c, br)))
        for j in range(c + 1, my - c + 1):
            members = tuple((i, j) for i in range(1, mx + 1))
            blocks.append(Block("line", _parity_colour(j), members))

    return BlockLayout("tweed", nx, ny, tuple(blocks))


def _ring_members(lo_i, hi_i, lo_j, hi_j):
    """Boundary of the rectangle [lo_i..hi_i] x [lo_j..hi_j], counter-clockwise
    from the lower-left point, x increasing first."""
    pts = [(i, lo_j) for i in range(lo_i, hi_i + 1)]
    pts += [(hi_i, j) for j in range(lo_j + 1, hi_j + 1)]
    pts += [(i, hi_j) for i in range(hi_i - 1, lo_i - 1, -1)]
    pts += [(lo_i, j) for j in range(hi_j - 1, lo_j, -1)]
    return tuple(pts)


def wireframe_layout(nx: int, ny: int) -> BlockLayout:
    """Concentric-ring decomposition, outermost ring first and red."""
    _check_dims(nx, ny)
    mx, my = nx - 1, ny - 1
    s = min(mx, my)
    q = (s - 1) // 2
    blocks = []
    for r in range(1, q + 1):
        blocks.append(Block("ring", _parity_colour(r),
                            _ring_members(r, mx + 1 - r, r, my + 1 - r)))
    term_colour = _parity_colour(q + 1)
    if mx == my:
        cp = q + 1
        blocks.append(Block("point", term_colour, ((cp, cp),)))
    elif mx > my:
        j0 = q + 1
        members = tuple((i, j0) for i in range(q + 1, mx - q + 1))
        blocks.append(Block("line", term_colour, members))
    else:
        i0 = q + 1
        members = tuple((i0, j) for j in range(q + 1, my - q + 1))
        blocks.append(Block("line", term_colour, members))
    return BlockLayout("wireframe", nx, ny, tuple(blocks))


def block_edges(block: Block) -> set:
    """Interior grid edges used by one block's intra-block couplings."""
    edges = set()

    def add(p, q):
        edges.add((p, q) if p <= q else (q, p))

    if block.kind == "point":
        return edges
    if block.kind == "legged":
        for leg in block.legs:
            for a, b in zip(leg[:-1], leg[1:]):
                add(a, b)
            if leg:
                add(leg[-1], block.branch)
        return edges
    # line or ring
    mem = block.members
    for a, b in zip(mem[:-1], mem[1:]):
        add(a, b)
    if block.kind == "ring":
        add(mem[-1], mem[0])
    return edges


def layout_edges(layout: BlockLayout) -> set:
    edges = set()
    for blk in layout.blocks:
        edges |= block_edges(blk)
    return edges


def all_interior_edges(nx: int, ny: int) -> set:
    mx, my = nx - 1, ny - 1
    edges = set()
    for i in range(1, mx + 1):
        for j in range(1, my + 1):
            if i < mx:
                edges.add(((i, j), (i + 1, j)))
            if j < my:
                edges.add(((i, j), (i, j + 1)))
    return edges


@dataclass(frozen=True)
class EdgeCoverReport:
    tweed_edges: int
    wireframe_edges: int
    disjoint: bool
    covers_all: bool


def edge_cover_check(tweed: BlockLayout, wire: BlockLayout) -> EdgeCoverReport:
    """Check that the two motifs use disjoint interior edges and that their
    union is every interior-interior edge of the grid."""
    if (tweed.nx, tweed.ny) != (wire.nx, wire.ny):
        raise ValueError("layouts must share grid dimensions")
    te = layout_edges(tweed)
    we = layout_edges(wire)
    return EdgeCoverReport(
        tweed_edges=len(te),
        wireframe_edges=len(we),
        disjoint=not (te & we),
        covers_all=(te | we) == all_interior_edges(tweed.nx, tweed.ny),
    )
