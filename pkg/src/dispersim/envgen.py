"""Environment generators: rectangles, seeded random simply connected
regions, and the comb-with-a-loop family G(k) used for deadlock tests."""

from __future__ import annotations

import random

from .errors import BadParameters, DoorOutOfBounds
from .grid import Cell, Region
from .topology import is_simply_connected

# 8-neighborhood in cyclic (clockwise) order.
_RING = ((0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1), (-1, 0), (-1, 1))


def rect(w: int, h: int, door: Cell) -> Region:
    if w < 1 or h < 1:
        raise BadParameters(f"rectangle sides must be >= 1, got {w}x{h}")
    dx, dy = door
    if not (0 <= dx < w and 0 <= dy < h):
        raise DoorOutOfBounds(f"door {door} outside {w}x{h} rectangle")
    cells = frozenset((x, y) for x in range(w) for y in range(h))
    return Region(cells, door)


def _single_arc(cells: set, c: Cell) -> bool:
    """True when the occupied cells in c's 8-ring form one contiguous
    cyclic run containing a 4-neighbor. Attaching such a cell can
    neither disconnect the complement nor enclose part of it."""
    x, y = c
    occ = [(x + ox, y + oy) in cells for ox, oy in _RING]
    if not any(occ):
        return False
    runs = sum(1 for i in range(8) if occ[i] and not occ[i - 1])
    # even ring indices are the 4-neighbors
    return runs == 1 and any(occ[i] for i in (0, 2, 4, 6))


def random_simply_connected(V: int, seed: int) -> Region:
    """Grow a region cell by cell from the origin, attaching a uniformly
    chosen boundary cell each round and rejecting attachments that would
    pinch off or enclose part of the complement. Door is the first cell."""
    if V < 1:
        raise BadParameters(f"V must be >= 1, got {V}")
    rng = random.Random(seed)
    door = (0, 0)
    cells = {door}
    boundary = {(0, 1), (1, 0), (0, -1), (-1, 0)}
    while len(cells) < V:
        cand = rng.choice(sorted(boundary))
        ok = _single_arc(cells, cand)
        if not ok:
            # Ambiguous ring pattern: decide by the full flood-fill check.
            trial = frozenset(cells | {cand})
            ok = is_simply_connected(Region(trial, door))
        if not ok:
            boundary.discard(cand)
            continue
        cells.add(cand)
        cx, cy = cand
        boundary.discard(cand)
        for nb in ((cx, cy + 1), (cx + 1, cy), (cx, cy - 1), (cx - 1, cy)):
            if nb not in cells:
                boundary.add(nb)
        # Rejected candidates may become attachable again as the region
        # grows around them; re-admit the rejected ring neighbors.
        for ox, oy in _RING:
            nb = (cx + ox, cy + oy)
            if nb not in cells and any(
                (nb[0] + vx, nb[1] + vy) in cells for vx, vy in ((0, 1), (1, 0), (0, -1), (-1, 0))
            ):
                boundary.add(nb)
    return Region(frozenset(cells), door)


def g_k(r: int, k: int) -> Region:
    """Comb of 10r unit-width columns on a bottom row, all of height
    30r^2 except columns 1 and k, which rise one cell higher and are
    joined by a top row, closing a loop. Columns sit at x = j*(2r+1)
    (a 2r-cell gap between columns); door at the bottom-left corner."""
    if r < 1:
        raise BadParameters(f"r must be >= 1, got {r}")
    ncols = 10 * r
    if not (2 <= k <= ncols):
        raise BadParameters(f"k must be in [2, {ncols}], got {k}")
    pitch = 2 * r + 1
    height = 30 * r * r
    cells = set()
    last_x = (ncols - 1) * pitch
    for x in range(last_x + 1):
        cells.add((x, 0))
    for j in range(ncols):
        x = j * pitch
        top = height + 1 if j in (0, k - 1) else height
        for y in range(1, top + 1):
            cells.add((x, y))
    # The joining row sits one cell above the raised columns so the
    # plain columns it passes over stay dead ends.
    for x in range((k - 1) * pitch + 1):
        cells.add((x, height + 2))
    return Region(frozenset(cells), (0, 0))
