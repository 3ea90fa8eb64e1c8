"""Topology oracles: corner/hall classification, simple connectivity,
the hall tree decomposition, BFS distances, articulation points and
optimal door placement.

Everything here is deliberately brute force (flood fills, remove-and-test
loops): these functions are the independent oracles the simulation is
checked against, so simplicity wins over asymptotics.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CellNotInRegion, NotSimplyConnected
from .grid import Cell, Region, flood_fill

CORNER = "corner"
HALL = "hall"
INTERIOR = "interior"


@dataclass(frozen=True)
class VertexClass:
    kind: str
    diagonal: Cell | None = None


@dataclass(frozen=True)
class HallTree:
    """Hall-separated components of a simply connected region.

    Each component cell-set includes its adjacent halls; components
    sharing a hall are joined by an edge; the root is the component
    containing the door.
    """

    components: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...]
    root: int


def classify_cells(cells: frozenset | set, v: Cell) -> VertexClass:
    """Classify ``v`` against an explicit cell set (used both for full
    regions and for residual regions during runtime checks)."""
    if v not in cells:
        raise CellNotInRegion(f"{v} is not in the cell set")
    x, y = v
    nbrs = [
        nb
        for nb in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y))
        if nb in cells
    ]
    if len(nbrs) <= 1:
        return VertexClass(CORNER, None)
    if len(nbrs) >= 3:
        return VertexClass(INTERIOR, None)
    u, u2 = nbrs
    if u[0] + u2[0] == 2 * x and u[1] + u2[1] == 2 * y:
        return VertexClass(INTERIOR, None)  # straight corridor
    # L-configuration: the unique common neighbor of u, u2 other than v.
    w = (u[0] + u2[0] - x, u[1] + u2[1] - y)
    if w in cells:
        return VertexClass(CORNER, w)
    return VertexClass(HALL, w)


def classify(r: Region, v: Cell) -> VertexClass:
    return classify_cells(r.cells, v)


def corners(r: Region) -> list[Cell]:
    return [v for v in sorted(r.cells) if classify(r, v).kind == CORNER]


def halls(r: Region) -> list[Cell]:
    return [v for v in sorted(r.cells) if classify(r, v).kind == HALL]


def is_simply_connected(r: Region) -> bool:
    """True iff no closed path in the region surrounds a wall.

    Implemented by padding the bounding box with one ring of walls and
    flood-filling the complement under 8-connectivity from that ring:
    the region is simply connected iff every wall inside the box is
    reached (4-connected foreground pairs with 8-connected background).
    """
    return not _enclosed_walls(r.cells, r.min_x, r.max_x, r.min_y, r.max_y)


def _enclosed_walls(cells, min_x, max_x, min_y, max_y) -> bool:
    x0, x1 = min_x - 1, max_x + 1
    y0, y1 = min_y - 1, max_y + 1
    start = (x0, y0)
    seen = {start}
    todo = deque([start])
    while todo:
        x, y = todo.popleft()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                nb = (x + dx, y + dy)
                if (
                    x0 <= nb[0] <= x1
                    and y0 <= nb[1] <= y1
                    and nb not in cells
                    and nb not in seen
                ):
                    seen.add(nb)
                    todo.append(nb)
    for x in range(min_x, max_x + 1):
        for y in range(min_y, max_y + 1):
            if (x, y) not in cells and (x, y) not in seen:
                return True
    return False


def hall_tree(r: Region) -> HallTree:
    """Decompose a simply connected region into its hall tree."""
    if not is_simply_connected(r):
        raise NotSimplyConnected(
            "hall tree is only defined for simply connected regions"
        )
    hall_set = set(halls(r))
    rest = set(r.cells) - hall_set
    comps: list[set] = []
    unassigned = set(rest)
    while unassigned:
        seed = min(unassigned)
        comp = flood_fill(unassigned, seed)
        unassigned -= comp
        comps.append(comp)
    if not comps:
        # Degenerate: every cell is a hall (e.g. a single bend of 3 cells
        # cannot occur, but a lone hall cell can when V is tiny).
        comps = [set()]
    # Re-attach each hall to every component it is adjacent to.
    hall_members: dict[Cell, list[int]] = {}
    for h in sorted(hall_set):
        touching = []
        hx, hy = h
        for i, comp in enumerate(comps):
            for nb in ((hx, hy + 1), (hx + 1, hy), (hx, hy - 1), (hx - 1, hy)):
                if nb in comp:
                    touching.append(i)
                    break
        for i in touching:
            comps[i].add(h)
        hall_members[h] = touching
    edges = set()
    for h, touching in hall_members.items():
        for i in touching:
            for j in touching:
                if i < j:
                    edges.add((i, j))
    root = next(i for i, comp in enumerate(comps) if r.door in comp)
    return HallTree(
        components=tuple(frozenset(c) for c in comps),
        edges=tuple(sorted(edges)),
        root=root,
    )


def articulation_points(r: Region) -> set[Cell]:
    """Cells whose removal disconnects the region (brute force)."""
    out = set()
    if len(r.cells) <= 1:
        return out
    for v in r.cells:
        rest = set(r.cells)
        rest.remove(v)
        if not rest:
            continue
        seed = next(iter(rest))
        if len(flood_fill(rest, seed)) != len(rest):
            out.add(v)
    return out


def bfs_distances(r: Region, src: Cell) -> dict[Cell, int]:
    """Exact 4-neighbor shortest-path distances within the region."""
    if src not in r.cells:
        raise CellNotInRegion(f"{src} is not a cell of the region")
    return bfs_distances_cells(r.cells, src)


def bfs_distances_cells(cells, src: Cell) -> dict[Cell, int]:
    dist = {src: 0}
    todo = deque([src])
    while todo:
        v = todo.popleft()
        d = dist[v] + 1
        x, y = v
        for nb in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if nb in cells and nb not in dist:
                dist[nb] = d
                todo.append(nb)
    return dist


def sum_distances(r: Region, src: Cell) -> int:
    """Sum of shortest-path distances from src to every cell; the lower
    bound on total travel for any dispersal strategy."""
    return sum(bfs_distances(r, src).values())


def geometric_median(r: Region) -> set[Cell]:
    """All cells minimizing the sum of distances to the rest of the
    region (there may be several)."""
    best: set[Cell] = set()
    best_sum = None
    for v in sorted(r.cells):
        s = sum(bfs_distances_cells(r.cells, v).values())
        if best_sum is None or s < best_sum:
            best_sum = s
            best = {v}
        elif s == best_sum:
            best.add(v)
    return best


class DistanceCache:
    """Memoized per-source BFS distance maps for one region."""

    def __init__(self, region: Region):
        self.region = region
        self._maps: dict[Cell, dict[Cell, int]] = {}

    def distances_from(self, src: Cell) -> dict[Cell, int]:
        m = self._maps.get(src)
        if m is None:
            m = bfs_distances(self.region, src)
            self._maps[src] = m
        return m

    def distance(self, a: Cell, b: Cell) -> int:
        return self.distances_from(a)[b]
