"""Grid environments: cells, directions, regions and the ASCII map format.

Coordinate frame: x grows to the right, y grows upward. Row 0 of an ASCII
map is the topmost line, so it holds the cells with the highest y.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator

from .errors import (
    CellNotInRegion,
    DisconnectedRegion,
    MalformedMap,
    MultipleDoors,
    NoDoor,
)

Cell = tuple[int, int]

# Direction codes in clockwise scan order starting from "up".
UP, RIGHT, DOWN, LEFT = range(4)
DIRECTIONS = (UP, RIGHT, DOWN, LEFT)
DIR_VECTORS: tuple[Cell, ...] = ((0, 1), (1, 0), (0, -1), (-1, 0))
DIR_NAMES = "URDL"

WALL_CHAR = "#"
FLOOR_CHAR = "."
DOOR_CHAR = "S"


def rotate_cw(d: int, quarters: int = 1) -> int:
    return (d + quarters) % 4


def rotate_ccw(d: int, quarters: int = 1) -> int:
    return (d - quarters) % 4


def opposite(d: int) -> int:
    return (d + 2) % 4


def step_cell(cell: Cell, d: int) -> Cell:
    dx, dy = DIR_VECTORS[d]
    return (cell[0] + dx, cell[1] + dy)


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


class Region:
    """A finite 4-connected set of lattice cells with a designated door.

    Immutable after construction; safe to share between threads.
    """

    __slots__ = ("cells", "door", "min_x", "max_x", "min_y", "max_y")

    def __init__(self, cells, door: Cell):
        cells = frozenset(tuple(c) for c in cells)
        if not cells:
            raise DisconnectedRegion("region has no cells")
        door = tuple(door)
        if door not in cells:
            raise NoDoor(f"door {door} is not a cell of the region")
        self.cells = cells
        self.door = door
        xs = [c[0] for c in cells]
        ys = [c[1] for c in cells]
        self.min_x, self.max_x = min(xs), max(xs)
        self.min_y, self.max_y = min(ys), max(ys)
        reached = flood_fill(cells, door)
        if len(reached) != len(cells):
            raise DisconnectedRegion(
                f"{len(cells) - len(reached)} cells unreachable from the door"
            )

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Region)
            and self.cells == other.cells
            and self.door == other.door
        )

    def __hash__(self) -> int:
        return hash((self.cells, self.door))

    def __repr__(self) -> str:
        return f"Region({len(self.cells)} cells, door={self.door})"

    def neighbors(self, v: Cell) -> list[Cell]:
        """Region cells at Manhattan distance 1 of v, in U, R, D, L order.

        The order is part of the contract: strategy determinism depends
        on it.
        """
        if v not in self.cells:
            raise CellNotInRegion(f"{v} is not a cell of the region")
        x, y = v
        out = []
        for nb in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if nb in self.cells:
                out.append(nb)
        return out

    def is_wall(self, v: Cell) -> bool:
        """True iff v is not a cell of the region (the complement is
        conceptually infinite; cells outside the bounds are walls)."""
        return v not in self.cells

    def to_ascii(self) -> str:
        """Render the bounding box as an ASCII map, padding with '#'.

        Inverse of :func:`from_ascii` for regions whose bounding box has
        its minimum corner at the origin.
        """
        rows = []
        for y in range(self.max_y, self.min_y - 1, -1):
            row = []
            for x in range(self.min_x, self.max_x + 1):
                if (x, y) == self.door:
                    row.append(DOOR_CHAR)
                elif (x, y) in self.cells:
                    row.append(FLOOR_CHAR)
                else:
                    row.append(WALL_CHAR)
            rows.append("".join(row))
        return "\n".join(rows)


def flood_fill(cells: frozenset | set, start: Cell) -> set[Cell]:
    """4-connected flood fill inside ``cells`` starting at ``start``."""
    seen = {start}
    todo = deque([start])
    while todo:
        x, y = todo.popleft()
        for nb in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen


def from_ascii(text: str) -> Region:
    """Parse an ASCII map into a Region.

    The map must be a rectangular block of '#', '.' and 'S' characters
    with exactly one 'S'; row 0 is the top. A trailing newline is
    allowed.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    if not lines:
        raise MalformedMap("empty map")
    width = len(lines[0])
    if width == 0:
        raise MalformedMap("empty first line")
    cells = set()
    door = None
    height = len(lines)
    for row, line in enumerate(lines):
        if len(line) != width:
            raise MalformedMap(f"line {row} has length {len(line)}, expected {width}")
        y = height - 1 - row
        for x, ch in enumerate(line):
            if ch == WALL_CHAR:
                continue
            if ch == DOOR_CHAR:
                if door is not None:
                    raise MultipleDoors(f"second door at {(x, y)}")
                door = (x, y)
                cells.add((x, y))
            elif ch == FLOOR_CHAR:
                cells.add((x, y))
            else:
                raise MalformedMap(f"bad character {ch!r} at row {row}, col {x}")
    if door is None:
        raise NoDoor("map has no 'S' cell")
    return Region(cells, door)
