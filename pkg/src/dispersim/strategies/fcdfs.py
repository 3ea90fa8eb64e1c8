"""Find-Corner Depth-First Search, full-memory form.

A robot keeps a primary direction (secondary is always its 90-degree
clockwise rotation) and its two previous positions as relative offsets.
It walks primary/secondary only; when both are blocked it is at a corner
or a hall of the residual region. The diagonal cell sits at 135 degrees
counter-clockwise from the primary direction; if it is unoccupied, or if
the robot itself stood there two steps ago (a trailing robot is on it
now: a fake hall), the position is a corner and the robot settles.
Otherwise it is a hall and the robot redirects its primary to the
neighbor it has not come from.
"""

from __future__ import annotations

from ..errors import NoLegalAction
from ..grid import DIR_VECTORS, rotate_cw
from .base import A_SETTLE, Strategy


def diag_offset(primary: int) -> tuple[int, int]:
    """Offset of diag(v) when primary and secondary are blocked: the
    common neighbor of the two remaining directions, at 135 degrees
    counter-clockwise from primary."""
    px, py = DIR_VECTORS[primary]
    sx, sy = DIR_VECTORS[rotate_cw(primary)]
    return (-px - sx, -py - sy)


class FcdfsMemory:
    __slots__ = ("primary", "prev", "prev2", "has_moved")

    def __init__(self):
        self.primary: int | None = None
        self.prev: tuple[int, int] | None = None  # offset of pos one step ago
        self.prev2: tuple[int, int] | None = None  # offset two steps ago
        self.has_moved = False

    def record_move(self, d: int) -> None:
        dx, dy = DIR_VECTORS[d]
        self.prev2 = (
            (self.prev[0] - dx, self.prev[1] - dy) if self.prev is not None else None
        )
        self.prev = (-dx, -dy)
        self.has_moved = True

    def key(self):
        return (self.primary, self.prev, self.prev2, self.has_moved)


class Fcdfs(Strategy):
    name = "fcdfs"

    def fresh_memory(self) -> FcdfsMemory:
        return FcdfsMemory()

    def initial_primary(self, free: list[int]) -> int:
        """Clockwise scan from Up for the first unoccupied neighbor."""
        return free[0]

    def decide(self, view, m: FcdfsMemory):
        free = view.free_dirs()
        if not free:
            return A_SETTLE, m
        if not m.has_moved:
            m.primary = self.initial_primary(free)
        p = m.primary
        s = rotate_cw(p)
        for d in (p, s):
            if not view.occupied_dir(d):
                m.record_move(d)
                return d, m
        # Primary and secondary blocked: corner or hall.
        if len(free) == 1 and DIR_VECTORS[free[0]] == m.prev:
            return A_SETTLE, m  # dead end
        diag = diag_offset(p)
        if m.prev2 == diag or not view.occupied_offset(*diag):
            return A_SETTLE, m
        # Hall: point primary at the neighbor we did not come from.
        cands = [d for d in free if DIR_VECTORS[d] != m.prev]
        if len(cands) != 1:
            raise NoLegalAction(
                f"hall redirect found {len(cands)} candidates (free={free})"
            )
        m.primary = cands[0]
        m.record_move(cands[0])
        return cands[0], m
