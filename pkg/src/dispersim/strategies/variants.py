"""Empirically optimal FCDFS variants.

``rand-corner`` drops the fixed Up-first orientation: a run-level seeded
draw rotates the compass, and every robot scans for its initial primary
clockwise from that random direction instead of from Up. All robots in
a run share the rotation, which keeps the single-file chain out of the
door intact (per-robot random draws let chains diverge and collide; see
the notes in the repository history).

``left-hand`` keeps a heading and scales the boundary clockwise with an
obstacle on its left: it turns left only when a wall on its left just
ended, otherwise goes straight, then right; it settles on the same
corner test as FCDFS.
"""

from __future__ import annotations

import random

from ..grid import DIR_VECTORS, opposite, rotate_ccw, rotate_cw
from .base import A_SETTLE, Strategy
from .fcdfs import Fcdfs, FcdfsMemory, diag_offset


def _corner_pair_settle(view, m) -> bool:
    """True if some blocked L-pair marks the current cell as a corner:
    the pair's diagonal is unoccupied, or the robot stood on it two
    steps ago (fake hall)."""
    for d in range(4):
        if view.occupied_dir(d) and view.occupied_dir(rotate_cw(d)):
            diag = diag_offset(d)
            if m.prev2 == diag or not view.occupied_offset(*diag):
                return True
    return False


def _dead_end(view, m, free) -> bool:
    return len(free) == 1 and DIR_VECTORS[free[0]] == m.prev


class RandomCorner(Fcdfs):
    name = "rand-corner"

    def __init__(self, region=None, seed: int = 0):
        super().__init__(region, seed)
        # Randomness is consumed once, at run initialization.
        self.rotation = random.Random(seed).randrange(4)

    def initial_primary(self, free: list[int]) -> int:
        order = [(d + self.rotation) % 4 for d in range(4)]
        return next(d for d in order if d in free)

    def state_key(self):
        return self.rotation


class LeftHandMemory(FcdfsMemory):
    """Same offsets bookkeeping; 'primary' is read as the heading."""

    __slots__ = ()

    @property
    def heading(self):
        return self.primary


class LeftHand(Strategy):
    name = "left-hand"

    def fresh_memory(self) -> LeftHandMemory:
        return LeftHandMemory()

    def decide(self, view, m: LeftHandMemory):
        free = view.free_dirs()
        if not free:
            return A_SETTLE, m
        if not m.has_moved:
            m.primary = free[0]  # clockwise scan from Up
            m.record_move(m.primary)
            return m.primary, m
        if _dead_end(view, m, free) or _corner_pair_settle(view, m):
            return A_SETTLE, m
        h = m.primary
        left = rotate_ccw(h)
        back = opposite(h)
        if not view.occupied_dir(left):
            # Turn left only when a wall on the left just ended: the cell
            # diagonally behind-left is still an obstacle.
            bx, by = DIR_VECTORS[back]
            lx, ly = DIR_VECTORS[left]
            if view.occupied_offset(bx + lx, by + ly):
                m.primary = left
                m.record_move(left)
                return left, m
        for d in (h, rotate_cw(h), left, back):
            if not view.occupied_dir(d):
                m.primary = d
                m.record_move(d)
                return d, m
        raise AssertionError("unreachable: free was nonempty")
