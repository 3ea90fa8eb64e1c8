"""Adapted leader-follower baselines (privileged).

These model the classic dispersal algorithms whose original setting
grants robots communication. They are implemented as run-level
controllers with access to the engine state, flagged ``privileged`` in
the registry; the comparison with FCDFS targets metrics, not model
parity.

DFLF: a depth-first walk of the region is fixed up front (seeded-random
tie-breaks). Robots follow it downward only: a cell's non-final walk
occurrences are each followed by a child cell, so a robot either steps
into the next child, skips a finished subtree by jumping its walk index
forward to the cell's next occurrence, or settles when it stands at the
final occurrence of its cell. Deepest cells settle first.

BFLF: each spawned robot is assigned the nearest unclaimed cell whose
claim keeps the unclaimed remainder connected to the door, and walks a
shortest path through the unsettled cells toward it, pausing (Stay)
whenever blocked by an active robot. Pauses count as travel but not as
moves.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from collections import deque

from ..grid import Cell, Region
from ..topology import bfs_distances_cells
from .base import A_SETTLE, A_STAY, Strategy

_DIR_OF = {(0, 1): 0, (1, 0): 1, (0, -1): 2, (-1, 0): 3}


def _move_action(src: Cell, dst: Cell) -> int:
    return _DIR_OF[(dst[0] - src[0], dst[1] - src[1])]


def _nbrs(cell: Cell):
    x, y = cell
    return ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y))


class Dflf(Strategy):
    name = "dflf"
    privileged = True

    def __init__(self, region: Region, seed: int = 0):
        super().__init__(region, seed)
        self.region = region
        self.rng = random.Random(seed)
        self.walk = self._build_walk()
        self.occ: dict[Cell, list[int]] = {}
        for i, cell in enumerate(self.walk):
            self.occ.setdefault(cell, []).append(i)
        self.index: dict[int, int] = {}  # robot id -> position on the walk

    def _build_walk(self) -> list[Cell]:
        """Full DFS traversal from the door, recording every visit
        including backtrack passes. It ends back at the door, so every
        cell's last occurrence marks the completion of its subtree."""
        door = self.region.door
        cells = self.region.cells
        walk = [door]
        visited = {door}
        trail = [door]
        while trail:
            head = trail[-1]
            fresh = [nb for nb in _nbrs(head) if nb in cells and nb not in visited]
            if fresh:
                nxt = self.rng.choice(fresh)
                visited.add(nxt)
                trail.append(nxt)
                walk.append(nxt)
            else:
                trail.pop()
                if trail:
                    walk.append(trail[-1])
        return walk

    def on_spawn(self, sim, robot) -> None:
        self.index[robot.id] = 0

    def decide_all(self, sim) -> dict[int, int]:
        actions: dict[int, int] = {}
        claimed: set[Cell] = set()
        for robot in sim.robots:
            if not robot.active:
                continue
            i = self.index[robot.id]
            settle = False
            target = None
            while True:
                occ = self.occ[robot.pos]
                if i == occ[-1]:
                    settle = True  # final visit: the subtree below is done
                    break
                target = self.walk[i + 1]
                holder = sim.occupied.get(target)
                if holder is not None and not holder.active:
                    # Finished branch: skip to this cell's next occurrence.
                    i = occ[bisect_right(occ, i)]
                    continue
                break
            self.index[robot.id] = i
            if settle:
                actions[robot.id] = A_SETTLE
            elif target in sim.occupied or target in claimed:
                actions[robot.id] = A_STAY
            else:
                claimed.add(target)
                self.index[robot.id] = i + 1
                actions[robot.id] = _move_action(robot.pos, target)
        return actions

    def state_key(self):
        return tuple(sorted(self.index.items()))


class Bflf(Strategy):
    name = "bflf"
    privileged = True

    def __init__(self, region: Region, seed: int = 0):
        super().__init__(region, seed)
        self.region = region
        self.rng = random.Random(seed)
        self.claimed: set[Cell] = set()
        self.targets: dict[int, Cell] = {}
        self.paths: dict[int, list[Cell]] = {}  # remaining cells to target

    # -- target assignment -------------------------------------------------

    def _safe_claim(self, cell: Cell) -> bool:
        """A claim is safe when the unclaimed remainder stays connected
        to the door."""
        unclaimed = set(self.region.cells) - self.claimed
        unclaimed.discard(cell)
        if not unclaimed:
            return True
        door = self.region.door
        if door not in unclaimed:
            return False
        reached = {door}
        todo = deque([door])
        while todo:
            v = todo.popleft()
            for nb in _nbrs(v):
                if nb in unclaimed and nb not in reached:
                    reached.add(nb)
                    todo.append(nb)
        return len(reached) == len(unclaimed)

    def _assign_target(self, sim, robot) -> None:
        unclaimed = set(self.region.cells) - self.claimed
        settled = {r.pos for r in sim.robots if not r.active}
        dist = bfs_distances_cells(self.region.cells - settled, self.region.door)
        door = self.region.door
        order = sorted(
            (c for c in unclaimed if c in dist and (c != door or len(unclaimed) == 1)),
            key=lambda c: (dist[c], c),
        )
        pool: list[Cell] = []
        for cand in order:
            if pool and dist[cand] > dist[pool[0]]:
                break
            if self._safe_claim(cand):
                pool.append(cand)
        if not pool:
            # No nearest tie is safe; fall back to the first safe cell.
            for cand in order:
                if self._safe_claim(cand):
                    pool = [cand]
                    break
        target = self.rng.choice(pool)
        self.targets[robot.id] = target
        self.claimed.add(target)
        self.paths[robot.id] = self._route(sim, robot.pos, target)

    # -- routing -----------------------------------------------------------

    def _route(self, sim, src: Cell, dst: Cell, avoid_active: bool = False) -> list[Cell]:
        """Shortest path src -> dst through unsettled cells (excluding
        src); empty when none exists."""
        blocked = {r.pos for r in sim.robots if not r.active}
        if avoid_active:
            blocked |= {r.pos for r in sim.robots if r.active and r.pos != src}
        cells = self.region.cells
        prev: dict[Cell, Cell] = {src: src}
        todo = deque([src])
        while todo:
            v = todo.popleft()
            if v == dst:
                path = [v]
                while prev[v] != v:
                    v = prev[v]
                    path.append(v)
                path.reverse()
                return path[1:]
            for nb in _nbrs(v):
                if nb in cells and nb not in blocked and nb not in prev:
                    prev[nb] = v
                    todo.append(nb)
        return []

    def on_spawn(self, sim, robot) -> None:
        self._assign_target(sim, robot)

    def decide_all(self, sim) -> dict[int, int]:
        actions: dict[int, int] = {}
        claimed_now: set[Cell] = set()
        spawn_pending = self.region.door not in sim.occupied
        for robot in sim.robots:
            if not robot.active:
                continue
            target = self.targets[robot.id]
            if robot.pos == target:
                actions[robot.id] = A_SETTLE
                continue
            path = self.paths.get(robot.id) or []
            if not path or any(
                c in sim.occupied and not sim.occupied[c].active for c in path
            ):
                path = self._route(sim, robot.pos, target)
                self.paths[robot.id] = path
            if not path:
                actions[robot.id] = A_STAY
                continue
            nxt = path[0]
            blocked = (
                nxt in sim.occupied
                or nxt in claimed_now
                or (spawn_pending and nxt == self.region.door)
            )
            if blocked:
                # Try flowing around the robot in the way.
                detour = self._route(sim, robot.pos, target, avoid_active=True)
                if (
                    detour
                    and detour[0] not in claimed_now
                    and detour[0] not in sim.occupied
                    and not (spawn_pending and detour[0] == self.region.door)
                ):
                    path = detour
                    self.paths[robot.id] = detour
                    nxt = detour[0]
                else:
                    actions[robot.id] = A_STAY
                    continue
            claimed_now.add(nxt)
            self.paths[robot.id] = path[1:]
            actions[robot.id] = _move_action(robot.pos, nxt)
        return actions

    def state_key(self):
        return (len(self.claimed), tuple(sorted(self.targets.items())))
