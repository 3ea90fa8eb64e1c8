"""Synchronous Look-Compute-Move scheduler.

Each step: take an occupancy snapshot, let every active robot compute an
action from its radius-2 sensor view and private memory, apply all moves
simultaneously (targets must have been unoccupied in the snapshot), then
settle robots and spawn a new one at the door if the door was free in the
snapshot. Runs end on full coverage, an exact configuration repeat
(deadlock) or a step limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CollisionError, InvariantViolation
from .grid import (
    DIR_NAMES,
    DIR_VECTORS,
    Cell,
    Region,
    manhattan,
)
from . import topology
from .metrics import RunMetrics

# Action codes: 0..3 move in that direction, then stay, then settle.
A_STAY = 4
A_SETTLE = 5
ACTION_CHARS = "URDL.X"

# Relative offsets visible to a robot: Manhattan distance 1 and 2.
VIEW_OFFSETS = tuple(
    (dx, dy)
    for dx in range(-2, 3)
    for dy in range(-2, 3)
    if 0 < abs(dx) + abs(dy) <= 2
)
assert len(VIEW_OFFSETS) == 12


class SensorView:
    """Occupancy of the 12 cells within Manhattan distance 2 of a robot.

    Occupied means wall or any robot; the view never distinguishes the
    two, nor active from settled robots. Strategies receive nothing else.
    """

    __slots__ = ("_pos", "_occupied", "_cells")

    def __init__(self, pos: Cell, occupied, cells):
        self._pos = pos
        self._occupied = occupied
        self._cells = cells

    def occupied_offset(self, dx: int, dy: int) -> bool:
        if not 0 < abs(dx) + abs(dy) <= 2:
            raise ValueError(f"offset ({dx},{dy}) is outside the sensing range")
        cell = (self._pos[0] + dx, self._pos[1] + dy)
        return cell not in self._cells or cell in self._occupied

    def occupied_dir(self, d: int) -> bool:
        dx, dy = DIR_VECTORS[d]
        return self.occupied_offset(dx, dy)

    def free_dirs(self) -> list[int]:
        """Unoccupied neighbor directions in clockwise order from Up."""
        return [d for d in range(4) if not self.occupied_dir(d)]

    def snapshot(self) -> tuple[bool, ...]:
        """All 12 offsets as a flat tuple (for view-equality tests)."""
        return tuple(self.occupied_offset(dx, dy) for dx, dy in VIEW_OFFSETS)


class Robot:
    __slots__ = ("id", "pos", "active", "mem", "travel", "moves")

    def __init__(self, rid: int, pos: Cell, mem):
        self.id = rid
        self.pos = pos
        self.active = True
        self.mem = mem
        self.travel = 0
        self.moves = 0


@dataclass(frozen=True)
class Outcome:
    kind: str  # "covered" | "deadlock" | "limit"
    t: int


class SimulationTrace:
    """Per-step record of a run plus spawn/settle events.

    ``steps`` is a list of ``(t, spawn_id, robots)`` tuples where
    ``robots`` holds ``(id, x, y, state_char, act_char)`` for every robot
    that existed at the start of the step, with its end-of-step state.
    None when the run was made without recording.
    """

    def __init__(self, region: Region, strategy_name: str, seed: int):
        self.region = region
        self.strategy = strategy_name
        self.seed = seed
        self.steps: list | None = []
        self.outcome: Outcome | None = None

    def to_json_dict(self) -> dict:
        steps = []
        for t, spawn, robots in self.steps or ():
            steps.append(
                {
                    "t": t,
                    "spawn": spawn,
                    "robots": [
                        {"id": rid, "pos": [x, y], "state": state, "act": act}
                        for rid, x, y, state, act in robots
                    ],
                }
            )
        return {
            "env": self.region.to_ascii(),
            "strategy": self.strategy,
            "seed": self.seed,
            "steps": steps,
            "outcome": {"kind": self.outcome.kind, "t": self.outcome.t},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimulationTrace":
        from .grid import from_ascii

        trace = cls(from_ascii(data["env"]), data["strategy"], data["seed"])
        trace.steps = [
            (
                step["t"],
                step["spawn"],
                tuple(
                    (r["id"], r["pos"][0], r["pos"][1], r["state"], r["act"])
                    for r in step["robots"]
                ),
            )
            for step in data["steps"]
        ]
        trace.outcome = Outcome(data["outcome"]["kind"], data["outcome"]["t"])
        return trace


class Simulation:
    def __init__(
        self,
        region: Region,
        strategy,
        seed: int = 0,
        record: bool = True,
        checker: "RunChecker | None" = None,
    ):
        self.region = region
        self.strategy = strategy
        self.seed = seed
        self.robots: list[Robot] = []
        self.occupied: dict[Cell, Robot] = {}
        self.t = 0
        self.outcome: Outcome | None = None
        self.trace = SimulationTrace(region, strategy.name, seed)
        if not record:
            self.trace.steps = None
        self.checker = checker
        self._seen_configs: set = set()
        self._settled_count = 0

    @property
    def covered(self) -> bool:
        return len(self.occupied) == len(self.region.cells)

    def sense(self, pos: Cell) -> SensorView:
        return SensorView(pos, self.occupied, self.region.cells)

    def active_robots(self) -> list[Robot]:
        return [r for r in self.robots if r.active]

    def step(self) -> None:
        """Advance one synchronized Look-Compute-Move step."""
        assert self.outcome is None, "simulation already terminated"
        t = self.t + 1
        region = self.region
        occupied = self.occupied  # mutated only after all decisions
        if self.checker is not None:
            self.checker.before_step(self)
        spawn_pending = region.door not in occupied
        existing = list(self.robots)
        actions: dict[int, int] = {}
        if self.strategy.privileged:
            actions = self.strategy.decide_all(self)
        else:
            for robot in existing:
                if not robot.active:
                    continue
                view = self.sense(robot.pos)
                act, robot.mem = self.strategy.decide(view, robot.mem)
                actions[robot.id] = act

        # Validate moves against the snapshot.
        targets: dict[Cell, int] = {}
        for robot in existing:
            act = actions.get(robot.id)
            if act is None or act >= A_STAY:
                continue
            dx, dy = DIR_VECTORS[act]
            target = (robot.pos[0] + dx, robot.pos[1] + dy)
            if target not in region.cells or target in occupied:
                raise CollisionError(
                    f"t={t}: robot {robot.id} at {robot.pos} moved into "
                    f"occupied cell {target}"
                )
            if target in targets:
                raise CollisionError(
                    f"t={t}: robots {targets[target]} and {robot.id} both "
                    f"target {target}"
                )
            targets[target] = robot.id

        # Apply all moves simultaneously, then settles.
        movers = []
        for robot in existing:
            act = actions.get(robot.id)
            if act is not None and act < A_STAY:
                movers.append((robot, act))
        for robot, act in movers:
            del occupied[robot.pos]
        for robot, act in movers:
            dx, dy = DIR_VECTORS[act]
            robot.pos = (robot.pos[0] + dx, robot.pos[1] + dy)
            occupied[robot.pos] = robot
            robot.moves += 1
        settled_now = []
        for robot in existing:
            if actions.get(robot.id) == A_SETTLE:
                robot.active = False
                settled_now.append(robot)
            elif robot.id in actions:
                robot.travel += 1  # active at both step boundaries

        # Spawn: door free in the snapshot and still free after moves
        # (a robot cycling back through the door suppresses emergence).
        spawned = None
        if spawn_pending and region.door not in occupied:
            mem = None if self.strategy.privileged else self.strategy.fresh_memory()
            spawned = Robot(len(self.robots) + 1, region.door, mem)
            self.robots.append(spawned)
            occupied[region.door] = spawned
            if self.strategy.privileged:
                self.strategy.on_spawn(self, spawned)

        self.t = t
        if self.trace.steps is not None:
            rows = tuple(
                (
                    r.id,
                    r.pos[0],
                    r.pos[1],
                    "A" if r.active else "S",
                    ACTION_CHARS[actions[r.id]] if r.id in actions else ".",
                )
                for r in existing
            )
            self.trace.steps.append((t, spawned.id if spawned else None, rows))
        if self.checker is not None:
            self.checker.after_step(self, actions, settled_now)

        if self.covered:
            self.outcome = Outcome("covered", t)
            return
        if settled_now:
            self._settled_count += len(settled_now)
            self._seen_configs.clear()
        key = self._config_key()
        if key in self._seen_configs:
            self.outcome = Outcome("deadlock", t)
            return
        self._seen_configs.add(key)

    def _config_key(self):
        robots = tuple(
            (r.pos, r.mem.key() if r.mem is not None else None)
            for r in self.robots
            if r.active
        )
        return (robots, self.strategy.state_key())

    def finish(self, max_steps: int) -> None:
        while self.outcome is None:
            if self.t >= max_steps:
                self.outcome = Outcome("limit", self.t)
                break
            self.step()
        self.trace.outcome = self.outcome


def run(
    region: Region,
    strategy,
    max_steps: int | None = None,
    record: bool = True,
    check: bool = False,
) -> tuple[SimulationTrace, RunMetrics]:
    """Run a strategy to completion and return (trace, metrics).

    ``max_steps`` defaults to 4*V, enough for FCDFS (2V-1) with slack for
    baselines that pause. ``check`` enables per-step invariant assertions
    (spacing, corner settles, hall redirects); violations raise
    InvariantViolation.
    """
    if max_steps is None:
        max_steps = 4 * len(region.cells)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    checker = RunChecker(region) if check else None
    sim = Simulation(
        region,
        strategy,
        seed=getattr(strategy, "seed", 0),
        record=record,
        checker=checker,
    )
    sim.finish(max_steps)
    metrics = _metrics_from_sim(sim)
    return sim.trace, metrics


def _metrics_from_sim(sim: Simulation) -> RunMetrics:
    travels = [r.travel for r in sim.robots]
    moves = [r.moves for r in sim.robots]
    optimum = topology.sum_distances(sim.region, sim.region.door)
    total_travel = sum(travels)
    outcome = sim.outcome
    return RunMetrics(
        V=len(sim.region.cells),
        makespan=outcome.t if outcome.kind == "covered" else None,
        total_travel=total_travel,
        max_travel=max(travels, default=0),
        total_moves=sum(moves),
        max_moves=max(moves, default=0),
        optimum=optimum,
        optimal=total_travel == optimum,
        outcome=outcome.kind,
        robots=len(sim.robots),
    )


class RunChecker:
    """Per-step assertions of the runtime invariants:

    - active robots A_i, A_j (i < j) are at graph distance >= 2(j - i);
    - next(A_{i+1}) = prev(A_i) (follow the leader);
    - robots settle only at corners of the residual region;
    - primary-direction changes happen only at halls of the residual
      region (skipping the initial choice);
    - no Stay actions.

    These hold for the FCDFS family on simply connected regions.
    """

    def __init__(self, region: Region, dist_cache: topology.DistanceCache | None = None):
        self.region = region
        self.dist = dist_cache or topology.DistanceCache(region)
        self._positions: dict[int, list] = {}  # id -> [pos at t-1, pos at t]
        self._primaries: dict[int, object] = {}
        self._residual: set | None = None

    def before_step(self, sim: Simulation) -> None:
        t = sim.t + 1
        active = sim.active_robots()
        for i, a in enumerate(active):
            for b in active[i + 1 :]:
                bound = 2 * (b.id - a.id)
                if manhattan(a.pos, b.pos) >= bound:
                    continue
                if self.dist.distance(a.pos, b.pos) < bound:
                    raise InvariantViolation(
                        f"t={t}: robots {a.id} at {a.pos} and {b.id} at "
                        f"{b.pos} are closer than {bound}"
                    )
        self._residual = set(self.region.cells) - {
            r.pos for r in sim.robots if not r.active
        }
        for r in sim.robots:
            self._primaries[r.id] = getattr(r.mem, "primary", None)

    def after_step(self, sim: Simulation, actions, settled_now) -> None:
        t = sim.t
        residual = self._residual
        for rid, act in actions.items():
            if act == A_STAY:
                raise InvariantViolation(f"t={t}: robot {rid} issued Stay")
        for robot in settled_now:
            cls = topology.classify_cells(residual, robot.pos)
            if cls.kind != topology.CORNER:
                raise InvariantViolation(
                    f"t={t}: robot {robot.id} settled at {robot.pos}, a "
                    f"{cls.kind} of the residual region"
                )
        for robot in sim.robots:
            before = self._primaries.get(robot.id)
            after = getattr(robot.mem, "primary", None)
            if before is None or after is None or before == after:
                continue
            # Position at the start of the step, where the redirect happened.
            hist = self._positions.get(robot.id)
            at = hist[-1] if hist else robot.pos
            cls = topology.classify_cells(residual, at)
            if cls.kind != topology.HALL:
                raise InvariantViolation(
                    f"t={t}: robot {robot.id} changed primary at {at}, a "
                    f"{cls.kind} of the residual region"
                )
        # Follow the leader: position of A_{i+1} at the end of this step
        # must equal A_i's position two step-boundaries earlier, as long
        # as A_i was active at the start of the step.
        for robot in sim.robots:
            pred_hist = self._positions.get(robot.id - 1)
            if not pred_hist or len(pred_hist) < 2:
                continue
            pred_was_active = pred_hist[-1] is not None
            own_hist = self._positions.get(robot.id)
            was_active_at_start = not own_hist or own_hist[-1] is not None
            if pred_was_active and was_active_at_start and robot.pos != pred_hist[0]:
                raise InvariantViolation(
                    f"t={t}: robot {robot.id} at {robot.pos} does not "
                    f"follow robot {robot.id - 1} (expected {pred_hist[0]})"
                )
        for robot in sim.robots:
            hist = self._positions.setdefault(robot.id, [])
            hist.append(robot.pos if robot.active else None)
            if len(hist) > 2:
                del hist[0]
