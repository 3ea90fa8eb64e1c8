import pytest

from dispersim.engine import (
    A_SETTLE,
    A_STAY,
    VIEW_OFFSETS,
    Simulation,
    SensorView,
    run,
)
from dispersim.envgen import rect
from dispersim.errors import CollisionError, InvariantViolation
from dispersim.grid import Region, UP, RIGHT
from dispersim.strategies import make_strategy
from dispersim.strategies.base import Strategy


def test_view_offsets_cover_radius_two():
    assert len(VIEW_OFFSETS) == 12
    assert all(0 < abs(dx) + abs(dy) <= 2 for dx, dy in VIEW_OFFSETS)


def test_sensor_view_walls_and_robots_indistinguishable():
    r = rect(2, 1, (0, 0))
    sim = Simulation(r, make_strategy("fcdfs", r, 0))
    sim.step()  # spawns a robot at the door
    view = SensorView((1, 0), sim.occupied, r.cells)
    assert view.occupied_offset(-1, 0)  # robot
    assert view.occupied_offset(0, 1)  # wall
    assert view.free_dirs() == []
    with pytest.raises(ValueError):
        view.occupied_offset(0, 3)


def test_spawn_every_other_step():
    r = rect(1, 9, (0, 0))
    sim = Simulation(r, make_strategy("fcdfs", r, 0))
    spawn_steps = []
    for _ in range(8):
        sim.step()
        t, spawn, _rows = sim.trace.steps[-1]
        if spawn is not None:
            spawn_steps.append(t)
    assert spawn_steps == [1, 3, 5, 7]


def test_corridor_run_is_covered_in_2v_minus_1():
    r = rect(1, 5, (0, 0))
    trace, m = run(r, make_strategy("fcdfs", r, 0))
    assert m.outcome == "covered"
    assert m.makespan == 9
    assert m.total_travel == 10 == m.optimum
    assert m.max_travel == 4
    assert trace.outcome.kind == "covered"


def test_single_cell_region():
    r = rect(1, 1, (0, 0))
    _, m = run(r, make_strategy("fcdfs", r, 0))
    assert m.outcome == "covered"
    assert m.makespan == 1
    assert m.total_travel == 0


class _Rammer(Strategy):
    """Always moves up; used to provoke collisions and limits."""

    name = "rammer"

    def fresh_memory(self):
        return None

    def decide(self, view, mem):
        return UP, mem


def test_moving_into_occupied_cell_raises():
    r = rect(1, 3, (0, 0))
    sim = Simulation(r, _Rammer())
    sim.step()
    sim.step()
    sim.step()  # robot 2 now directly below robot 1
    with pytest.raises(CollisionError):
        while sim.outcome is None:
            sim.step()


class _Counter:
    def __init__(self):
        self.n = 0

    def key(self):
        return self.n


class _TwoWayRammer(Strategy):
    """Robots head for (1, 1) from both sides of a 2x2 block."""

    name = "tworam"

    def fresh_memory(self):
        return _Counter()

    def decide(self, view, mem):
        mem.n += 1
        if mem.n == 1:
            return (UP, mem) if not view.occupied_dir(UP) else (RIGHT, mem)
        return (RIGHT, mem) if not view.occupied_offset(0, -1) else (UP, mem)


def test_simultaneous_same_target_raises():
    r = rect(2, 2, (0, 0))
    sim = Simulation(r, _TwoWayRammer())
    with pytest.raises(CollisionError):
        for _ in range(6):
            sim.step()


def test_step_limit_outcome():
    ring = Region({(x, y) for x in range(3) for y in range(3)} - {(1, 1)}, (0, 0))
    _, m = run(ring, make_strategy("left-hand", ring, 0), max_steps=3)
    assert m.outcome == "limit"


def test_deadlock_detected_on_ring():
    ring = Region({(x, y) for x in range(3) for y in range(3)} - {(1, 1)}, (0, 0))
    trace, m = run(ring, make_strategy("fcdfs", ring, 0))
    assert m.outcome == "deadlock"
    assert trace.outcome.kind == "deadlock"


def test_trace_json_shape():
    r = rect(2, 2, (0, 0))
    trace, _ = run(r, make_strategy("fcdfs", r, 0))
    d = trace.to_json_dict()
    assert list(d) == ["env", "strategy", "seed", "steps", "outcome"]
    assert d["strategy"] == "fcdfs"
    first = d["steps"][0]
    assert first["t"] == 1
    assert first["spawn"] == 1
    assert first["robots"] == []
    assert d["outcome"]["kind"] == "covered"


def test_trace_json_round_trip():
    from dispersim.engine import SimulationTrace

    r = rect(3, 2, (1, 0))
    trace, _ = run(r, make_strategy("fcdfs", r, 0))
    clone = SimulationTrace.from_json_dict(trace.to_json_dict())
    assert clone.steps == trace.steps
    assert clone.outcome == trace.outcome
    assert clone.region == trace.region


def test_run_without_recording_keeps_metrics():
    r = rect(4, 4, (0, 0))
    trace, m = run(r, make_strategy("fcdfs", r, 0), record=False)
    assert trace.steps is None
    assert m.outcome == "covered"
    assert m.makespan == 31


def test_checker_accepts_fcdfs_and_flags_stay():
    r = rect(5, 5, (2, 2))
    _, m = run(r, make_strategy("fcdfs", r, 0), check=True)
    assert m.outcome == "covered"

    class Idler(Strategy):
        name = "idler"

        def fresh_memory(self):
            return None

        def decide(self, view, mem):
            return A_STAY, mem

    with pytest.raises(InvariantViolation):
        run(rect(2, 1, (0, 0)), Idler(), max_steps=5, check=True)


def test_checker_flags_settling_at_interior():
    class EagerSettler(Strategy):
        name = "eager"

        def fresh_memory(self):
            return None

        def decide(self, view, mem):
            return A_SETTLE, mem

    # Door in the middle of a corridor: an interior cell.
    with pytest.raises(InvariantViolation):
        run(rect(3, 1, (1, 0)), EagerSettler(), max_steps=5, check=True)
