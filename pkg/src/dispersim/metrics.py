"""Run metrics: travel/move counts, makespan, comparison tables, CSV."""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from .errors import TraceRegionMismatch
from .grid import Region
from .topology import sum_distances

CSV_HEADER = (
    "env,door_x,door_y,V,strategy,seed,outcome,makespan,"
    "total_travel,max_travel,total_moves,max_moves,optimum,optimal"
)


@dataclass(frozen=True)
class RunMetrics:
    V: int
    makespan: int | None
    total_travel: int
    max_travel: int
    total_moves: int
    max_moves: int
    optimum: int
    optimal: bool
    outcome: str
    robots: int

    def csv_row(self, env: str, region: Region, strategy: str, seed: int) -> str:
        makespan = "" if self.makespan is None else str(self.makespan)
        return ",".join(
            [
                env,
                str(region.door[0]),
                str(region.door[1]),
                str(self.V),
                strategy,
                str(seed),
                self.outcome,
                makespan,
                str(self.total_travel),
                str(self.max_travel),
                str(self.total_moves),
                str(self.max_moves),
                str(self.optimum),
                str(self.optimal).lower(),
            ]
        )


def compute_metrics(trace, r: Region) -> RunMetrics:
    """Recompute metrics from a recorded trace.

    Independent of the engine's streaming counters: travel is counted as
    steps where a robot appears active at both step boundaries, moves as
    position changes between consecutive records.
    """
    if trace.steps is None:
        raise TraceRegionMismatch("trace was recorded without steps")
    if trace.region.cells != r.cells or trace.region.door != r.door:
        raise TraceRegionMismatch("trace does not belong to this region")
    travel: dict[int, int] = {}
    moves: dict[int, int] = {}
    prev_pos: dict[int, tuple] = {}
    prev_active: dict[int, bool] = {}
    for t, spawn, robots in trace.steps:
        for rid, x, y, state, act in robots:
            pos = (x, y)
            active_end = state == "A"
            if prev_active.get(rid, False) and active_end:
                travel[rid] = travel.get(rid, 0) + 1
            if rid in prev_pos and prev_pos[rid] != pos:
                moves[rid] = moves.get(rid, 0) + 1
            prev_pos[rid] = pos
            prev_active[rid] = active_end
        if spawn is not None:
            prev_pos[spawn] = r.door
            prev_active[spawn] = True
            travel.setdefault(spawn, 0)
            moves.setdefault(spawn, 0)
    optimum = sum_distances(r, r.door)
    total_travel = sum(travel.values())
    return RunMetrics(
        V=len(r.cells),
        makespan=trace.outcome.t if trace.outcome.kind == "covered" else None,
        total_travel=total_travel,
        max_travel=max(travel.values(), default=0),
        total_moves=sum(moves.values()),
        max_moves=max(moves.values(), default=0),
        optimum=optimum,
        optimal=total_travel == optimum,
        outcome=trace.outcome.kind,
        robots=len(travel),
    )


@dataclass(frozen=True)
class StrategySummary:
    strategy: str
    runs: int
    mean_total_moves: float
    min_total_moves: int
    max_total_moves: int
    mean_max_moves: float
    mean_total_travel: float
    mean_max_travel: float
    mean_makespan: float | None
    failures: int

    def table_entry(self) -> str:
        """Format as "total (max)" using pause-excluding move counts."""
        return f"{self.mean_total_moves:.0f} ({self.mean_max_moves:.0f})"


@dataclass(frozen=True)
class ComparisonTable:
    rows: list  # (strategy, seed, RunMetrics | None, error message | None)
    summaries: list[StrategySummary]


def compare_runs(
    r: Region,
    strategies: list[str],
    seeds: list[int],
    reps: int = 1,
    max_steps: int | None = None,
    env_label: str = "region",
) -> ComparisonTable:
    """Run every (strategy, seed) cell and aggregate per strategy.

    Per-run failures are recorded in the row, not fatal to the table.
    """
    from . import engine
    from .strategies import make_strategy

    if reps > len(seeds):
        base = seeds[-1] if seeds else 0
        seeds = list(seeds) + [base + i + 1 for i in range(reps - len(seeds))]
    rows = []
    for name in strategies:
        for seed in seeds:
            strategy = make_strategy(name, r, seed)
            try:
                _, metrics = engine.run(r, strategy, max_steps=max_steps, record=False)
                rows.append((name, seed, metrics, None))
            except Exception as exc:  # recorded per cell
                rows.append((name, seed, None, f"{type(exc).__name__}: {exc}"))
    summaries = []
    for name in strategies:
        cells = [m for (n, _, m, _) in rows if n == name and m is not None]
        failures = sum(1 for (n, _, m, _) in rows if n == name and m is None)
        if not cells:
            summaries.append(
                StrategySummary(name, 0, 0.0, 0, 0, 0.0, 0.0, 0.0, None, failures)
            )
            continue
        makespans = [m.makespan for m in cells if m.makespan is not None]
        summaries.append(
            StrategySummary(
                strategy=name,
                runs=len(cells),
                mean_total_moves=statistics.mean(m.total_moves for m in cells),
                min_total_moves=min(m.total_moves for m in cells),
                max_total_moves=max(m.total_moves for m in cells),
                mean_max_moves=statistics.mean(m.max_moves for m in cells),
                mean_total_travel=statistics.mean(m.total_travel for m in cells),
                mean_max_travel=statistics.mean(m.max_travel for m in cells),
                mean_makespan=statistics.mean(makespans) if makespans else None,
                failures=failures,
            )
        )
    return ComparisonTable(rows=rows, summaries=summaries)
