"""Deterministic simulator and analysis toolkit for uniform dispersal
of simple robot swarms on grid environments."""

from .engine import Simulation, SimulationTrace, run
from .grid import Region, from_ascii
from .metrics import RunMetrics, compute_metrics
from .strategies import STRATEGIES, make_strategy

__version__ = "0.1.0"

__all__ = [
    "Region",
    "from_ascii",
    "Simulation",
    "SimulationTrace",
    "run",
    "RunMetrics",
    "compute_metrics",
    "STRATEGIES",
    "make_strategy",
    "__version__",
]
