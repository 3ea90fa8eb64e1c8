"""Strategy interface.

A strategy decides one robot's action from its sensor view and private
memory only; the engine enforces this structurally by passing nothing
else. Privileged baselines instead implement ``decide_all`` and receive
the whole simulation (they model algorithms whose original setting
grants leader-follower signaling).
"""

from __future__ import annotations

from ..engine import A_SETTLE, A_STAY, SensorView  # noqa: F401  (re-export)


class Strategy:
    name = "?"
    privileged = False

    def __init__(self, region=None, seed: int = 0):
        # Local strategies must not look at the region; the argument only
        # exists so the registry can construct every strategy uniformly.
        self.seed = seed

    def fresh_memory(self):
        raise NotImplementedError

    def decide(self, view: SensorView, mem):
        """Return (action, memory')."""
        raise NotImplementedError

    def state_key(self):
        """Extra run-level state for deadlock configuration hashing."""
        return None
