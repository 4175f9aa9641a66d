"""Forward reachable sets over the transition table.

The reachable set from an origin collects every state that some action
sequence *enters* within the horizon, together with its earliest arrival
step. Because membership is defined over successors, the origin itself is
a member only when some cycle leads back to it; callers expecting the
origin to always be present should check ``earliest_step`` explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .mdp import DeterministicMdp, TaskSpec


@dataclass(frozen=True)
class ReachableSet:
    origin: int
    horizon: int
    earliest_step: Mapping[int, int] = field(default_factory=dict)


def forward_reachable_set(
    mdp: DeterministicMdp, origin: int, horizon: int
) -> ReachableSet:
    """Breadth-first expansion of the transition table, depth-limited.

    ``earliest_step[s] == d`` means some action sequence of length d ends
    in s and no shorter one does. A horizon of 0 yields the empty set.
    """
    if not 0 <= origin < mdp.n_states:
        raise ValueError(f"origin state id {origin} out of range")
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    earliest: dict[int, int] = {}
    frontier = {origin}
    for step in range(1, horizon + 1):
        nxt = set()
        for s in frontier:
            for a in range(mdp.n_actions):
                succ = mdp.transition[s][a]
                if succ not in earliest:
                    earliest[succ] = step
                    nxt.add(succ)
        if not nxt:
            break
        frontier = nxt
    return ReachableSet(origin=origin, horizon=horizon, earliest_step=earliest)


def goal_reachable(reach: ReachableSet, goal: int, deadline: int) -> bool:
    """Whether the goal is entered within the deadline. First check of the
    guarantee: with fewer steps than the earliest arrival, no reward design
    can make the agent arrive in time."""
    if deadline < 1:
        raise ValueError("deadline must be positive")
    if reach.horizon < deadline:
        raise ValueError(
            f"reachable set was computed to horizon {reach.horizon}, "
            f"below deadline {deadline}"
        )
    step = reach.earliest_step.get(goal)
    return step is not None and step <= deadline


def highest_preference_reachable(
    mdp: DeterministicMdp, task: TaskSpec
) -> Optional[int]:
    """First goal in preference order reachable within the deadline, if any."""
    reach = forward_reachable_set(mdp, task.start, task.deadline)
    for g in task.goals:
        if goal_reachable(reach, g, task.deadline):
            return g
    return None
