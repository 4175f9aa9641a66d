"""Finite deterministic MDP and task data model.

States and actions are dense integer ids; display names are kept alongside
for file round-trips and report rendering. The reward map is per state and
is collected on *entering* a state: the first reward of any trajectory is
the reward of the first successor, and the reward of the state an agent
starts in is never counted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Mapping


@dataclass(frozen=True)
class DeterministicMdp:
    """Finite MDP with a total deterministic transition table.

    ``transition[s][a]`` is the unique successor of state ``s`` under
    action ``a``. ``reward[s]`` is received whenever ``s`` is entered.
    """

    state_names: tuple[str, ...]
    action_names: tuple[str, ...]
    transition: tuple[tuple[int, ...], ...]
    reward: tuple[float, ...]
    gamma: float

    def __post_init__(self) -> None:
        n, m = len(self.state_names), len(self.action_names)
        if len(set(self.state_names)) != n:
            raise ValueError("state names must be distinct")
        if len(set(self.action_names)) != m:
            raise ValueError("action names must be distinct")
        if len(self.transition) != n or len(self.reward) != n:
            raise ValueError("transition and reward tables must cover every state")
        for s, row in enumerate(self.transition):
            if len(row) != m:
                raise ValueError(f"transition row for state {s} must cover every action")
            for nxt in row:
                if not 0 <= nxt < n:
                    raise ValueError(f"transition target {nxt} out of range")

    @property
    def n_states(self) -> int:
        return len(self.state_names)

    @property
    def n_actions(self) -> int:
        return len(self.action_names)

    def state_id(self, name: str) -> int:
        try:
            return self.state_names.index(name)
        except ValueError:
            raise KeyError(f"unknown state name {name!r}") from None

    def action_id(self, name: str) -> int:
        try:
            return self.action_names.index(name)
        except ValueError:
            raise KeyError(f"unknown action name {name!r}") from None

    def with_rewards(self, updates: Mapping[int, float]) -> "DeterministicMdp":
        """Copy of this MDP with selected per-state rewards replaced."""
        new = list(self.reward)
        for s, r in updates.items():
            new[s] = float(r)
        return replace(self, reward=tuple(new))


@dataclass(frozen=True)
class TaskSpec:
    """Start state, preference-ordered goals, deadline, and plan horizon.

    ``goals`` is ordered by strictly descending preference. ``deadline`` is
    the number of steps within which the best reachable goal must be
    entered; ``horizon`` is the planner's lookahead depth.
    """

    start: int
    goals: tuple[int, ...]
    deadline: int
    horizon: int

    def __post_init__(self) -> None:
        if not self.goals:
            raise ValueError("at least one goal is required")
        if self.deadline < 1:
            raise ValueError("deadline must be a positive integer")
        if self.horizon < 1:
            raise ValueError("horizon must be a positive integer")


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[tuple[str, str], ...]

    def errors(self) -> tuple[str, ...]:
        return tuple(msg for sev, msg in self.issues if sev == "error")

    def warnings(self) -> tuple[str, ...]:
        return tuple(msg for sev, msg in self.issues if sev == "warning")


def validate(mdp: DeterministicMdp, task: TaskSpec) -> ValidationReport:
    """Check model and task invariants, returning issues as data.

    Errors mark violations that make downstream analysis meaningless.
    A warning flags the classic fault-prone reward pattern where some
    non-goal state's reward rivals every goal reward, which can misguide
    the planner toward the wrong state.
    """
    issues: list[tuple[str, str]] = []

    def error(msg: str) -> None:
        issues.append(("error", msg))

    if mdp.n_actions < 1:
        error("model has no actions")
    if not (0.0 <= mdp.gamma <= 1.0) or not math.isfinite(mdp.gamma):
        error(f"gamma {mdp.gamma} outside [0, 1]")
    for s, r in enumerate(mdp.reward):
        if not math.isfinite(r):
            error(f"reward of state {mdp.state_names[s]!r} is not finite")
        elif r < 0:
            error(f"negative reward {r} at state {mdp.state_names[s]!r}")

    n = mdp.n_states
    if not 0 <= task.start < n:
        error(f"start state id {task.start} out of range")
    bad_goal = [g for g in task.goals if not 0 <= g < n]
    for g in bad_goal:
        error(f"goal state id {g} out of range")
    if len(set(task.goals)) != len(task.goals):
        error("duplicate goal state")
    if not bad_goal and task.start in task.goals:
        error("goal equals start")
    if task.horizon < task.deadline:
        error(f"horizon {task.horizon} below deadline {task.deadline}")

    if not any(sev == "error" for sev, _ in issues):
        goal_set = set(task.goals)
        top_goal_reward = max(mdp.reward[g] for g in task.goals)
        for s in range(n):
            if s not in goal_set and mdp.reward[s] > 0 and mdp.reward[s] >= top_goal_reward:
                issues.append(
                    (
                        "warning",
                        f"non-goal reward rivals goal reward: state "
                        f"{mdp.state_names[s]!r} has reward {mdp.reward[s]} but the "
                        f"highest goal reward is {top_goal_reward}",
                    )
                )

    ok = not any(sev == "error" for sev, _ in issues)
    return ValidationReport(ok=ok, issues=tuple(issues))


def names_to_ids(mdp: DeterministicMdp, names: Iterable[str]) -> tuple[int, ...]:
    return tuple(mdp.state_id(name) for name in names)
