"""Receding-horizon planning agent over the true transition table.

At every step the agent scores length-``horizon`` action sequences by
discounted return, takes the first action of a best sequence, then
re-plans from the next state. The horizon stays fixed at every re-plan,
so once steps have elapsed the agent's lookahead window extends past the
task deadline; the certifier deliberately analyses this exact policy.

Two optimizers are provided. The exhaustive optimizer computes the optimal
value by dynamic programming and exposes the full argmax set of first
actions, with ties broken either by lowest index or uniformly at random.
The random-shooting optimizer scores a fixed number of uniformly drawn
action sequences and keeps the first-drawn best, which is the stochastic
optimization the guarantee analysis refuses to certify.

Optimal-value ties are compared with exact double equality: values are
produced by one shared recursion, so genuinely tied branches compute the
identical double, and synthesized reward margins keep distinct branches
apart.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal, Optional

from .mdp import DeterministicMdp, TaskSpec
from .reachability import highest_preference_reachable
from .rng import SplitMix64


@dataclass(frozen=True)
class PlannerConfig:
    horizon: int
    optimizer: Literal["exhaustive", "random_shooting"] = "exhaustive"
    tie_break: Literal["random", "lowest_index"] = "random"
    shooting_samples: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise ValueError("horizon must be positive")
        if self.shooting_samples < 1:
            raise ValueError("shooting_samples must be positive")
        if self.optimizer not in ("exhaustive", "random_shooting"):
            raise ValueError(f"unknown optimizer {self.optimizer!r}")
        if self.tie_break not in ("random", "lowest_index"):
            raise ValueError(f"unknown tie break {self.tie_break!r}")

    @property
    def randomized(self) -> bool:
        return self.optimizer == "random_shooting" or self.tie_break == "random"


@dataclass(frozen=True)
class RolloutRecord:
    visited: tuple[int, ...]
    actions: tuple[int, ...]
    first_goal_hit: Optional[tuple[int, int]]
    success: bool
    seed: int


class ValueTable:
    """Memoized optimal values and argmax first actions for one MDP."""

    def __init__(self, mdp: DeterministicMdp, horizon: int):
        if horizon < 1:
            raise ValueError("horizon must be positive")
        self.mdp = mdp
        self.horizon = horizon
        self._values: dict[tuple[int, int], float] = {}
        self._first: dict[int, tuple[int, ...]] = {}

    def value(self, s: int, depth: int) -> float:
        if depth == 0:
            return 0.0
        key = (s, depth)
        cached = self._values.get(key)
        if cached is not None:
            return cached
        mdp = self.mdp
        best = None
        for a in range(mdp.n_actions):
            nxt = mdp.transition[s][a]
            v = mdp.reward[nxt] + mdp.gamma * self.value(nxt, depth - 1)
            if best is None or v > best:
                best = v
        assert best is not None
        self._values[key] = best
        return best

    def first_actions(self, s: int) -> tuple[int, ...]:
        """All actions starting a best length-``horizon`` sequence from s,
        in ascending index order."""
        cached = self._first.get(s)
        if cached is not None:
            return cached
        mdp = self.mdp
        scores = [
            mdp.reward[mdp.transition[s][a]]
            + mdp.gamma * self.value(mdp.transition[s][a], self.horizon - 1)
            for a in range(mdp.n_actions)
        ]
        top = max(scores)
        acts = tuple(a for a, v in enumerate(scores) if v == top)
        self._first[s] = acts
        return acts


def optimal_value(mdp: DeterministicMdp, s: int, depth: int) -> float:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth == 0:
        return 0.0
    return ValueTable(mdp, depth).value(s, depth)


def optimal_first_actions(
    mdp: DeterministicMdp, s: int, depth: int
) -> tuple[int, ...]:
    return ValueTable(mdp, depth).first_actions(s)


def _shooting_step(
    mdp: DeterministicMdp, s: int, config: PlannerConfig, rng: SplitMix64
) -> int:
    best_val: Optional[float] = None
    best_first = 0
    for _ in range(config.shooting_samples):
        state = s
        states = []
        for _ in range(config.horizon):
            a = rng.randrange(mdp.n_actions)
            if len(states) == 0:
                first = a
            state = mdp.transition[state][a]
            states.append(state)
        value = 0.0
        for entered in reversed(states):
            value = mdp.reward[entered] + mdp.gamma * value
        if best_val is None or value > best_val:
            best_val = value
            best_first = first
    return best_first


def plan_step(
    mdp: DeterministicMdp,
    s: int,
    config: PlannerConfig,
    rng: SplitMix64,
    table: Optional[ValueTable] = None,
) -> int:
    """One planning decision: the executed first action from state s."""
    if config.optimizer == "random_shooting":
        return _shooting_step(mdp, s, config, rng)
    if table is None or table.horizon != config.horizon:
        table = ValueTable(mdp, config.horizon)
    acts = table.first_actions(s)
    if config.tie_break == "lowest_index":
        return acts[0]
    return acts[rng.randrange(len(acts))]


def rollout(
    mdp: DeterministicMdp,
    task: TaskSpec,
    config: PlannerConfig,
    table: Optional[ValueTable] = None,
) -> RolloutRecord:
    """Run the agent for up to ``deadline`` steps, stopping when any goal
    state is entered. Success means the first goal entered is the
    highest-preference goal reachable within the deadline."""
    rng = SplitMix64(config.seed)
    if config.optimizer == "exhaustive" and table is None:
        table = ValueTable(mdp, config.horizon)
    target = highest_preference_reachable(mdp, task)
    goals = set(task.goals)
    visited: list[int] = []
    actions: list[int] = []
    hit: Optional[tuple[int, int]] = None
    s = task.start
    for step in range(1, task.deadline + 1):
        a = plan_step(mdp, s, config, rng, table)
        s = mdp.transition[s][a]
        actions.append(a)
        visited.append(s)
        if s in goals:
            hit = (s, step)
            break
    success = hit is not None and target is not None and hit[0] == target
    return RolloutRecord(
        visited=tuple(visited),
        actions=tuple(actions),
        first_goal_hit=hit,
        success=success,
        seed=config.seed,
    )


def reseeded(config: PlannerConfig, seed: int) -> PlannerConfig:
    return replace(config, seed=seed)
