"""Exhaustive certification of goal arrival under every tie-breaking choice.

The exhaustive planner is deterministic up to ties among optimal first
actions. The certificate explores the full tie-breaking tree: a
configuration is a (state, elapsed steps) pair, and every optimal first
action of the fixed-horizon planner branches the tree. A branch succeeds
when it enters the target goal within the deadline, and fails when it
enters any other goal first or exhausts the deadline. CERTIFIED means
every branch succeeds, so the agent reaches the target with probability 1
no matter how ties are resolved; otherwise a concrete failing action path
is reported.

Because the planner's horizon is fixed, its argmax set depends on the
state alone, and memoizing verdicts on (state, elapsed) is lossless; at
most |S| * deadline configurations are ever expanded.

Certificates are only issued when the plan horizon equals the deadline,
and only for the exhaustive optimizer: a stochastic optimizer such as
random shooting can miss the best sequence with positive probability, so
it is assessed by Monte Carlo estimation instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .mdp import DeterministicMdp, TaskSpec
from .planner import PlannerConfig, ValueTable, reseeded, rollout
from .reachability import highest_preference_reachable

CERTIFIED = "CERTIFIED"
REFUTED = "REFUTED"
NOT_APPLICABLE = "NOT_APPLICABLE"

FailurePath = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Certificate:
    verdict: Literal["CERTIFIED", "REFUTED", "NOT_APPLICABLE"]
    target: Optional[int] = None
    explored_configs: int = 0
    failure_path: Optional[FailurePath] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class SuccessEstimate:
    trials: int
    successes: int
    frequency: float


def certify(mdp: DeterministicMdp, task: TaskSpec) -> Certificate:
    if task.horizon != task.deadline:
        return Certificate(
            verdict=NOT_APPLICABLE,
            reason=(
                f"certificates require horizon == deadline, got horizon "
                f"{task.horizon} and deadline {task.deadline}"
            ),
        )
    target = highest_preference_reachable(mdp, task)
    if target is None:
        return Certificate(
            verdict=NOT_APPLICABLE,
            reason=f"no goal is reachable within {task.deadline} steps",
        )

    table = ValueTable(mdp, task.horizon)
    goals = set(task.goals)
    memo: dict[tuple[int, int], Optional[FailurePath]] = {}

    def explore(s: int, elapsed: int) -> Optional[FailurePath]:
        key = (s, elapsed)
        if key in memo:
            return memo[key]
        failure: Optional[FailurePath] = None
        for a in table.first_actions(s):
            nxt = mdp.transition[s][a]
            if nxt == target:
                continue
            if nxt in goals or elapsed + 1 == task.deadline:
                failure = ((s, a),)
                break
            sub = explore(nxt, elapsed + 1)
            if sub is not None:
                failure = ((s, a),) + sub
                break
        memo[key] = failure
        return failure

    failure = explore(task.start, 0)
    if failure is None:
        return Certificate(
            verdict=CERTIFIED, target=target, explored_configs=len(memo)
        )
    return Certificate(
        verdict=REFUTED,
        target=target,
        explored_configs=len(memo),
        failure_path=failure,
    )


def find_counterexample(
    mdp: DeterministicMdp, task: TaskSpec
) -> Optional[FailurePath]:
    return certify(mdp, task).failure_path


def estimate_success(
    mdp: DeterministicMdp,
    task: TaskSpec,
    config: PlannerConfig,
    trials: int,
    base_seed: int = 0,
) -> SuccessEstimate:
    """Monte Carlo success frequency over consecutive per-trial seeds."""
    if trials < 1:
        raise ValueError("trials must be positive")
    table = (
        ValueTable(mdp, config.horizon) if config.optimizer == "exhaustive" else None
    )
    successes = 0
    for i in range(trials):
        record = rollout(mdp, task, reseeded(config, base_seed + i), table)
        if record.success:
            successes += 1
    return SuccessEstimate(
        trials=trials, successes=successes, frequency=successes / trials
    )
