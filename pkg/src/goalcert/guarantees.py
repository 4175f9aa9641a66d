"""Goal-guarantee conditions and reward synthesis.

Three checkable conditions decide whether a receding-horizon planner is
forced to reach a goal within the deadline:

* REACHABLE: the goal is entered by some action sequence within the
  deadline. Without this no reward design can help.

* NECESSARY_DOMINANCE: the best deadline-length trajectory that enters the
  goal (avoiding other goals) strictly beats the best trajectory that
  avoids every goal. If it fails, goal-avoiding behavior is optimal or
  tied for the planner at the start state, so the guarantee is lost.

* SUFFICIENT_SINGLE: gamma^deadline * reward(goal) strictly exceeds the
  best goal-avoiding return. This is conservative: a goal entered at step
  t <= deadline carries discount gamma^(t-1) >= gamma^deadline, so passing
  this check implies dominance.

For multiple goals ordered by preference, each adjacent pair must also
satisfy a preference inequality so the planner picks the better goal. The
pairwise right-hand side exists in two variants: "literal", where every
term of the lower goal's bound is discounted by the full deadline power,
and "corrected", where the terms carry geometric discounts 1, gamma,
gamma^2, ... The literal variant undercounts a lower goal entered early
(its reward is then discounted far less than gamma^deadline), and a small
fixture demonstrates it certifying a preference the planner does not
honor; "corrected" is therefore the default.

Goal-avoiding trajectory classes are read as set disjointness: a
goal-avoiding trajectory enters no goal state at all.

All comparisons are strict with zero tolerance. Synthesized rewards sit a
multiplicative margin above their exclusive bounds, which is what keeps
the strict inequalities robust downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping, Optional

from .mdp import DeterministicMdp, TaskSpec
from .reachability import forward_reachable_set, goal_reachable
from .trajectories import Trajectory, max_avoiding_return, max_containing_return

PreferenceMode = Literal["literal", "corrected"]

REACHABLE = "REACHABLE"
NECESSARY_DOMINANCE = "NECESSARY_DOMINANCE"
SUFFICIENT_SINGLE = "SUFFICIENT_SINGLE"
PREFERENCE_PAIR = "PREFERENCE_PAIR"


class UnreachableGoalError(ValueError):
    """The goal cannot be entered within the deadline."""


class InfiniteBoundError(ValueError):
    """No finite goal reward satisfies the sufficient condition."""


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of one condition check.

    ``margin`` is lhs - rhs and, for the inequality conditions, ``holds``
    is exactly ``margin > 0``. REACHABLE results carry no meaningful
    sides (both 0). A missing lhs means no qualifying goal trajectory
    exists; a missing rhs means no goal-avoiding trajectory exists, in
    which case dominance holds vacuously.
    """

    condition: str
    holds: bool
    lhs: Optional[float]
    rhs: Optional[float]
    margin: Optional[float]
    goal: Optional[int] = None
    other_goal: Optional[int] = None
    witness: Optional[Trajectory] = None
    counter_witness: Optional[Trajectory] = None
    interpretation: Optional[PreferenceMode] = None


@dataclass(frozen=True)
class SynthesisResult:
    """Synthesized goal rewards.

    ``bounds[g]`` is the exact exclusive lower bound the assignment for g
    must exceed; ``rewards[g]`` is bounds[g] * margin_factor, or
    margin_factor - 1 when the bound is 0 (a strictly positive floor).
    """

    rewards: Mapping[int, float]
    margin_factor: float
    mode: PreferenceMode
    bounds: Mapping[int, float]


def _avoiding_side(
    mdp: DeterministicMdp, task: TaskSpec
) -> Optional[tuple[float, tuple[int, ...]]]:
    return max_avoiding_return(mdp, task.start, task.deadline, set(task.goals))


def check_reachable(mdp: DeterministicMdp, task: TaskSpec, goal: int) -> ConditionResult:
    reach = forward_reachable_set(mdp, task.start, task.deadline)
    return ConditionResult(
        condition=REACHABLE,
        holds=goal_reachable(reach, goal, task.deadline),
        lhs=0.0,
        rhs=0.0,
        margin=0.0,
        goal=goal,
    )


def check_necessary_dominance(
    mdp: DeterministicMdp, task: TaskSpec, goal: int
) -> ConditionResult:
    """Best goal trajectory strictly beats best goal-avoiding trajectory.

    The goal side avoids the *other* goals (reaching the target through a
    different goal would end the episode there); the avoiding side avoids
    all goals. With no goal-avoiding trajectory the comparison is over an
    empty set of competitors and the condition holds provided a goal
    trajectory exists at all.
    """
    others = set(task.goals) - {goal}
    containing = max_containing_return(mdp, task.start, task.deadline, goal, others)
    avoiding = _avoiding_side(mdp, task)
    lhs = containing[0] if containing is not None else None
    rhs = avoiding[0] if avoiding is not None else None
    holds = lhs is not None and (rhs is None or lhs > rhs)
    return ConditionResult(
        condition=NECESSARY_DOMINANCE,
        holds=holds,
        lhs=lhs,
        rhs=rhs,
        margin=(lhs - rhs) if lhs is not None and rhs is not None else None,
        goal=goal,
        witness=Trajectory.from_actions(mdp, task.start, containing[1])
        if containing is not None
        else None,
        counter_witness=Trajectory.from_actions(mdp, task.start, avoiding[1])
        if avoiding is not None
        else None,
    )


def check_sufficient_single(
    mdp: DeterministicMdp, task: TaskSpec, goal: int
) -> ConditionResult:
    avoiding = _avoiding_side(mdp, task)
    lhs = mdp.gamma**task.deadline * mdp.reward[goal]
    rhs = avoiding[0] if avoiding is not None else 0.0
    return ConditionResult(
        condition=SUFFICIENT_SINGLE,
        holds=lhs > rhs,
        lhs=lhs,
        rhs=rhs,
        margin=lhs - rhs,
        goal=goal,
        counter_witness=Trajectory.from_actions(mdp, task.start, avoiding[1])
        if avoiding is not None
        else None,
    )


def goal_reward_lower_bound(mdp: DeterministicMdp, task: TaskSpec, goal: int) -> float:
    """Infimum of goal rewards passing the sufficient condition (exclusive).

    Equals the best goal-avoiding return divided by gamma^deadline. Raises
    when the goal is unreachable within the deadline (no reward can fix
    that) or when gamma is 0 (the goal side of the inequality is then
    always 0 and no finite reward passes).
    """
    reach = forward_reachable_set(mdp, task.start, task.deadline)
    if not goal_reachable(reach, goal, task.deadline):
        raise UnreachableGoalError(
            f"condition 1 fails: goal {mdp.state_names[goal]!r} is not "
            f"reachable within {task.deadline} steps"
        )
    avoiding = _avoiding_side(mdp, task)
    rhs = avoiding[0] if avoiding is not None else 0.0
    if mdp.gamma == 0.0:
        raise InfiniteBoundError(
            "bound infinite: with a zero discount the goal term vanishes "
            "and no finite goal reward can dominate"
        )
    return rhs / mdp.gamma**task.deadline


def _preference_rhs(
    gamma: float, deadline: int, reward_lo: float, mode: PreferenceMode
) -> float:
    if mode == "literal":
        return sum(gamma**deadline * reward_lo for _ in range(deadline))
    if mode == "corrected":
        return sum(gamma**k * reward_lo for k in range(deadline))
    raise ValueError(f"unknown preference mode {mode!r}")


def check_preference_pair(
    mdp: DeterministicMdp,
    task: TaskSpec,
    hi: int,
    lo: int,
    mode: PreferenceMode = "corrected",
) -> ConditionResult:
    """The higher-preference goal's discounted reward must strictly beat
    the lower goal's accumulated bound (mode-dependent, see module doc)."""
    if hi not in task.goals or lo not in task.goals:
        raise ValueError("preference pair must name two task goals")
    if task.goals.index(hi) >= task.goals.index(lo):
        raise ValueError("first goal of the pair must be preferred to the second")
    lhs = mdp.gamma**task.deadline * mdp.reward[hi]
    rhs = _preference_rhs(mdp.gamma, task.deadline, mdp.reward[lo], mode)
    return ConditionResult(
        condition=PREFERENCE_PAIR,
        holds=lhs > rhs,
        lhs=lhs,
        rhs=rhs,
        margin=lhs - rhs,
        goal=hi,
        other_goal=lo,
        interpretation=mode,
    )


def check_multi_goal(
    mdp: DeterministicMdp, task: TaskSpec, mode: PreferenceMode = "corrected"
) -> list[ConditionResult]:
    """Premise suite for preference-ordered goals: the least-preferred goal
    passes the sufficient check, and every ordered pair passes the
    preference check. All results are returned; the caller decides on the
    conjunction."""
    if len(task.goals) < 2:
        raise ValueError("multi-goal check needs at least two goals")
    results = [check_sufficient_single(mdp, task, task.goals[-1])]
    for i in range(len(task.goals)):
        for j in range(i + 1, len(task.goals)):
            results.append(
                check_preference_pair(mdp, task, task.goals[i], task.goals[j], mode)
            )
    return results


def synthesize_rewards(
    mdp: DeterministicMdp,
    task: TaskSpec,
    margin_factor: float = 1.05,
    mode: PreferenceMode = "corrected",
) -> SynthesisResult:
    """Assign goal rewards bottom-up so the full premise suite passes.

    The least-preferred goal receives the sufficient-condition bound times
    the margin; each higher goal receives the preference bound computed
    from the already-assigned goal below it, maximized with its own
    sufficient-condition bound, times the margin. Zero bounds get the
    strictly positive floor margin_factor - 1.

    Unreachable goals still receive chain-consistent values (they cannot
    influence deadline-length trajectories, and assigning them keeps the
    premise suite satisfied); only a task with no reachable goal at all is
    rejected.
    """
    if margin_factor <= 1.0:
        raise ValueError("margin must exceed 1")
    if mdp.gamma == 0.0:
        raise InfiniteBoundError("bound infinite: zero discount")
    reach = forward_reachable_set(mdp, task.start, task.deadline)
    if not any(goal_reachable(reach, g, task.deadline) for g in task.goals):
        raise UnreachableGoalError(
            f"no goal is reachable within {task.deadline} steps"
        )

    avoiding = _avoiding_side(mdp, task)
    base_rhs = avoiding[0] if avoiding is not None else 0.0
    sufficient_bound = base_rhs / mdp.gamma**task.deadline

    bounds: dict[int, float] = {}
    rewards: dict[int, float] = {}
    below: Optional[int] = None
    for g in reversed(task.goals):
        if below is None:
            bound = sufficient_bound
        else:
            pair_bound = (
                _preference_rhs(mdp.gamma, task.deadline, rewards[below], mode)
                / mdp.gamma**task.deadline
            )
            bound = max(pair_bound, sufficient_bound)
        bounds[g] = bound
        rewards[g] = bound * margin_factor if bound > 0 else margin_factor - 1.0
        below = g
    return SynthesisResult(
        rewards=rewards, margin_factor=margin_factor, mode=mode, bounds=bounds
    )
