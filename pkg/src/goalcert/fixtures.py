"""Small hand-built problem instances used throughout the test suite."""
from __future__ import annotations

from .mdp import DeterministicMdp, TaskSpec


def chain3(goal_reward: float = 3.0) -> tuple[DeterministicMdp, TaskSpec]:
    """Three-state chain A -> B -> G with a stay action at every state."""
    mdp = DeterministicMdp(
        state_names=("A", "B", "G"),
        action_names=("stay", "fwd"),
        transition=((0, 1), (1, 2), (2, 2)),
        reward=(0.0, 1.0, float(goal_reward)),
        gamma=0.9,
    )
    task = TaskSpec(start=0, goals=(2,), deadline=2, horizon=2)
    return mdp, task


def decoy(goal_reward: float = 3.0) -> tuple[DeterministicMdp, TaskSpec]:
    """The chain with a large reward parked on the intermediate state."""
    mdp, task = chain3(goal_reward)
    return mdp.with_rewards({1: 10.0}), task


def twogoal(
    first_reward: float = 2.5, second_reward: float = 1.0
) -> tuple[DeterministicMdp, TaskSpec]:
    """Two absorbing goals: G1 (preferred, two steps away) and G2 (one step)."""
    mdp = DeterministicMdp(
        state_names=("A", "B", "G1", "G2"),
        action_names=("a1", "a2"),
        transition=((3, 1), (1, 2), (2, 2), (3, 3)),
        reward=(0.0, 0.0, float(first_reward), float(second_reward)),
        gamma=0.9,
    )
    task = TaskSpec(start=0, goals=(2, 3), deadline=2, horizon=2)
    return mdp, task
