"""Pseudo-random instance generation for the randomized suites.

All draws go through the package's own SplitMix64 stream so suites are
reproducible bit-for-bit from a fixed seed on any platform.

Two reward regimes are provided:

* "uniform": every state's reward is drawn independently from [0, 10].
  Used for regime-free properties (dynamic programs vs enumeration,
  scale invariance, dominance implied by sufficiency, replay checks).

* "background": all non-goal states share one per-instance constant step
  reward from [0, 10] (zero half the time) and goals are absorbing.
  This is the shape of a goal-seeking task instance (the gridworld
  generator produces exactly this shape), and it is the regime in which
  the window conditions and the fixed-horizon re-planning agent provably
  agree; see tests/test_lookahead_gap.py for why general reward
  landscapes can break that agreement.
"""
from __future__ import annotations

from dataclasses import dataclass

from goalcert import DeterministicMdp, TaskSpec
from goalcert.rng import SplitMix64


@dataclass(frozen=True)
class GeneratedInstance:
    mdp: DeterministicMdp
    task: TaskSpec


def _uniform(rng: SplitMix64, lo: float, hi: float) -> float:
    return lo + (hi - lo) * rng.random()


def random_instance(
    rng: SplitMix64,
    reward_style: str = "uniform",
    n_goals: int = 1,
    absorbing_goals: bool = False,
    min_states: int = 3,
    max_states: int = 8,
    max_actions: int = 4,
    max_deadline: int = 5,
) -> GeneratedInstance:
    n = min_states + rng.randrange(max_states - min_states + 1)
    m = 2 + rng.randrange(max_actions - 1)
    deadline = 1 + rng.randrange(max_deadline)
    gamma = _uniform(rng, 0.6, 0.95)

    start = 0
    goals = []
    pool = list(range(1, n))
    for _ in range(min(n_goals, len(pool))):
        goals.append(pool.pop(rng.randrange(len(pool))))

    transition = []
    for s in range(n):
        if absorbing_goals and s in goals:
            transition.append(tuple(s for _ in range(m)))
        else:
            transition.append(tuple(rng.randrange(n) for _ in range(m)))

    if reward_style == "uniform":
        reward = tuple(_uniform(rng, 0.0, 10.0) for _ in range(n))
    elif reward_style == "background":
        step = 0.0 if rng.randrange(2) == 0 else _uniform(rng, 0.0, 10.0)
        reward = tuple(
            _uniform(rng, 0.0, 10.0) if s in goals else step for s in range(n)
        )
    else:
        raise ValueError(f"unknown reward style {reward_style!r}")

    mdp = DeterministicMdp(
        state_names=tuple(f"S{i}" for i in range(n)),
        action_names=tuple(f"a{j}" for j in range(m)),
        transition=tuple(transition),
        reward=reward,
        gamma=gamma,
    )
    task = TaskSpec(start=start, goals=tuple(goals), deadline=deadline, horizon=deadline)
    return GeneratedInstance(mdp=mdp, task=task)
