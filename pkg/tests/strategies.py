"""Hypothesis strategies for random models and tasks."""
from __future__ import annotations

from hypothesis import strategies as st

from goalcert import DeterministicMdp, TaskSpec

GAMMAS = (0.5, 0.8, 0.9, 0.95, 1.0)


@st.composite
def mdps(draw, max_states: int = 6, max_actions: int = 3, gammas=GAMMAS):
    n = draw(st.integers(2, max_states))
    m = draw(st.integers(1, max_actions))
    transition = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(m)) for _ in range(n)
    )
    reward = tuple(
        draw(st.floats(0, 10, allow_nan=False, allow_infinity=False))
        for _ in range(n)
    )
    gamma = draw(st.sampled_from(gammas))
    return DeterministicMdp(
        state_names=tuple(f"S{i}" for i in range(n)),
        action_names=tuple(f"a{j}" for j in range(m)),
        transition=transition,
        reward=reward,
        gamma=gamma,
    )


@st.composite
def mdp_task_pairs(draw, max_states: int = 6, max_actions: int = 3, max_goals: int = 1):
    mdp = draw(mdps(max_states=max_states, max_actions=max_actions))
    n_goals = draw(st.integers(1, min(max_goals, mdp.n_states - 1)))
    goals = draw(
        st.permutations(range(1, mdp.n_states)).map(lambda p: tuple(p[:n_goals]))
    )
    deadline = draw(st.integers(1, 4))
    return mdp, TaskSpec(start=0, goals=goals, deadline=deadline, horizon=deadline)
