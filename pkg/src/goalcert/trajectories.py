"""Trajectories, discounted returns, and extremal returns over trajectory
classes.

A trajectory of length L is an action sequence applied from an origin
state; its entered states are s_1..s_L and its discounted return is

    sum_{k=1..L} gamma^(k-1) * reward(s_k)

The origin's own reward is never counted. Returns are evaluated by the
backward recurrence ``value = reward(s_k) + gamma * value`` so that the
dynamic programs below and plain per-trajectory evaluation produce
bit-identical doubles; maxima can then be compared exactly against
exhaustive enumeration.

Two trajectory classes matter for goal guarantees: trajectories whose
entered states avoid a given set, and trajectories that enter a target at
least once while avoiding a set. Both extremal returns are computed by
dynamic programming over (state, steps remaining), with a visited flag for
the containing case. Tie-breaking in witness reconstruction always takes
the lowest action index, so witnesses are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import AbstractSet, Iterable, Optional, Sequence

from .mdp import DeterministicMdp

DEFAULT_ENUMERATION_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    """The action-sequence space is too large to enumerate; use the DP."""


@dataclass(frozen=True)
class Trajectory:
    origin: int
    actions: tuple[int, ...]
    states: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.actions) != len(self.states) or not self.actions:
            raise ValueError("trajectory needs one entered state per action")

    @classmethod
    def from_actions(
        cls, mdp: DeterministicMdp, origin: int, actions: Iterable[int]
    ) -> "Trajectory":
        acts = tuple(actions)
        states = []
        s = origin
        for a in acts:
            s = mdp.transition[s][a]
            states.append(s)
        return cls(origin=origin, actions=acts, states=tuple(states))

    def render(self, mdp: DeterministicMdp) -> str:
        parts = [mdp.state_names[self.origin]]
        for a, s in zip(self.actions, self.states):
            parts.append(f"-{mdp.action_names[a]}-> {mdp.state_names[s]}")
        return " ".join(parts)


def successor(mdp: DeterministicMdp, s: int, a: int) -> int:
    return mdp.transition[s][a]


def _return_of_states(mdp: DeterministicMdp, states: Sequence[int]) -> float:
    value = 0.0
    for s in reversed(states):
        value = mdp.reward[s] + mdp.gamma * value
    return value


def discounted_return(mdp: DeterministicMdp, traj: Trajectory) -> float:
    return _return_of_states(mdp, traj.states)


def enumerate_returns(
    mdp: DeterministicMdp,
    origin: int,
    length: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[tuple[tuple[int, ...], float, frozenset[int]]]:
    """Every action sequence of exactly ``length`` steps with its return and
    the set of states it enters. Brute force; the oracle for the DPs."""
    if length < 1:
        raise ValueError("length must be positive")
    if mdp.n_actions**length > cap:
        raise EnumerationCapExceeded(
            f"{mdp.n_actions}^{length} sequences exceed cap {cap}"
        )
    out = []
    for acts in product(range(mdp.n_actions), repeat=length):
        states = []
        s = origin
        for a in acts:
            s = mdp.transition[s][a]
            states.append(s)
        out.append((acts, _return_of_states(mdp, states), frozenset(states)))
    return out


def max_avoiding_return(
    mdp: DeterministicMdp,
    origin: int,
    length: int,
    avoid: AbstractSet[int],
) -> Optional[tuple[float, tuple[int, ...]]]:
    """Maximum return over length-step trajectories entering no state in
    ``avoid``, with a witness. None when every trajectory hits the set.

    Only entered states count, so the origin may itself lie in ``avoid``.
    """
    if length < 1:
        raise ValueError("length must be positive")
    n = mdp.n_states
    # best[s] = max return with d steps remaining from s, None = infeasible
    best: list[Optional[float]] = [0.0] * n
    layers = [best]
    for _ in range(length):
        prev = layers[-1]
        cur: list[Optional[float]] = [None] * n
        for s in range(n):
            top: Optional[float] = None
            for a in range(mdp.n_actions):
                nxt = mdp.transition[s][a]
                if nxt in avoid or prev[nxt] is None:
                    continue
                v = mdp.reward[nxt] + mdp.gamma * prev[nxt]
                if top is None or v > top:
                    top = v
            cur[s] = top
        layers.append(cur)

    if layers[length][origin] is None:
        return None
    actions = []
    s = origin
    for d in range(length, 0, -1):
        target_value = layers[d][s]
        for a in range(mdp.n_actions):
            nxt = mdp.transition[s][a]
            if nxt in avoid or layers[d - 1][nxt] is None:
                continue
            if mdp.reward[nxt] + mdp.gamma * layers[d - 1][nxt] == target_value:
                actions.append(a)
                s = nxt
                break
    value = layers[length][origin]
    assert value is not None and len(actions) == length
    return value, tuple(actions)


def max_containing_return(
    mdp: DeterministicMdp,
    origin: int,
    length: int,
    target: int,
    avoid: AbstractSet[int],
) -> Optional[tuple[float, tuple[int, ...]]]:
    """Maximum return over length-step trajectories that enter ``target`` at
    least once and never enter ``avoid``. None when no such trajectory."""
    if length < 1:
        raise ValueError("length must be positive")
    if target in avoid:
        raise ValueError("target cannot be in the avoid set")
    n = mdp.n_states
    # best[s][hit] with d steps remaining; hit = target already entered
    base: list[list[Optional[float]]] = [[None, 0.0] for _ in range(n)]
    layers = [base]
    for _ in range(length):
        prev = layers[-1]
        cur: list[list[Optional[float]]] = [[None, None] for _ in range(n)]
        for s in range(n):
            for hit in (0, 1):
                top: Optional[float] = None
                for a in range(mdp.n_actions):
                    nxt = mdp.transition[s][a]
                    if nxt in avoid:
                        continue
                    nhit = 1 if (hit or nxt == target) else 0
                    tail = prev[nxt][nhit]
                    if tail is None:
                        continue
                    v = mdp.reward[nxt] + mdp.gamma * tail
                    if top is None or v > top:
                        top = v
                cur[s][hit] = top
        layers.append(cur)

    if layers[length][origin][0] is None:
        return None
    actions = []
    s, hit = origin, 0
    for d in range(length, 0, -1):
        target_value = layers[d][s][hit]
        for a in range(mdp.n_actions):
            nxt = mdp.transition[s][a]
            if nxt in avoid:
                continue
            nhit = 1 if (hit or nxt == target) else 0
            tail = layers[d - 1][nxt][nhit]
            if tail is None:
                continue
            if mdp.reward[nxt] + mdp.gamma * tail == target_value:
                actions.append(a)
                s, hit = nxt, nhit
                break
    value = layers[length][origin][0]
    assert value is not None and len(actions) == length
    return value, tuple(actions)
