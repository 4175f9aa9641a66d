"""Deterministic 4-connected gridworld generator for test instances.

Cells are (x, y) with x in [0, width) and y in [0, height); y grows
downward. Wall cells are excluded from the state set entirely; moving into
a wall or off the grid is a self-loop. Non-goal states all carry the same
step reward, and goal rewards start at 0 so they can be synthesized.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .mdp import DeterministicMdp, TaskSpec

Cell = tuple[int, int]

_MOVES = (("up", 0, -1), ("down", 0, 1), ("left", -1, 0), ("right", 1, 0))


def cell_name(cell: Cell) -> str:
    return f"({cell[0]},{cell[1]})"


def generate_gridworld(
    width: int,
    height: int,
    walls: Iterable[Cell],
    start: Cell,
    goals: Sequence[Cell],
    step_reward: float = 0.0,
    gamma: float = 0.9,
    deadline: int = 1,
    horizon: Optional[int] = None,
) -> tuple[DeterministicMdp, TaskSpec]:
    if width < 1 or height < 1:
        raise ValueError("grid dimensions must be positive")
    if step_reward < 0:
        raise ValueError("step reward must be non-negative")
    wall_set = set(walls)

    def in_bounds(cell: Cell) -> bool:
        return 0 <= cell[0] < width and 0 <= cell[1] < height

    for cell in wall_set:
        if not in_bounds(cell):
            raise ValueError(f"wall cell {cell} out of bounds")
    for label, cell in [("start", start)] + [("goal", g) for g in goals]:
        if not in_bounds(cell):
            raise ValueError(f"{label} cell {cell} out of bounds")
        if cell in wall_set:
            raise ValueError(f"{label} cell {cell} is a wall")
    if not goals:
        raise ValueError("at least one goal cell is required")
    if len(set(goals)) != len(goals):
        raise ValueError("goal cells must be distinct")
    if start in goals:
        raise ValueError("goal equals start")

    cells = [
        (x, y) for y in range(height) for x in range(width) if (x, y) not in wall_set
    ]
    index = {cell: i for i, cell in enumerate(cells)}

    transition = []
    for cell in cells:
        row = []
        for _, dx, dy in _MOVES:
            nxt = (cell[0] + dx, cell[1] + dy)
            if not in_bounds(nxt) or nxt in wall_set:
                nxt = cell
            row.append(index[nxt])
        transition.append(tuple(row))

    goal_ids = set(index[g] for g in goals)
    reward = tuple(
        0.0 if i in goal_ids else float(step_reward) for i in range(len(cells))
    )
    mdp = DeterministicMdp(
        state_names=tuple(cell_name(c) for c in cells),
        action_names=tuple(name for name, _, _ in _MOVES),
        transition=tuple(transition),
        reward=reward,
        gamma=gamma,
    )
    task = TaskSpec(
        start=index[start],
        goals=tuple(index[g] for g in goals),
        deadline=deadline,
        horizon=deadline if horizon is None else horizon,
    )
    return mdp, task
