"""Problem file parsing and serialization.

A problem file is a UTF-8 JSON object with fields:

  version      integer, must be 1
  states       array of distinct state names
  actions      array of distinct action names
  transitions  array of {"from", "action", "to"} name triples,
               exactly one per (state, action) pair
  rewards      object mapping state name -> non-negative number
               (omitted states default to 0)
  gamma        number in [0, 1]
  start        state name
  goals        array of state names, descending preference
  deadline     positive integer
  horizon      optional integer >= deadline (default: deadline)

``parse_problem`` returns a fully validated model; ``serialize_problem``
is its inverse and round-trips exactly.
"""
from __future__ import annotations

import json
from typing import Any

from .mdp import DeterministicMdp, TaskSpec, validate

_FIELDS = {
    "version",
    "states",
    "actions",
    "transitions",
    "rewards",
    "gamma",
    "start",
    "goals",
    "deadline",
    "horizon",
}


class ProblemFormatError(ValueError):
    """Raised when a problem file is syntactically or semantically invalid."""


def _fail(msg: str) -> None:
    raise ProblemFormatError(msg)


def _require_number(value: Any, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(f"{what} must be a number, got {value!r}")
    return float(value)


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{what} must be an integer, got {value!r}")
    return value


def _require_name_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        _fail(f"{what} must be an array of names")
    return value


def parse_problem(text: str) -> tuple[DeterministicMdp, TaskSpec]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(
            f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        _fail("problem file must be a JSON object")

    unknown = sorted(set(doc) - _FIELDS)
    if unknown:
        _fail(f"unknown field(s): {', '.join(unknown)}")
    missing = sorted(_FIELDS - {"horizon"} - set(doc))
    if missing:
        _fail(f"missing field(s): {', '.join(missing)}")

    if _require_int(doc["version"], "version") != 1:
        _fail(f"unsupported version {doc['version']} (expected 1)")

    state_names = _require_name_list(doc["states"], "states")
    action_names = _require_name_list(doc["actions"], "actions")
    for kind, names in (("state", state_names), ("action", action_names)):
        seen: set[str] = set()
        for name in names:
            if name in seen:
                _fail(f"duplicate {kind} name {name!r}")
            seen.add(name)
    if not state_names:
        _fail("at least one state is required")
    if not action_names:
        _fail("at least one action is required")
    sid = {name: i for i, name in enumerate(state_names)}
    aid = {name: i for i, name in enumerate(action_names)}

    if not isinstance(doc["transitions"], list):
        _fail("transitions must be an array")
    table: list[list[int | None]] = [[None] * len(action_names) for _ in state_names]
    for entry in doc["transitions"]:
        if not isinstance(entry, dict) or set(entry) != {"from", "action", "to"}:
            _fail(f"malformed transition entry {entry!r}")
        for key, pool, kind in (
            ("from", sid, "state"),
            ("to", sid, "state"),
            ("action", aid, "action"),
        ):
            if entry[key] not in pool:
                _fail(f"unknown {kind} name {entry[key]!r} in transitions")
        s, a = sid[entry["from"]], aid[entry["action"]]
        if table[s][a] is not None:
            _fail(f"duplicate transition for ({entry['from']}, {entry['action']})")
        table[s][a] = sid[entry["to"]]
    for s, row in enumerate(table):
        for a, nxt in enumerate(row):
            if nxt is None:
                _fail(f"missing transition for ({state_names[s]}, {action_names[a]})")

    if not isinstance(doc["rewards"], dict):
        _fail("rewards must be an object")
    rewards = [0.0] * len(state_names)
    for name, value in doc["rewards"].items():
        if name not in sid:
            _fail(f"unknown state name {name!r} in rewards")
        r = _require_number(value, f"reward of {name!r}")
        if r < 0:
            _fail(f"negative reward {r} for state {name!r}")
        rewards[sid[name]] = r

    gamma = _require_number(doc["gamma"], "gamma")
    if not 0.0 <= gamma <= 1.0:
        _fail(f"gamma {gamma} outside [0, 1]")

    if doc["start"] not in sid:
        _fail(f"unknown state name {doc['start']!r} for start")
    goal_names = _require_name_list(doc["goals"], "goals")
    if not goal_names:
        _fail("at least one goal is required")
    for name in goal_names:
        if name not in sid:
            _fail(f"unknown state name {name!r} in goals")

    deadline = _require_int(doc["deadline"], "deadline")
    if deadline < 1:
        _fail(f"deadline must be positive, got {deadline}")
    horizon = _require_int(doc.get("horizon", deadline), "horizon")

    mdp = DeterministicMdp(
        state_names=tuple(state_names),
        action_names=tuple(action_names),
        transition=tuple(tuple(row) for row in table),  # type: ignore[arg-type]
        reward=tuple(rewards),
        gamma=gamma,
    )
    task = TaskSpec(
        start=sid[doc["start"]],
        goals=tuple(sid[name] for name in goal_names),
        deadline=deadline,
        horizon=horizon,
    )
    report = validate(mdp, task)
    if not report.ok:
        _fail("; ".join(report.errors()))
    return mdp, task


def serialize_problem(mdp: DeterministicMdp, task: TaskSpec) -> str:
    doc = {
        "version": 1,
        "states": list(mdp.state_names),
        "actions": list(mdp.action_names),
        "transitions": [
            {
                "from": mdp.state_names[s],
                "action": mdp.action_names[a],
                "to": mdp.state_names[mdp.transition[s][a]],
            }
            for s in range(mdp.n_states)
            for a in range(mdp.n_actions)
        ],
        "rewards": {mdp.state_names[s]: mdp.reward[s] for s in range(mdp.n_states)},
        "gamma": mdp.gamma,
        "start": mdp.state_names[task.start],
        "goals": [mdp.state_names[g] for g in task.goals],
        "deadline": task.deadline,
        "horizon": task.horizon,
    }
    return json.dumps(doc, indent=2) + "\n"
