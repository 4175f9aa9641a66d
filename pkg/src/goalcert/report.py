"""Report payload builders shared by the CLI.

Reports come in two shapes: a machine-readable JSON object with stable key
order, and a text rendering that prints each strict inequality with both
sides at full double precision plus the witness trajectories by name, so
the arithmetic can be replayed by hand. Identical inputs (including seeds)
must produce byte-identical output in either mode.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .certifier import Certificate, SuccessEstimate
from .guarantees import ConditionResult, SynthesisResult
from .mdp import DeterministicMdp, TaskSpec
from .planner import RolloutRecord
from .reachability import ReachableSet
from .trajectories import Trajectory

INTERPRETATION_NOTES = {
    "goal_avoiding": "trajectories whose entered states include no goal state",
    "trajectory_rewards": "reward is collected on entering a state; the start "
    "state's own reward is never counted",
}


def problem_summary(mdp: DeterministicMdp, task: TaskSpec) -> dict[str, Any]:
    return {
        "states": mdp.n_states,
        "actions": mdp.n_actions,
        "gamma": mdp.gamma,
        "start": mdp.state_names[task.start],
        "goals": [mdp.state_names[g] for g in task.goals],
        "deadline": task.deadline,
        "horizon": task.horizon,
    }


def envelope(command: str, mdp: DeterministicMdp, task: TaskSpec) -> dict[str, Any]:
    return {
        "tool": {"name": "goalcert", "version": _version()},
        "command": command,
        "problem": problem_summary(mdp, task),
        "interpretation": dict(INTERPRETATION_NOTES),
    }


def _version() -> str:
    from . import __version__

    return __version__


def trajectory_payload(mdp: DeterministicMdp, traj: Trajectory) -> dict[str, Any]:
    return {
        "actions": [mdp.action_names[a] for a in traj.actions],
        "states": [mdp.state_names[s] for s in traj.states],
        "text": traj.render(mdp),
    }


def condition_payload(mdp: DeterministicMdp, res: ConditionResult) -> dict[str, Any]:
    out: dict[str, Any] = {
        "condition": res.condition,
        "holds": res.holds,
        "lhs": res.lhs,
        "rhs": res.rhs,
        "margin": res.margin,
    }
    if res.goal is not None:
        out["goal"] = mdp.state_names[res.goal]
    if res.other_goal is not None:
        out["other_goal"] = mdp.state_names[res.other_goal]
    if res.interpretation is not None:
        out["preference_rule"] = res.interpretation
    out["witness"] = (
        trajectory_payload(mdp, res.witness) if res.witness is not None else None
    )
    out["counter_witness"] = (
        trajectory_payload(mdp, res.counter_witness)
        if res.counter_witness is not None
        else None
    )
    return out


def condition_lines(mdp: DeterministicMdp, res: ConditionResult) -> list[str]:
    verdict = "PASS" if res.holds else "FAIL"
    label = res.condition
    subject = ""
    if res.goal is not None:
        subject = f" goal={mdp.state_names[res.goal]}"
        if res.other_goal is not None:
            subject = (
                f" pair={mdp.state_names[res.goal]}>{mdp.state_names[res.other_goal]}"
            )
    if res.condition == "REACHABLE":
        lines = [f"{label}{subject}: {verdict}"]
    else:
        lhs = "none" if res.lhs is None else repr(res.lhs)
        rhs = "none" if res.rhs is None else repr(res.rhs)
        op = ">" if res.holds else "<="
        detail = f"lhs={lhs} {op} rhs={rhs}"
        if res.margin is not None:
            detail += f" (margin {res.margin!r})"
        if res.interpretation is not None:
            detail += f" [{res.interpretation}]"
        lines = [f"{label}{subject}: {verdict}  {detail}"]
    if res.witness is not None:
        lines.append(f"  witness: {res.witness.render(mdp)}")
    if res.counter_witness is not None:
        lines.append(f"  counter: {res.counter_witness.render(mdp)}")
    return lines


def reach_payload(
    mdp: DeterministicMdp, task: TaskSpec, reach: ReachableSet
) -> dict[str, Any]:
    per_goal = []
    for g in task.goals:
        step = reach.earliest_step.get(g)
        per_goal.append(
            {
                "goal": mdp.state_names[g],
                "earliest_step": step,
                "within_deadline": step is not None and step <= task.deadline,
            }
        )
    members = sorted(
        reach.earliest_step.items(), key=lambda kv: (kv[1], mdp.state_names[kv[0]])
    )
    return {
        "horizon": reach.horizon,
        "reachable": [
            {"state": mdp.state_names[s], "earliest_step": d} for s, d in members
        ],
        "goals": per_goal,
    }


def certificate_payload(mdp: DeterministicMdp, cert: Certificate) -> dict[str, Any]:
    return {
        "verdict": cert.verdict,
        "target": mdp.state_names[cert.target] if cert.target is not None else None,
        "explored_configs": cert.explored_configs,
        "failure_path": [
            {"state": mdp.state_names[s], "action": mdp.action_names[a]}
            for s, a in cert.failure_path
        ]
        if cert.failure_path is not None
        else None,
        "reason": cert.reason,
    }


def certificate_lines(mdp: DeterministicMdp, cert: Certificate) -> list[str]:
    lines = [f"verdict: {cert.verdict}"]
    if cert.target is not None:
        lines.append(f"target: {mdp.state_names[cert.target]}")
    lines.append(f"explored configurations: {cert.explored_configs}")
    if cert.failure_path is not None:
        steps = " ".join(
            f"{mdp.state_names[s]} -{mdp.action_names[a]}->"
            for s, a in cert.failure_path
        )
        final = mdp.state_names[
            mdp.transition[cert.failure_path[-1][0]][cert.failure_path[-1][1]]
        ]
        lines.append(f"failure path: {steps} {final}")
    if cert.reason is not None:
        lines.append(f"reason: {cert.reason}")
    return lines


def rollout_payload(mdp: DeterministicMdp, rec: RolloutRecord) -> dict[str, Any]:
    return {
        "seed": rec.seed,
        "actions": [mdp.action_names[a] for a in rec.actions],
        "visited": [mdp.state_names[s] for s in rec.visited],
        "first_goal_hit": {
            "goal": mdp.state_names[rec.first_goal_hit[0]],
            "step": rec.first_goal_hit[1],
        }
        if rec.first_goal_hit is not None
        else None,
        "success": rec.success,
    }


def estimate_payload(est: SuccessEstimate) -> dict[str, Any]:
    return {
        "trials": est.trials,
        "successes": est.successes,
        "frequency": est.frequency,
    }


def synthesis_payload(
    mdp: DeterministicMdp, result: SynthesisResult
) -> dict[str, Any]:
    return {
        "preference_rule": result.mode,
        "margin_factor": result.margin_factor,
        "rewards": {
            mdp.state_names[g]: result.rewards[g] for g in sorted(result.rewards)
        },
        "bounds": {
            mdp.state_names[g]: result.bounds[g] for g in sorted(result.bounds)
        },
    }


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def problem_lines(mdp: DeterministicMdp, task: TaskSpec) -> list[str]:
    return [
        f"problem: {mdp.n_states} states, {mdp.n_actions} actions, "
        f"gamma={mdp.gamma!r}, deadline={task.deadline}, horizon={task.horizon}",
        f"start: {mdp.state_names[task.start]}  goals: "
        + " > ".join(mdp.state_names[g] for g in task.goals),
    ]
