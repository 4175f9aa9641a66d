"""Command-line front end.

Exit codes: 0 when the checked property holds (conditions pass, goal
certified, all simulated trials succeed), 1 when a condition fails or the
certificate is refuted, 2 for usage or input errors.

Randomized subcommands must be given an explicit --seed when JSON output
is requested, so machine-consumed reports are always reproducible; text
mode defaults to seed 0.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Optional

from .certifier import CERTIFIED, certify, estimate_success
from .guarantees import (
    InfiniteBoundError,
    UnreachableGoalError,
    check_multi_goal,
    check_necessary_dominance,
    check_sufficient_single,
    goal_reward_lower_bound,
    synthesize_rewards,
)
from .gridworld import generate_gridworld
from .planner import PlannerConfig, reseeded, rollout
from .problemfile import ProblemFormatError, parse_problem, serialize_problem
from .reachability import forward_reachable_set
from . import report as rep


def _parse_cell(text: str) -> tuple[int, int]:
    try:
        x, y = text.split(",")
        return int(x), int(y)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a cell like '1,2', got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goalcert",
        description=(
            "Verify, synthesize, simulate, and certify goal-reaching reward "
            "designs for receding-horizon planners on finite deterministic MDPs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, problem: bool = True) -> None:
        if problem:
            sp.add_argument("--problem", required=True, metavar="PATH")
        sp.add_argument("--output", choices=("json", "text"), default="text")

    reach = sub.add_parser("reach", help="forward reachable set and goal arrival steps")
    common(reach)
    reach.add_argument("--horizon", type=int, default=None)
    reach.set_defaults(func=cmd_reach)

    verify = sub.add_parser("verify", help="check the goal-guarantee conditions")
    common(verify)
    verify.add_argument("--mode", choices=("literal", "corrected"), default="corrected")
    verify.set_defaults(func=cmd_verify)

    bound = sub.add_parser("bound", help="exclusive lower bound for a goal reward")
    common(bound)
    bound.add_argument("--goal", default=None, metavar="NAME")
    bound.set_defaults(func=cmd_bound)

    synth = sub.add_parser("synthesize", help="synthesize guaranteed goal rewards")
    common(synth)
    synth.add_argument("--margin", type=float, default=1.05)
    synth.add_argument("--mode", choices=("literal", "corrected"), default="corrected")
    synth.add_argument("--write", default=None, metavar="PATH")
    synth.set_defaults(func=cmd_synthesize)

    sim = sub.add_parser("simulate", help="roll out the planning agent")
    common(sim)
    sim.add_argument("--planner", choices=("exhaustive", "shooting"), default="exhaustive")
    sim.add_argument("--tie-break", choices=("random", "lowest"), default="random")
    sim.add_argument("--samples", type=int, default=100)
    sim.add_argument("--seed", type=int, default=None)
    sim.add_argument("--trials", type=int, default=1)
    sim.set_defaults(func=cmd_simulate)

    cert = sub.add_parser("certify", help="certify goal arrival under every tie-break")
    common(cert)
    cert.set_defaults(func=cmd_certify)

    grid = sub.add_parser("gridworld", help="generate a gridworld problem file")
    common(grid, problem=False)
    grid.add_argument("--width", type=int, required=True)
    grid.add_argument("--height", type=int, required=True)
    grid.add_argument("--walls", type=_parse_cell, nargs="*", default=[])
    grid.add_argument("--start", type=_parse_cell, required=True)
    grid.add_argument("--goals", type=_parse_cell, nargs="+", required=True)
    grid.add_argument("--step-reward", type=float, default=0.0)
    grid.add_argument("--gamma", type=float, default=0.9)
    grid.add_argument("--deadline", type=int, required=True)
    grid.add_argument("--horizon", type=int, default=None)
    grid.add_argument("--out", required=True, metavar="PATH")
    grid.set_defaults(func=cmd_gridworld)

    return parser


def _load(args: argparse.Namespace):
    text = Path(args.problem).read_text(encoding="utf-8")
    return parse_problem(text)


def _emit(args: argparse.Namespace, report: dict[str, Any], lines: list[str]) -> None:
    if args.output == "json":
        sys.stdout.write(rep.render_json(report))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_reach(args: argparse.Namespace) -> int:
    mdp, task = _load(args)
    horizon = task.deadline if args.horizon is None else args.horizon
    if horizon < task.deadline:
        print(
            f"error: horizon {horizon} below deadline {task.deadline}",
            file=sys.stderr,
        )
        return 2
    reach = forward_reachable_set(mdp, task.start, horizon)
    payload = rep.reach_payload(mdp, task, reach)
    report = rep.envelope("reach", mdp, task) | payload
    lines = rep.problem_lines(mdp, task)
    lines.append(f"reachable within {horizon} step(s):")
    for entry in payload["reachable"]:
        lines.append(f"  {entry['state']}: earliest step {entry['earliest_step']}")
    for entry in payload["goals"]:
        verdict = "PASS" if entry["within_deadline"] else "FAIL"
        step = entry["earliest_step"]
        detail = f"earliest step {step}" if step is not None else "not reachable"
        lines.append(
            f"REACHABLE goal={entry['goal']}: {verdict} "
            f"({detail}, deadline {task.deadline})"
        )
    _emit(args, report, lines)
    return 0 if any(e["within_deadline"] for e in payload["goals"]) else 1


def cmd_verify(args: argparse.Namespace) -> int:
    mdp, task = _load(args)
    reach = forward_reachable_set(mdp, task.start, task.deadline)

    result_dicts: list[dict[str, Any]] = []
    lines = rep.problem_lines(mdp, task)
    lines.append(
        "note: goal-avoiding trajectories enter no goal state; rewards are "
        "collected on entering a state"
    )
    all_hold = True
    for g in task.goals:
        step = reach.earliest_step.get(g)
        ok = step is not None and step <= task.deadline
        all_hold = all_hold and ok
        result_dicts.append(
            {
                "condition": "REACHABLE",
                "holds": ok,
                "goal": mdp.state_names[g],
                "earliest_step": step,
            }
        )
        detail = f"earliest step {step}" if step is not None else "not reachable"
        lines.append(
            f"REACHABLE goal={mdp.state_names[g]}: {'PASS' if ok else 'FAIL'} "
            f"({detail}, deadline {task.deadline})"
        )

    if len(task.goals) == 1:
        suite = [
            check_necessary_dominance(mdp, task, task.goals[0]),
            check_sufficient_single(mdp, task, task.goals[0]),
        ]
    else:
        suite = check_multi_goal(mdp, task, args.mode)
    for res in suite:
        all_hold = all_hold and res.holds
        result_dicts.append(rep.condition_payload(mdp, res))
        lines.extend(rep.condition_lines(mdp, res))

    report = rep.envelope("verify", mdp, task)
    report["interpretation"]["preference_rule"] = args.mode
    report["results"] = result_dicts
    report["overall"] = all_hold
    lines.append(f"overall: {'PASS' if all_hold else 'FAIL'}")
    _emit(args, report, lines)
    return 0 if all_hold else 1


def cmd_bound(args: argparse.Namespace) -> int:
    mdp, task = _load(args)
    goal = task.goals[-1] if args.goal is None else mdp.state_id(args.goal)
    if goal not in task.goals:
        print(f"error: state {args.goal!r} is not a task goal", file=sys.stderr)
        return 2
    value = goal_reward_lower_bound(mdp, task, goal)
    report = rep.envelope("bound", mdp, task) | {
        "goal": mdp.state_names[goal],
        "bound": value,
        "exclusive": True,
    }
    lines = rep.problem_lines(mdp, task)
    lines.append(
        f"goal reward lower bound for {mdp.state_names[goal]}: {value!r} (exclusive)"
    )
    _emit(args, report, lines)
    return 0


def cmd_synthesize(args: argparse.Namespace) -> int:
    mdp, task = _load(args)
    result = synthesize_rewards(mdp, task, margin_factor=args.margin, mode=args.mode)
    applied = mdp.with_rewards(dict(result.rewards))
    if len(task.goals) == 1:
        premises = [check_sufficient_single(applied, task, task.goals[0])]
    else:
        premises = check_multi_goal(applied, task, args.mode)
    all_hold = all(res.holds for res in premises)

    written: Optional[str] = None
    if args.write is not None:
        Path(args.write).write_text(
            serialize_problem(applied, task), encoding="utf-8"
        )
        written = args.write

    report = rep.envelope("synthesize", mdp, task)
    report["interpretation"]["preference_rule"] = args.mode
    report["synthesis"] = rep.synthesis_payload(mdp, result)
    report["premises"] = [rep.condition_payload(applied, res) for res in premises]
    report["overall"] = all_hold
    report["written"] = written

    lines = rep.problem_lines(mdp, task)
    lines.append(
        f"synthesized rewards (margin {result.margin_factor!r}, rule {result.mode}):"
    )
    for g in task.goals:
        lines.append(
            f"  {mdp.state_names[g]}: reward {result.rewards[g]!r} "
            f"(exclusive bound {result.bounds[g]!r})"
        )
    for res in premises:
        lines.extend(rep.condition_lines(applied, res))
    if written is not None:
        lines.append(f"wrote problem file: {written}")
    lines.append(f"overall: {'PASS' if all_hold else 'FAIL'}")
    _emit(args, report, lines)
    return 0 if all_hold else 1


def _simulate_config(args: argparse.Namespace, horizon: int) -> PlannerConfig:
    return PlannerConfig(
        horizon=horizon,
        optimizer="random_shooting" if args.planner == "shooting" else "exhaustive",
        tie_break="lowest_index" if args.tie_break == "lowest" else "random",
        shooting_samples=args.samples,
        seed=0,
    )


def cmd_simulate(args: argparse.Namespace) -> int:
    mdp, task = _load(args)
    config = _simulate_config(args, task.horizon)
    seed = args.seed
    if seed is None:
        if args.output == "json" and config.randomized:
            print(
                "error: --seed is required for randomized simulation with "
                "--output json",
                file=sys.stderr,
            )
            return 2
        seed = 0
    if args.trials < 1:
        print("error: --trials must be positive", file=sys.stderr)
        return 2

    estimate = estimate_success(mdp, task, config, args.trials, base_seed=seed)
    records = []
    if args.trials <= 10:
        records = [
            rollout(mdp, task, reseeded(config, seed + i)) for i in range(args.trials)
        ]

    report = rep.envelope("simulate", mdp, task)
    report["config"] = {
        "planner": args.planner,
        "tie_break": args.tie_break,
        "samples": args.samples,
        "base_seed": seed,
        "horizon": task.horizon,
    }
    report["estimate"] = rep.estimate_payload(estimate)
    report["rollouts"] = [rep.rollout_payload(mdp, r) for r in records]

    lines = rep.problem_lines(mdp, task)
    lines.append(
        f"planner={args.planner} tie_break={args.tie_break} "
        f"samples={args.samples} base_seed={seed}"
    )
    lines.append(
        f"success frequency: {estimate.frequency!r} "
        f"({estimate.successes}/{estimate.trials})"
    )
    for r in records:
        path = " -> ".join(mdp.state_names[s] for s in r.visited) or "(no step)"
        hit = (
            f"hit {mdp.state_names[r.first_goal_hit[0]]} at step {r.first_goal_hit[1]}"
            if r.first_goal_hit
            else "no goal hit"
        )
        lines.append(
            f"  seed {r.seed}: {path} [{hit}] "
            f"{'success' if r.success else 'failure'}"
        )
    _emit(args, report, lines)
    return 0 if estimate.frequency == 1.0 else 1


def cmd_certify(args: argparse.Namespace) -> int:
    mdp, task = _load(args)
    cert = certify(mdp, task)
    report = rep.envelope("certify", mdp, task) | rep.certificate_payload(mdp, cert)
    lines = rep.problem_lines(mdp, task) + rep.certificate_lines(mdp, cert)
    _emit(args, report, lines)
    return 0 if cert.verdict == CERTIFIED else 1


def cmd_gridworld(args: argparse.Namespace) -> int:
    mdp, task = generate_gridworld(
        width=args.width,
        height=args.height,
        walls=args.walls,
        start=args.start,
        goals=args.goals,
        step_reward=args.step_reward,
        gamma=args.gamma,
        deadline=args.deadline,
        horizon=args.horizon,
    )
    Path(args.out).write_text(serialize_problem(mdp, task), encoding="utf-8")
    report = rep.envelope("gridworld", mdp, task) | {"written": args.out}
    lines = rep.problem_lines(mdp, task) + [f"wrote problem file: {args.out}"]
    _emit(args, report, lines)
    return 0


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnreachableGoalError, InfiniteBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
