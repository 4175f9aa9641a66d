"""goalcert: guarantee and certify goal arrival for receding-horizon planners
on finite deterministic MDPs, by checking reward-dominance conditions,
synthesizing goal rewards above exact lower bounds, and exhaustively
exploring planner tie-breaking."""

from .certifier import (
    CERTIFIED,
    NOT_APPLICABLE,
    REFUTED,
    Certificate,
    SuccessEstimate,
    certify,
    estimate_success,
    find_counterexample,
)
from .fixtures import chain3, decoy, twogoal
from .gridworld import generate_gridworld
from .guarantees import (
    NECESSARY_DOMINANCE,
    PREFERENCE_PAIR,
    REACHABLE,
    SUFFICIENT_SINGLE,
    ConditionResult,
    InfiniteBoundError,
    SynthesisResult,
    UnreachableGoalError,
    check_multi_goal,
    check_necessary_dominance,
    check_preference_pair,
    check_reachable,
    check_sufficient_single,
    goal_reward_lower_bound,
    synthesize_rewards,
)
from .mdp import DeterministicMdp, TaskSpec, ValidationReport, validate
from .planner import (
    PlannerConfig,
    RolloutRecord,
    ValueTable,
    optimal_first_actions,
    optimal_value,
    plan_step,
    rollout,
)
from .problemfile import ProblemFormatError, parse_problem, serialize_problem
from .reachability import (
    ReachableSet,
    forward_reachable_set,
    goal_reachable,
    highest_preference_reachable,
)
from .rng import SplitMix64
from .trajectories import (
    EnumerationCapExceeded,
    Trajectory,
    discounted_return,
    enumerate_returns,
    max_avoiding_return,
    max_containing_return,
    successor,
)

__version__ = "0.1.0"
