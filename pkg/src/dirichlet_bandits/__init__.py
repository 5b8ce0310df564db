"""Exact finite-horizon solvers and verification suites for Dirichlet bandits.

Arms carry Dirichlet process priors over their payoff distributions, written
as finite discrete base measures; after observing x the base measure gains a
unit point mass at x, and the next observation follows the normalized base
measure.  The package evaluates maximum expected payoffs by memoized backward
induction, computes break-even values and break-even observations for the
one-armed problem under regular discounting, and certifies the monotonicity
and convexity structure of these quantities on randomized instances.
"""

from .config import InstanceConfig, load_instance, parse_instance
from .discount import (
    DiscountSeq,
    drop_first,
    is_regular,
    make_discount,
    make_truncated_geometric,
    make_uniform,
)
from .errors import (
    BanditError,
    ConfigError,
    DegenerateHorizonError,
    EmptyMeasureError,
    GeneratorFailedError,
    HorizonTooShortError,
    InvalidParameterError,
    NegativeWeightError,
    NonPositiveDiscountError,
    NotNormalizedError,
    NotRegularError,
    ResourceBudgetExceededError,
    TooLargeError,
)
from .index import (
    IndexResult,
    SweepResult,
    SweepRow,
    break_even_observation,
    break_even_value,
    index_sweep,
    sweep_csv,
)
from .measures import (
    DiscreteMeasure,
    OrderCheckResult,
    leq_cx,
    leq_icx,
    leq_st,
    make_measure,
    mean,
    mean_preserving_spread,
    measure_from_records,
    measure_to_records,
    mix,
    point_mass,
    posterior_update,
    predictive,
    scale,
    scale_locations,
    shift,
    stop_loss,
    to_exact,
    to_float,
)
from .oracle import brute_force_value, brute_force_value_exact, enumerate_strategy_values
from .solver import (
    Action,
    BanditSolver,
    BanditState,
    PolicyNode,
    SolverOptions,
    StateKey,
    ValueReport,
    policy_tree,
    stopping_value,
    value,
    value_one_armed,
)
from .verify import (
    SUITES,
    InstanceGen,
    SuiteReport,
    check_breakeven_bound,
    check_icx_monotonicity,
    check_known_atom_dilution,
    check_mass_smoothing,
    check_monte_carlo,
    check_oracle_equivalence,
    check_reallocation_convexity,
    check_strict_weight_gaps,
    check_weight_monotonicity,
    format_reports,
    run_suites,
    simulate_policy,
)

__version__ = "0.1.0"

__all__ = [
    "Action",
    "BanditError",
    "BanditSolver",
    "BanditState",
    "ConfigError",
    "DegenerateHorizonError",
    "DiscountSeq",
    "DiscreteMeasure",
    "EmptyMeasureError",
    "GeneratorFailedError",
    "HorizonTooShortError",
    "IndexResult",
    "InstanceConfig",
    "InstanceGen",
    "InvalidParameterError",
    "NegativeWeightError",
    "NonPositiveDiscountError",
    "NotNormalizedError",
    "NotRegularError",
    "OrderCheckResult",
    "PolicyNode",
    "ResourceBudgetExceededError",
    "SolverOptions",
    "StateKey",
    "SuiteReport",
    "SweepResult",
    "SweepRow",
    "SUITES",
    "TooLargeError",
    "ValueReport",
    "break_even_observation",
    "break_even_value",
    "brute_force_value",
    "brute_force_value_exact",
    "check_breakeven_bound",
    "check_icx_monotonicity",
    "check_known_atom_dilution",
    "check_mass_smoothing",
    "check_monte_carlo",
    "check_oracle_equivalence",
    "check_reallocation_convexity",
    "check_strict_weight_gaps",
    "check_weight_monotonicity",
    "drop_first",
    "enumerate_strategy_values",
    "format_reports",
    "index_sweep",
    "is_regular",
    "leq_cx",
    "leq_icx",
    "leq_st",
    "load_instance",
    "make_discount",
    "make_measure",
    "make_truncated_geometric",
    "make_uniform",
    "mean",
    "mean_preserving_spread",
    "measure_from_records",
    "measure_to_records",
    "mix",
    "parse_instance",
    "point_mass",
    "policy_tree",
    "posterior_update",
    "predictive",
    "run_suites",
    "scale",
    "scale_locations",
    "shift",
    "simulate_policy",
    "stop_loss",
    "stopping_value",
    "to_exact",
    "to_float",
    "value",
    "value_one_armed",
]
