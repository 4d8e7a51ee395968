"""Budgeted matroid independent set: approximation scheme and exact oracles."""

from bmi._core import (
    DomainError,
    Error,
    Instance,
    InvariantViolation,
    PreconditionError,
    ScaleCapError,
    ValidationError,
    approximate,
    brute_force,
    check_axioms,
    find_rep,
    knapsack_dp,
    lp_upper_bound,
    solve_lp,
)

__all__ = [
    "DomainError",
    "Error",
    "Instance",
    "InvariantViolation",
    "PreconditionError",
    "ScaleCapError",
    "ValidationError",
    "approximate",
    "brute_force",
    "check_axioms",
    "find_rep",
    "knapsack_dp",
    "lp_upper_bound",
    "solve_lp",
]
