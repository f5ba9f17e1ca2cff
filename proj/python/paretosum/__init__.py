"""Pareto sums of two 2-D Pareto sets."""

from ._core import (
    InvariantError,
    algorithms,
    convex_seed,
    generate,
    minplus,
    minplus_naive,
    pareto_sum,
    range_min,
    reference,
    run,
    validate,
)

__all__ = [
    "InvariantError",
    "algorithms",
    "convex_seed",
    "generate",
    "minplus",
    "minplus_naive",
    "pareto_sum",
    "range_min",
    "reference",
    "run",
    "validate",
]
