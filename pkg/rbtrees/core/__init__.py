"""Core kernel: rewriting, closed forms, validation and execution."""

from .closed_form import (
    COEFFICIENTS,
    DomainPoint,
    MoveCounts,
    coefficient_from_moves,
    enumerate_domain,
    generic_identity,
    generic_identity_sums,
    in_domain,
    multinomial,
    restricted_identity,
    solve_move_counts,
)
from .executor import GridExecutor, SweepExecutor, SweepResult
from .rewrite import (
    NormalFormEngine,
    coefficient_sum,
    delannoy,
    expand_step,
    get_engine,
    neck_shift,
    normal_form,
    normal_form_naive,
)
from .validator import DiscrepancyReport, Mismatch, compare_cell, validate, validate_async

# CheckFactory lives in rbtrees.core.builder; it imports rbtrees.checks, which
# imports this package, so it is not re-exported here.

__all__ = [
    "COEFFICIENTS",
    "DomainPoint",
    "MoveCounts",
    "coefficient_from_moves",
    "enumerate_domain",
    "generic_identity",
    "generic_identity_sums",
    "in_domain",
    "multinomial",
    "restricted_identity",
    "solve_move_counts",
    "GridExecutor",
    "SweepExecutor",
    "SweepResult",
    "NormalFormEngine",
    "coefficient_sum",
    "delannoy",
    "expand_step",
    "get_engine",
    "neck_shift",
    "normal_form",
    "normal_form_naive",
    "DiscrepancyReport",
    "Mismatch",
    "compare_cell",
    "validate",
    "validate_async",
]
