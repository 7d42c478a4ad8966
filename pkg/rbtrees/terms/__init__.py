"""Tree-term algebra: trees, λ-polynomials and formal combinations."""

from .combination import (
    Combination,
    combination_add,
    combination_scale,
    evaluate_lambda,
    lift_constants,
)
from .lambda_poly import LAMBDA, ONE, ZERO, LambdaPoly
from .tree import Tree, is_normal_form

__all__ = [
    "Combination",
    "combination_add",
    "combination_scale",
    "evaluate_lambda",
    "lift_constants",
    "LAMBDA",
    "ONE",
    "ZERO",
    "LambdaPoly",
    "Tree",
    "is_normal_form",
]
