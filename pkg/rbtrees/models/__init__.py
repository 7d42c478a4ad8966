"""Concrete Rota-Baxter algebras in which tree identities are checked."""

from typing import Any, Dict, Optional

from rbtrees.config import ModelKind

from .base import RotaBaxterModel
from .counting import (
    ChainCountReport,
    ChainCountRow,
    ChainSet,
    chain_count,
    chain_count_formula_report,
    chain_count_prefix,
    chain_product_check,
    chain_product_sides,
)
from .integral import (
    IntegralModel,
    SimplexKernel,
    check_combination_integral,
    double_integral_check,
    eval_tree_integral,
    integrate_from_zero,
    kernel_apply,
    kernel_representation_check,
    simplex_volume,
)
from .polynomial import RationalPolynomial, format_rational
from .sequence import (
    FiniteSequence,
    SumModel,
    check_combination_sum,
    eval_tree_sum,
    prefix_sum,
)


def create_model(kind: ModelKind, config: Optional[Dict[str, Any]] = None) -> RotaBaxterModel:
    """Model instance for a model kind."""
    if kind == ModelKind.INTEGRAL:
        return IntegralModel(config)
    if kind == ModelKind.SUM:
        return SumModel(config)
    raise ValueError(f"Unknown model: {kind}")


__all__ = [
    "RotaBaxterModel",
    "create_model",
    "ChainCountReport",
    "ChainCountRow",
    "ChainSet",
    "chain_count",
    "chain_count_formula_report",
    "chain_count_prefix",
    "chain_product_check",
    "chain_product_sides",
    "IntegralModel",
    "SimplexKernel",
    "check_combination_integral",
    "double_integral_check",
    "eval_tree_integral",
    "integrate_from_zero",
    "kernel_apply",
    "kernel_representation_check",
    "simplex_volume",
    "RationalPolynomial",
    "format_rational",
    "FiniteSequence",
    "SumModel",
    "check_combination_sum",
    "eval_tree_sum",
    "prefix_sum",
]
