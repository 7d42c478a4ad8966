"""Simplex kernels of iterated integration."""

from fractions import Fraction
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel

from rbtrees.config import KernelConfig
from rbtrees.models import (
    RationalPolynomial,
    double_integral_check,
    kernel_representation_check,
    simplex_volume,
)

from .base import Check


def sample_points(count: int) -> List[Fraction]:
    """The first count distinct values k / (1 + k mod 3), k = 1, 2, ..."""
    points: Dict[Fraction, None] = {}
    k = 1
    while len(points) < count:
        points.setdefault(Fraction(k, 1 + k % 3))
        k += 1
    return list(points)


class KernelReport(BaseModel):
    representation_failures: List[Tuple[int, int]]
    normalization_failures: List[int]
    double_integral_failures: List[Tuple[int, int, int]]
    checked: int

    @property
    def passed(self) -> bool:
        return not (
            self.representation_failures
            or self.normalization_failures
            or self.double_integral_failures
        )


def kernel_check(config: KernelConfig) -> KernelReport:
    """
    Representation of P^(a+1) by v_a at sampled points, the a! normalization
    of v_a, and the weight-0 double-integral product rule with g = 1 + x.
    """
    samples = sample_points(config.samples)
    g = RationalPolynomial([1, 1])
    representation, double = [], []
    checked = 0
    for a in range(config.max_a + 1):
        for d in config.degrees:
            f = RationalPolynomial.monomial(1, d)
            if not kernel_representation_check(a, f, samples):
                representation.append((a, d))
            checked += 1
            for b in range(config.max_a + 1):
                if not double_integral_check(a, b, f, g):
                    double.append((a, b, d))
                checked += 1
    normalization = []
    for a in range(config.normalization_max_a + 1):
        kernel = simplex_volume(a)
        if kernel.total_degree != a or not kernel.is_normalized(a):
            normalization.append(a)
        checked += 1
    return KernelReport(
        representation_failures=representation,
        normalization_failures=normalization,
        double_integral_failures=double,
        checked=checked,
    )


class KernelCheck(Check):
    check_type = "kernel"
    config: KernelConfig

    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        report = kernel_check(self.config)
        summary = {
            "checked": report.checked,
            "representation_failures": len(report.representation_failures),
            "normalization_failures": len(report.normalization_failures),
            "double_integral_failures": len(report.double_integral_failures),
        }
        return report.passed, summary, report.model_dump(mode="json")
