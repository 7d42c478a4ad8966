"""Chain counts against operator semantics and the printed closed form."""

from typing import Any, Dict, List, Tuple

from pydantic import BaseModel

from rbtrees.config import ChainCountConfig, ChainProductConfig, IdentitySource
from rbtrees.core.rewrite import NormalFormEngine
from rbtrees.models import chain_count_formula_report, chain_product_sides

from .base import Check
from .model import identity_rhs


class ChainCountCheck(Check):
    """
    Passes only when enumeration, iterated prefix sums and C(a+m, m) - 1 all
    agree on every row.
    """

    check_type = "chain_count"
    config: ChainCountConfig

    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        report = chain_count_formula_report(self.config.max_a, self.config.max_m)
        disagreements = report.disagreements
        summary = {
            "rows": len(report.rows),
            "operator_consistent": report.operator_consistent,
            "printed_disagreements": [[row.a, row.m] for row in disagreements],
        }
        passed = report.operator_consistent and not disagreements
        return passed, summary, report.model_dump(mode="json")


class ChainProductFailure(BaseModel):
    a: int
    b: int
    m: int
    lhs: str
    rhs: str


class ChainProductReport(BaseModel):
    source: IdentitySource
    max_a: int
    max_b: int
    max_m: int
    checked: int
    failures: List[ChainProductFailure]


def chain_product_report(
    engine: NormalFormEngine, config: ChainProductConfig
) -> ChainProductReport:
    """|chains(a, m)| |chains(b, m)| against the chosen identity for T(a,b,0)."""
    failures = []
    checked = 0
    for a in range(1, config.max_a + 1):
        for b in range(1, config.max_b + 1):
            rhs = identity_rhs(engine, config.source, a, b)
            for m in range(1, config.max_m + 1):
                lhs, total = chain_product_sides(a, b, m, rhs)
                checked += 1
                if lhs != total:
                    failures.append(
                        ChainProductFailure(a=a, b=b, m=m, lhs=str(lhs), rhs=str(total))
                    )
    return ChainProductReport(
        source=config.source,
        max_a=config.max_a,
        max_b=config.max_b,
        max_m=config.max_m,
        checked=checked,
        failures=failures,
    )


class ChainProductCheck(Check):
    """Chain-count products expanded through a tree identity."""

    check_type = "chain_product"
    config: ChainProductConfig

    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        report = chain_product_report(self.engine, self.config)
        summary = {
            "checked": report.checked,
            "failures": [[f.a, f.b, f.m] for f in report.failures],
        }
        return not report.failures, summary, report.model_dump(mode="json")
