"""Cross-check closed-form identities against the rewrite oracle."""

import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from rbtrees.config import DomainName, IdentityMode
from rbtrees.core.closed_form import generic_identity_sums, restricted_identity
from rbtrees.core.executor import GridExecutor
from rbtrees.core.rewrite import NormalFormEngine, get_engine
from rbtrees.terms import Combination, LambdaPoly, Tree, lift_constants

logger = logging.getLogger(__name__)

RESTRICTED_MODE = "restricted"


class Mismatch(BaseModel):
    """One tree whose formula coefficient differs from the oracle."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True, populate_by_name=True)

    a: int
    b: int
    tree: Tree
    expected: LambdaPoly
    got: LambdaPoly
    source_sum: str = Field(serialization_alias="sum")

    @field_serializer("tree")
    def _serialize_tree(self, tree: Tree) -> List[int]:
        return list(tree.as_tuple())

    @field_serializer("expected", "got")
    def _serialize_coeff(self, coeff: LambdaPoly) -> List[Tuple[int, str]]:
        return coeff.to_wire()

    def sort_key(self) -> Tuple[int, int, Tree]:
        return (self.a, self.b, self.tree)


class ReportSummary(BaseModel):
    """Counts over a validation grid."""

    cells: int
    mismatches: int
    by_sum: Dict[str, int]


class DiscrepancyReport(BaseModel):
    """Term-level differences between a closed form and the oracle over a grid."""

    grid: Tuple[int, int]
    mode: str
    mismatches: List[Mismatch]
    summary: ReportSummary

    @property
    def is_empty(self) -> bool:
        return not self.mismatches

    def sums_with_mismatches(self) -> List[str]:
        return sorted(self.summary.by_sum)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)


def _attribute(
    tree: Tree,
    sums: Dict[DomainName, Combination],
    reference: Dict[DomainName, Combination],
) -> str:
    # sums whose contribution at this tree departs from the oracle-consistent one
    differing = [d.value for d in DomainName if sums[d][tree] != reference[d][tree]]
    if not differing:
        differing = [d.value for d in DomainName if tree in sums[d] or tree in reference[d]]
    return "+".join(differing) or "none"


def _restricted_side(tree: Tree) -> str:
    if tree.a == 0 and tree.b > 0:
        return "left"
    if tree.b == 0 and tree.a > 0:
        return "right"
    return "none"


def _diff(expected: Combination, got: Combination) -> List[Tuple[Tree, LambdaPoly, LambdaPoly]]:
    trees = sorted(set(expected.trees()) | set(got.trees()))
    return [(t, expected[t], got[t]) for t in trees if expected[t] != got[t]]


def compare_cell(
    engine: NormalFormEngine,
    a: int,
    b: int,
    c: int,
    mode: IdentityMode,
    lambda_zero: bool,
) -> List[Mismatch]:
    """All mismatches for one tree T(a,b,c)."""
    oracle = engine.normal_form(Tree(a, b, c))
    mismatches = []
    if lambda_zero:
        expected = lift_constants(oracle.evaluate_lambda(0))
        got = restricted_identity(a, b, c)
        for tree, want, have in _diff(expected, got):
            mismatches.append(
                Mismatch(
                    a=a, b=b, tree=tree, expected=want, got=have,
                    source_sum=_restricted_side(tree),
                )
            )
        return mismatches

    sums = generic_identity_sums(a, b, c, mode)
    reference = sums if mode == IdentityMode.RECONCILED else generic_identity_sums(a, b, c)
    got = Combination()
    for part in sums.values():
        got = got + part
    for tree, want, have in _diff(oracle, got):
        mismatches.append(
            Mismatch(
                a=a, b=b, tree=tree, expected=want, got=have,
                source_sum=_attribute(tree, sums, reference),
            )
        )
    return mismatches


def _cells(a_max: int, b_max: int, max_c: int) -> List[Tuple[int, int, int]]:
    if a_max < 1 or b_max < 1:
        raise ValueError(f"grid bounds must be >= 1, got ({a_max}, {b_max})")
    return [
        (a, b, c)
        for a in range(1, a_max + 1)
        for b in range(1, b_max + 1)
        for c in range(max_c + 1)
    ]


def _assemble(
    a_max: int, b_max: int, mode: str, cells: int, per_cell: List[List[Mismatch]]
) -> DiscrepancyReport:
    mismatches = sorted((m for cell in per_cell for m in cell), key=Mismatch.sort_key)
    by_sum: Dict[str, int] = {}
    for m in mismatches:
        by_sum[m.source_sum] = by_sum.get(m.source_sum, 0) + 1
    report = DiscrepancyReport(
        grid=(a_max, b_max),
        mode=mode,
        mismatches=mismatches,
        summary=ReportSummary(
            cells=cells, mismatches=len(mismatches), by_sum=dict(sorted(by_sum.items()))
        ),
    )
    logger.info("Validated %s over %dx%d: %d mismatches", mode, a_max, b_max, len(mismatches))
    return report


def validate(
    a_max: int,
    b_max: int,
    mode: IdentityMode = IdentityMode.RECONCILED,
    lambda_zero: bool = False,
    engine: Optional[NormalFormEngine] = None,
    jobs: int = 1,
    max_c: int = 0,
) -> DiscrepancyReport:
    """
    Compare the closed form with the oracle for every 1 <= a <= a_max, 1 <= b <= b_max.

    With lambda_zero the restricted identity is compared with the oracle at
    λ = 0; otherwise the generic identity in the given mode is compared in Z[λ].
    """
    engine = engine or get_engine()
    mode = IdentityMode(mode)
    cells = _cells(a_max, b_max, max_c)
    per_cell = GridExecutor(jobs).map(
        lambda a, b, c: compare_cell(engine, a, b, c, mode, lambda_zero), cells
    )
    label = RESTRICTED_MODE if lambda_zero else mode.value
    return _assemble(a_max, b_max, label, len(cells), per_cell)


async def validate_async(
    a_max: int,
    b_max: int,
    mode: IdentityMode = IdentityMode.RECONCILED,
    lambda_zero: bool = False,
    engine: Optional[NormalFormEngine] = None,
    jobs: int = 1,
    max_c: int = 0,
) -> DiscrepancyReport:
    """Same as validate, for callers inside an event loop."""
    engine = engine or get_engine()
    mode = IdentityMode(mode)
    cells = _cells(a_max, b_max, max_c)
    per_cell = await GridExecutor(jobs).gather(
        lambda a, b, c: compare_cell(engine, a, b, c, mode, lambda_zero), cells
    )
    label = RESTRICTED_MODE if lambda_zero else mode.value
    return _assemble(a_max, b_max, label, len(cells), per_cell)
