"""Chain counting: weakly increasing tuples and iterated prefix sums of 1."""

import logging
from itertools import accumulate, combinations_with_replacement
from math import comb
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel, field_serializer

from rbtrees.config import get_settings
from rbtrees.errors import CapExceededError
from rbtrees.terms import Combination

logger = logging.getLogger(__name__)


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


class ChainSet:
    """Tuples (n_1, ..., n_a) with 1 <= n_1 <= ... <= n_a <= m."""

    def __init__(self, a: int, m: int):
        _require_positive(a=a, m=m)
        self.a = a
        self.m = m

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return combinations_with_replacement(range(1, self.m + 1), self.a)

    def cardinality(self, cap: Optional[int] = None) -> int:
        """Size by explicit enumeration; raises CapExceededError past the cap."""
        cap = get_settings().max_chain_enumeration if cap is None else cap
        # the enumeration is the oracle, the binomial only guards the cap
        predicted = comb(self.a + self.m - 1, self.a)
        if predicted > cap:
            raise CapExceededError(f"|chains({self.a}, {self.m})|", predicted, cap)
        return sum(1 for _ in self)


def chain_count(a: int, m: int, cap: Optional[int] = None) -> int:
    """Number of weakly increasing a-tuples in [1, m], by enumeration."""
    return ChainSet(a, m).cardinality(cap)


def iterated_prefix_counts(n_max: int, m: int) -> List[List[int]]:
    """
    rows[n][k] = (P^n 1)(k + 1) for the prefix-sum operator P, n <= n_max.

    Row 0 is the all-ones sequence.
    """
    rows = [[1] * m]
    for _ in range(n_max):
        rows.append(list(accumulate(rows[-1])))
    return rows


def chain_count_prefix(a: int, m: int) -> int:
    """(P^a 1)(m) by iterated prefix sums."""
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    _require_positive(m=m)
    return iterated_prefix_counts(a, m)[a][m - 1]


def vandermonde_sum(a: int, m: int) -> int:
    """sum_{s=1}^{m} C(m, s) C(a, s)."""
    return sum(comb(m, s) * comb(a, s) for s in range(1, m + 1))


def printed_closed_form(a: int, m: int) -> int:
    """C(a+m, m) - 1."""
    return comb(a + m, m) - 1


def multiset_count(a: int, m: int) -> int:
    """C(a+m-1, a), the number of a-multisets from m symbols."""
    return comb(a + m - 1, a)


class ChainCountRow(BaseModel):
    """One (a, m) cell of the chain-count report."""

    a: int
    m: int
    enumerated: int
    prefix_sum: int
    vandermonde_sum: int
    printed_closed_form: int
    multiset_count: int
    operator_agrees: bool
    printed_agrees: bool

    @field_serializer(
        "enumerated", "prefix_sum", "vandermonde_sum", "printed_closed_form", "multiset_count"
    )
    def _serialize_big(self, value: int) -> str:
        return str(value)


class ChainCountReport(BaseModel):
    """Enumeration versus operator semantics versus the printed closed form."""

    max_a: int
    max_m: int
    rows: List[ChainCountRow]

    @property
    def disagreements(self) -> List[ChainCountRow]:
        return [row for row in self.rows if not row.printed_agrees]

    @property
    def operator_consistent(self) -> bool:
        return all(row.operator_agrees for row in self.rows)


def chain_count_formula_report(
    a_max: int, m_max: int, cap: Optional[int] = None
) -> ChainCountReport:
    """Tabulate every (a, m) with 1 <= a <= a_max, 1 <= m <= m_max."""
    _require_positive(a_max=a_max, m_max=m_max)
    table = iterated_prefix_counts(a_max, m_max)
    rows = []
    for a in range(1, a_max + 1):
        for m in range(1, m_max + 1):
            enumerated = chain_count(a, m, cap)
            printed = printed_closed_form(a, m)
            rows.append(
                ChainCountRow(
                    a=a,
                    m=m,
                    enumerated=enumerated,
                    prefix_sum=table[a][m - 1],
                    vandermonde_sum=vandermonde_sum(a, m),
                    printed_closed_form=printed,
                    multiset_count=multiset_count(a, m),
                    operator_agrees=enumerated == table[a][m - 1],
                    printed_agrees=enumerated == printed,
                )
            )
    report = ChainCountReport(max_a=a_max, max_m=m_max, rows=rows)
    logger.info(
        "Chain report %dx%d: %d disagreements with the printed form",
        a_max, m_max, len(report.disagreements),
    )
    return report


def chain_product_sides(a: int, b: int, m: int, rhs: Combination) -> Tuple[int, int]:
    """
    Both sides of |chains(a, m)| |chains(b, m)| = sum of coeff * |chains(p+q+r, m)|.

    rhs is an identity for T(a,b,0) over normal trees T(p,q,r); at f = g = 1
    in the prefix-sum model each such tree evaluates to (P^(p+q+r) 1)(m).
    """
    _require_positive(a=a, b=b, m=m)
    specialized = rhs.evaluate_lambda(-1)
    for tree in specialized:
        if not tree.is_normal_form:
            raise ValueError(f"{tree} is not a normal tree")
    n_max = max([a, b] + [t.degree for t in specialized])
    table = iterated_prefix_counts(n_max, m)
    lhs = table[a][m - 1] * table[b][m - 1]
    total = sum(coeff * table[t.degree][m - 1] for t, coeff in specialized.items())
    return lhs, int(total)


def chain_product_check(a: int, b: int, m: int, rhs: Combination) -> bool:
    """True iff the chain-count product identity holds at m."""
    lhs, total = chain_product_sides(a, b, m, rhs)
    return lhs == total