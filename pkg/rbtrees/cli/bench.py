"""Timing of naive, memoized and closed-form generation along the diagonal a = b."""

import logging
import time
from typing import Callable, List, Optional, Tuple

import pandas as pd

from rbtrees.config import IdentityMode, Settings
from rbtrees.core import NormalFormEngine, generic_identity
from rbtrees.terms import Combination, Tree

logger = logging.getLogger(__name__)


def _best_of(repetitions: int, fn: Callable[[], Combination]) -> Tuple[float, Combination]:
    best = float("inf")
    result = Combination()
    for _ in range(repetitions):
        start = time.perf_counter()
        result = fn()
        best = min(best, (time.perf_counter() - start) * 1000)
    return best, result


def run_bench(max_ab: int, repetitions: int, settings: Settings) -> pd.DataFrame:
    """
    One row per k = 1..max_ab for T(k,k,0).

    Each memoized timing uses a fresh engine, so it includes building the
    path table. The naive columns stop at the naive cap and are left empty
    beyond it.
    """
    if max_ab < 1 or repetitions < 1:
        raise ValueError(f"max_ab and repetitions must be >= 1, got {max_ab}, {repetitions}")
    rows = []
    previous_naive: Optional[float] = None
    for k in range(1, max_ab + 1):
        tree = Tree(k, k, 0)
        memo_ms, memo = _best_of(
            repetitions, lambda: NormalFormEngine.from_settings(settings).normal_form(tree)
        )
        closed_ms, closed = _best_of(
            repetitions, lambda: generic_identity(k, k, 0, IdentityMode.RECONCILED)
        )
        if memo != closed:
            logger.warning("Memoized and closed-form results differ at %s", tree)
        row = {
            "a=b": k,
            "memo_ms": round(memo_ms, 3),
            "memo_terms": len(memo),
            "closed_ms": round(closed_ms, 3),
            "closed_terms": len(closed),
            "agree": memo == closed,
        }
        if 2 * k <= settings.max_naive_sum:
            naive_engine = NormalFormEngine.from_settings(settings)
            naive_ms, naive = _best_of(repetitions, lambda: naive_engine.normal_form_naive(tree))
            row["naive_ms"] = round(naive_ms, 3)
            row["naive_terms"] = len(naive)
            row["naive_growth"] = (
                round(naive_ms / previous_naive, 2) if previous_naive else None
            )
            row["agree"] = row["agree"] and naive == memo
            previous_naive = naive_ms
        rows.append(row)
    columns: List[str] = ["a=b", "naive_ms", "naive_terms", "naive_growth", "memo_ms",
                          "memo_terms", "closed_ms", "closed_terms", "agree"]
    frame = pd.DataFrame.from_records(rows)
    frame = frame.reindex(columns=[c for c in columns if c in frame.columns])
    # counts stay integral when rows past the naive cap leave them empty
    integer_columns = [c for c in ("naive_terms", "memo_terms", "closed_terms") if c in frame]
    return frame.astype({c: "Int64" for c in integer_columns})
