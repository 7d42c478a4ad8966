"""Rendering of combinations and reports as json, text or latex."""

import json
from typing import Any, Dict, List, Optional

import pandas as pd

from rbtrees.api.models import combination_to_wire
from rbtrees.config import OutputFormat
from rbtrees.terms import ONE, Combination, LambdaPoly, Tree


def dump_json(obj: Any) -> str:
    """Compact JSON with fixed key order; identical input gives identical bytes."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def combination_json(u: Combination) -> str:
    return dump_json([entry.model_dump(mode="json") for entry in combination_to_wire(u)])


def _tree_symbol(tree: Tree, latex: bool, operator_notation: bool) -> str:
    if operator_notation:
        return tree.operator_notation(latex=latex)
    return str(tree)


def _coefficient(coeff: LambdaPoly, latex: bool) -> str:
    if coeff == ONE:
        return ""
    text = coeff.to_latex() if latex else str(coeff)
    if len(coeff.terms()) > 1:
        return f"({text})"
    return text + ("\\," if latex else " ")


def combination_text(
    u: Combination,
    lhs: Optional[Tree] = None,
    latex: bool = False,
    operator_notation: bool = False,
) -> str:
    """'lhs = c1 T(...) + c2 T(...) + ...' in canonical order."""
    if u:
        rhs = " + ".join(
            _coefficient(coeff, latex) + _tree_symbol(tree, latex, operator_notation)
            for tree, coeff in u.items()
        )
    else:
        rhs = "0"
    if lhs is None:
        return rhs
    return f"{_tree_symbol(lhs, latex, operator_notation)} = {rhs}"


def render_combination(
    u: Combination,
    fmt: OutputFormat,
    lhs: Optional[Tree] = None,
    operator_notation: bool = False,
) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return combination_json(u)
    if fmt == OutputFormat.LATEX:
        body = combination_text(u, lhs, latex=True, operator_notation=operator_notation)
        return f"\\[\n{body}\n\\]"
    return combination_text(u, lhs, operator_notation=operator_notation)


def latex_table(frame: pd.DataFrame) -> str:
    """A plain tabular environment."""
    header = " & ".join(str(c).replace("_", r"\_") for c in frame.columns)
    rows = [" & ".join(str(v) for v in row) + r" \\" for row in frame.itertuples(index=False)]
    spec = "r" * len(frame.columns)
    lines = [f"\\begin{{tabular}}{{{spec}}}", header + r" \\", r"\hline", *rows, r"\end{tabular}"]
    return "\n".join(lines)


def render_table(
    records: List[Dict[str, Any]],
    fmt: OutputFormat,
    payload: Any = None,
    title: str = "",
    frame: Optional[pd.DataFrame] = None,
) -> str:
    """
    Tabular output. json dumps payload (or the records when no payload is
    given); text and latex render frame, or the records when no frame is given.
    """
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return dump_json(records if payload is None else payload)
    if frame is None:
        frame = pd.DataFrame.from_records(records)
    if fmt == OutputFormat.LATEX:
        return "% no rows" if frame.empty else latex_table(frame)
    body = "(no rows)" if frame.empty else frame.to_string(index=False)
    return f"{title}\n{body}" if title else body
