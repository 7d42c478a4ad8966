"""API request and response models, shared with the CLI json output."""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from rbtrees.config import IdentityMode
from rbtrees.terms import Combination, LambdaPoly, Tree


class CombinationEntry(BaseModel):
    """One tree of a combination with its λ-polynomial coefficient."""

    tree: Tuple[int, int, int] = Field(description="Tree key [a, b, c]")
    coeff: List[Tuple[int, str]] = Field(
        description="[[exponent, decimal string], ...] by ascending exponent"
    )


def combination_to_wire(u: Combination) -> List[CombinationEntry]:
    """Entries sorted by tree key."""
    return [CombinationEntry(tree=t.as_tuple(), coeff=p.to_wire()) for t, p in u.items()]


def combination_from_wire(entries: List[CombinationEntry]) -> Combination:
    return Combination.from_terms(
        (Tree(*entry.tree), LambdaPoly.from_wire(entry.coeff)) for entry in entries
    )


class ExpandRequest(BaseModel):
    """Request to normalize T(a,b,c)."""

    a: int = Field(ge=0)
    b: int = Field(ge=0)
    c: int = Field(default=0, ge=0)
    naive: bool = Field(default=False, description="Use the replace-until-fixpoint oracle")


class ExpandResponse(BaseModel):
    tree: Tuple[int, int, int]
    method: str
    terms: int
    normal_form: List[CombinationEntry]
    took_ms: float


class ClosedFormRequest(BaseModel):
    """Request to generate a closed-form identity for T(a,b,c)."""

    a: int = Field(ge=1)
    b: int = Field(ge=1)
    c: int = Field(default=0, ge=0)
    mode: IdentityMode = Field(default=IdentityMode.RECONCILED)
    restricted: bool = Field(default=False, description="Weight-0 identity instead")
    include_sums: bool = Field(default=False, description="Also return each of the five sums")


class ClosedFormResponse(BaseModel):
    tree: Tuple[int, int, int]
    mode: str
    terms: int
    identity: List[CombinationEntry]
    sums: Optional[Dict[str, List[CombinationEntry]]] = None


class SweepRunRequest(BaseModel):
    """Run a stored sweep by id, or an inline sweep configuration."""

    sweep_id: Optional[str] = Field(default=None, description="Stored sweep to run")
    sweep_config: Optional[Dict[str, Any]] = Field(
        default=None, description="Inline sweep configuration"
    )
    only: Optional[List[str]] = Field(default=None, description="Restrict to these check names")
    jobs: int = Field(default=1, ge=1)


class HealthResponse(BaseModel):
    """Health check response."""

    status: str
    version: str
    memo_table_entries: int
