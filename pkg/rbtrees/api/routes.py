"""API route handlers."""

import json
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

from fastapi import APIRouter, Depends, HTTPException
from pydantic import ValidationError

from rbtrees import __version__
from rbtrees.config import ChainCountConfig, Settings, SweepConfig, VerifyConfig, get_settings
from rbtrees.core import (
    NormalFormEngine,
    SweepExecutor,
    generic_identity_sums,
    get_engine,
    restricted_identity,
    validate_async,
)
from rbtrees.core.builder import CheckFactory
from rbtrees.errors import CapExceededError
from rbtrees.models import ChainCountReport, chain_count_formula_report
from rbtrees.terms import Combination, Tree
from rbtrees.api.models import (
    ClosedFormRequest,
    ClosedFormResponse,
    ExpandRequest,
    ExpandResponse,
    HealthResponse,
    SweepRunRequest,
    combination_to_wire,
)

logger = logging.getLogger(__name__)

router = APIRouter()


def get_engine_dependency() -> NormalFormEngine:
    """The shared engine; overridable in tests."""
    return get_engine()


@contextmanager
def http_errors() -> Iterator[None]:
    """Map domain errors to HTTP status codes."""
    try:
        yield
    except CapExceededError as e:
        raise HTTPException(status_code=413, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/health", response_model=HealthResponse)
async def health_check(
    engine: NormalFormEngine = Depends(get_engine_dependency),
) -> HealthResponse:
    """Check API health."""
    return HealthResponse(
        status="healthy", version=__version__, memo_table_entries=engine.table_size
    )


@router.post("/expand", response_model=ExpandResponse)
async def expand(
    request: ExpandRequest,
    engine: NormalFormEngine = Depends(get_engine_dependency),
) -> ExpandResponse:
    """Normal form of T(a,b,c)."""
    start_time = time.perf_counter()
    with http_errors():
        tree = Tree(request.a, request.b, request.c)
        if request.naive:
            result = engine.normal_form_naive(tree)
        else:
            result = engine.normal_form(tree)
    elapsed_ms = (time.perf_counter() - start_time) * 1000
    return ExpandResponse(
        tree=tree.as_tuple(),
        method="naive" if request.naive else "memoized",
        terms=len(result),
        normal_form=combination_to_wire(result),
        took_ms=elapsed_ms,
    )


@router.post("/closed-form", response_model=ClosedFormResponse)
async def closed_form(request: ClosedFormRequest) -> ClosedFormResponse:
    """Restricted or generic closed-form identity for T(a,b,c)."""
    with http_errors():
        if request.restricted:
            identity = restricted_identity(request.a, request.b, request.c)
            return ClosedFormResponse(
                tree=(request.a, request.b, request.c),
                mode="restricted",
                terms=len(identity),
                identity=combination_to_wire(identity),
            )
        sums = generic_identity_sums(request.a, request.b, request.c, request.mode)

    identity = Combination()
    for part in sums.values():
        identity = identity + part
    return ClosedFormResponse(
        tree=(request.a, request.b, request.c),
        mode=request.mode.value,
        terms=len(identity),
        identity=combination_to_wire(identity),
        sums=(
            {name.value: combination_to_wire(part) for name, part in sums.items()}
            if request.include_sums
            else None
        ),
    )


@router.post("/verify")
async def verify(
    request: VerifyConfig,
    engine: NormalFormEngine = Depends(get_engine_dependency),
    settings: Settings = Depends(get_settings),
) -> Dict[str, Any]:
    """
    Validate a closed form against the oracle over a grid.

    Returns the discrepancy report; an empty mismatch list means the closed
    form agrees everywhere.
    """
    with http_errors():
        report = await validate_async(
            request.max_a,
            request.max_b,
            mode=request.mode,
            lambda_zero=request.lambda_zero,
            engine=engine,
            jobs=settings.default_jobs,
            max_c=request.max_c,
        )
    return json.loads(report.to_json())


@router.post("/count", response_model=ChainCountReport)
async def count(
    request: ChainCountConfig,
    settings: Settings = Depends(get_settings),
) -> ChainCountReport:
    """Chain-count formula report."""
    with http_errors():
        return chain_count_formula_report(
            request.max_a, request.max_m, cap=settings.max_chain_enumeration
        )


@router.get("/sweeps", response_model=List[SweepConfig])
async def list_sweeps(
    settings: Settings = Depends(get_settings),
) -> List[SweepConfig]:
    """List all stored sweeps."""
    return load_sweeps(settings)


@router.post("/sweeps/run")
async def run_sweep(
    request: SweepRunRequest,
    settings: Settings = Depends(get_settings),
    engine: NormalFormEngine = Depends(get_engine_dependency),
) -> Dict[str, Any]:
    """
    Execute a sweep.

    Either provide sweep_id to load a stored sweep,
    or provide sweep_config to execute an inline sweep.
    """
    if request.sweep_config:
        try:
            sweep = SweepConfig(**request.sweep_config)
        except ValidationError as e:
            raise HTTPException(status_code=400, detail=f"Invalid sweep config: {e}")
    elif request.sweep_id:
        sweep = load_sweep(request.sweep_id, settings)
        if sweep is None:
            raise HTTPException(status_code=404, detail=f"Sweep not found: {request.sweep_id}")
    else:
        raise HTTPException(
            status_code=400,
            detail="Either sweep_id or sweep_config must be provided",
        )

    executor = SweepExecutor(CheckFactory(engine, request.jobs))
    with http_errors():
        result = await executor.execute(sweep, only=request.only)
    return result.to_dict()


def load_sweeps(settings: Settings) -> List[SweepConfig]:
    """Every readable sweep file, sorted by file name."""
    sweeps = []
    config_path = Path(settings.sweep_config_path)
    if config_path.exists():
        for config_file in sorted(config_path.glob("*.json")):
            try:
                with open(config_file) as f:
                    sweeps.append(SweepConfig(**json.load(f)))
            except (OSError, ValueError) as e:
                logger.warning("Skipping sweep file %s: %s", config_file, e)
    return sweeps


def load_sweep(sweep_id: str, settings: Settings) -> Optional[SweepConfig]:
    """Load a stored sweep by id (the file stem)."""
    file_path = Path(settings.sweep_config_path) / f"{sweep_id}.json"
    if not file_path.exists():
        return None
    try:
        with open(file_path) as f:
            return SweepConfig(**json.load(f))
    except (OSError, ValueError) as e:
        logger.error("Error loading sweep %s: %s", sweep_id, e)
        return None
