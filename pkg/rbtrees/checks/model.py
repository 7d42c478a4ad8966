"""Tree identities and the Rota-Baxter law inside concrete models."""

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from rbtrees.config import (
    IdentityMode,
    IdentitySource,
    ModelCheckConfig,
    ModelKind,
    RotaBaxterLawConfig,
)
from rbtrees.core.closed_form import generic_identity, restricted_identity
from rbtrees.core.executor import GridExecutor
from rbtrees.core.rewrite import NormalFormEngine, get_engine
from rbtrees.models import RotaBaxterModel, create_model
from rbtrees.terms import Combination, Tree

from .base import Check

logger = logging.getLogger(__name__)

MAX_INPUT_DEGREE = 4


class ModelFailure(BaseModel):
    """One grid cell and trial where the two sides disagree."""

    a: int
    b: int
    trial: int
    f: List[str]
    g: List[str]


class ModelCheckReport(BaseModel):
    model: ModelKind
    source: IdentitySource
    grid: Tuple[int, int]
    trials: int
    seed: int
    cells: int
    failures: List[ModelFailure]

    @property
    def passed(self) -> bool:
        return not self.failures


def identity_rhs(
    engine: NormalFormEngine, source: IdentitySource, a: int, b: int, c: int = 0
) -> Combination:
    """Right-hand side for T(a,b,c) from the chosen source."""
    source = IdentitySource(source)
    if source == IdentitySource.NORMAL_FORM:
        return engine.normal_form(Tree(a, b, c))
    if source == IdentitySource.RESTRICTED:
        return restricted_identity(a, b, c)
    return generic_identity(a, b, c, IdentityMode(source.value))


def model_for_cell(kind: ModelKind, a: int, b: int) -> RotaBaxterModel:
    """Model with inputs sized for T(a,b,0): degree <= 4, or horizon 2(a+b)+4."""
    if kind == ModelKind.SUM:
        return create_model(kind, {"horizon": 2 * (a + b) + 4})
    return create_model(kind, {"max_degree": MAX_INPUT_DEGREE})


def _check_cell(
    engine: NormalFormEngine,
    kind: ModelKind,
    source: IdentitySource,
    trials: int,
    seed: int,
    a: int,
    b: int,
) -> List[ModelFailure]:
    model = model_for_cell(kind, a, b)
    lhs = Tree(a, b, 0)
    rhs = identity_rhs(engine, source, a, b)
    failures = []
    for trial in range(trials):
        # one stream per (cell, trial), independent of how cells are scheduled
        rng = np.random.default_rng([seed, a, b, trial])
        f = model.random_element(rng)
        g = model.random_element(rng)
        if not model.check_combination(lhs, rhs, f, g):
            failures.append(
                ModelFailure(a=a, b=b, trial=trial, f=model.describe(f), g=model.describe(g))
            )
    return failures


def _cells(max_a: int, max_b: int) -> List[Tuple[int, int]]:
    if max_a < 1 or max_b < 1:
        raise ValueError(f"grid bounds must be >= 1, got ({max_a}, {max_b})")
    return [(a, b) for a in range(1, max_a + 1) for b in range(1, max_b + 1)]


def _assemble(config: ModelCheckConfig, cells: int, per_cell) -> ModelCheckReport:
    failures = [failure for cell in per_cell for failure in cell]
    logger.info(
        "Model check %s/%s over %dx%d: %d failures",
        config.model.value, config.source.value, config.max_a, config.max_b, len(failures),
    )
    return ModelCheckReport(
        model=config.model,
        source=config.source,
        grid=(config.max_a, config.max_b),
        trials=config.trials,
        seed=config.seed,
        cells=cells,
        failures=failures,
    )


def model_check(
    config: ModelCheckConfig, engine: Optional[NormalFormEngine] = None, jobs: int = 1
) -> ModelCheckReport:
    """Check T(a,b,0) = rhs in a model for every cell of the grid and every trial."""
    engine = engine or get_engine()
    cells = _cells(config.max_a, config.max_b)
    per_cell = GridExecutor(jobs).map(
        lambda a, b: _check_cell(
            engine, config.model, config.source, config.trials, config.seed, a, b
        ),
        cells,
    )
    return _assemble(config, len(cells), per_cell)


async def model_check_async(
    config: ModelCheckConfig, engine: Optional[NormalFormEngine] = None, jobs: int = 1
) -> ModelCheckReport:
    engine = engine or get_engine()
    cells = _cells(config.max_a, config.max_b)
    per_cell = await GridExecutor(jobs).gather(
        lambda a, b: _check_cell(
            engine, config.model, config.source, config.trials, config.seed, a, b
        ),
        cells,
    )
    return _assemble(config, len(cells), per_cell)


class LawReport(BaseModel):
    """Random-pair check of P(u)P(v) = P(uP(v)) + P(P(u)v) + weight P(uv)."""

    model: ModelKind
    weight: str
    pairs: int
    failures: int


def rota_baxter_law_check(config: RotaBaxterLawConfig) -> LawReport:
    model = create_model(
        config.model, {"max_degree": config.max_degree, "horizon": config.horizon}
    )
    rng = np.random.default_rng(config.seed)
    failures = 0
    for _ in range(config.pairs):
        u = model.random_element(rng)
        v = model.random_element(rng)
        if not model.check_rota_baxter_law(u, v):
            failures += 1
    return LawReport(
        model=config.model, weight=str(model.weight), pairs=config.pairs, failures=failures
    )


class ModelCheck(Check):
    """Identity check inside a concrete model."""

    check_type = "model_check"
    config: ModelCheckConfig

    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        report = await model_check_async(self.config, self.engine, self.jobs)
        summary = {
            "model": report.model.value,
            "source": report.source.value,
            "cells": report.cells,
            "failures": len(report.failures),
        }
        return report.passed, summary, report.model_dump(mode="json")


class RotaBaxterLawCheck(Check):
    """Ground-truth check that a model is a Rota-Baxter algebra."""

    check_type = "rota_baxter_law"
    config: RotaBaxterLawConfig

    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        report = rota_baxter_law_check(self.config)
        summary = {"model": report.model.value, "pairs": report.pairs, "failures": report.failures}
        return report.failures == 0, summary, report.model_dump(mode="json")
