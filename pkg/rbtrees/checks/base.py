"""Base classes for composable checks."""

import time
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel

from rbtrees.core.rewrite import NormalFormEngine


class CheckResult(BaseModel):
    """Result from running a check."""

    check_type: str
    name: Optional[str] = None
    passed: bool
    took_ms: Optional[float] = None
    summary: Dict[str, Any] = {}
    report: Dict[str, Any] = {}


class Check(ABC):
    """Base class for all composable checks."""

    check_type: str = "abstract"

    def __init__(self, config: BaseModel, engine: NormalFormEngine, jobs: int = 1):
        """Initialize check with its typed configuration."""
        self.config = config
        self.engine = engine
        self.jobs = jobs

    async def run(self) -> CheckResult:
        """Run the check and time it."""
        start_time = time.perf_counter()
        passed, summary, report = await self.execute()
        elapsed_ms = (time.perf_counter() - start_time) * 1000
        return CheckResult(
            check_type=self.check_type,
            passed=passed,
            took_ms=elapsed_ms,
            summary=summary,
            report=report,
        )

    @abstractmethod
    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        """
        Execute the check.

        Returns:
            (passed, summary, report) where report is the JSON-ready full result
        """
