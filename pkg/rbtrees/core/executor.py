"""Executors - fan grid cells and sweep checks out, reassemble deterministically."""

import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from rbtrees.config import SweepConfig

if TYPE_CHECKING:
    from rbtrees.checks import CheckResult
    from rbtrees.core.builder import CheckFactory

logger = logging.getLogger(__name__)

R = TypeVar("R")


class GridExecutor:
    """
    Runs a function over grid cells, optionally on a thread pool.

    Results always come back in the order of the cells, so the number of
    jobs never changes what callers assemble from them.
    """

    def __init__(self, jobs: int = 1):
        if jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {jobs}")
        self.jobs = jobs

    def map(self, fn: Callable[..., R], cells: Sequence[Tuple]) -> List[R]:
        """Synchronous fan-out."""
        if self.jobs == 1 or len(cells) < 2:
            return [fn(*cell) for cell in cells]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(lambda cell: fn(*cell), cells))

    async def gather(self, fn: Callable[..., R], cells: Sequence[Tuple]) -> List[R]:
        """Asynchronous fan-out for use inside a running event loop."""
        if self.jobs == 1 or len(cells) < 2:
            return [fn(*cell) for cell in cells]
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            tasks = [loop.run_in_executor(pool, fn, *cell) for cell in cells]
            return list(await asyncio.gather(*tasks))


class SweepResult:
    """Result from executing a sweep."""

    def __init__(
        self,
        sweep_id: str,
        results: List["CheckResult"],
        expectations: List[bool],
        total_time_ms: float,
        metadata: Dict[str, Any],
    ):
        self.sweep_id = sweep_id
        self.results = results
        self.expectations = expectations
        self.total_time_ms = total_time_ms
        self.metadata = metadata

    @property
    def ok(self) -> bool:
        """True when every check ended as its configuration expected."""
        pairs = zip(self.results, self.expectations)
        return all(r.passed != expect_findings for r, expect_findings in pairs)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "sweep_id": self.sweep_id,
            "ok": self.ok,
            "checks": [
                {
                    "check_type": r.check_type,
                    "name": r.name,
                    "passed": r.passed,
                    "expected_findings": expect_findings,
                    "summary": r.summary,
                }
                for r, expect_findings in zip(self.results, self.expectations)
            ],
            "took_ms": self.total_time_ms,
            "metadata": {
                **self.metadata,
                "num_checks": len(self.results),
                "check_timings": [
                    {"check_type": r.check_type, "took_ms": r.took_ms} for r in self.results
                ],
            },
        }


class SweepExecutor:
    """
    Executes sweeps composed of multiple checks.

    Checks run in their configured order; each check may fan its own grid
    out over the configured number of jobs.
    """

    def __init__(self, check_factory: "CheckFactory"):
        """
        Initialize sweep executor.

        Args:
            check_factory: Factory for creating check instances
        """
        self.check_factory = check_factory

    async def execute(self, sweep: SweepConfig, only: Optional[List[str]] = None) -> SweepResult:
        """
        Execute a sweep.

        Args:
            sweep: Sweep configuration
            only: Optional list of check names to restrict the run to

        Returns:
            SweepResult with one result per executed check
        """
        start_time = time.perf_counter()

        enabled = [c for c in sweep.checks if c.enabled and (only is None or c.name in only)]
        if not enabled:
            raise ValueError(f"No enabled checks in sweep {sweep.sweep_id}")

        results = []
        expectations = []
        for component in enabled:
            check = self.check_factory.create_check(component.type, component.parsed_config())
            logger.info("Running %s check %s", component.type.value, component.name or "")
            result = await check.run()
            result.name = component.name
            results.append(result)
            expectations.append(component.expect_findings)

        total_time_ms = (time.perf_counter() - start_time) * 1000

        return SweepResult(
            sweep_id=sweep.sweep_id,
            results=results,
            expectations=expectations,
            total_time_ms=total_time_ms,
            metadata={"sweep_version": sweep.version, "sweep_name": sweep.name},
        )
