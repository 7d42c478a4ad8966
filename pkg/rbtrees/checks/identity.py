"""Closed form versus rewrite oracle."""

import json
from typing import Any, Dict, Tuple

from rbtrees.config import VerifyConfig
from rbtrees.core.validator import validate_async

from .base import Check


class VerifyCheck(Check):
    """Validate a closed form over a grid; passes when the report is empty."""

    check_type = "verify"
    config: VerifyConfig

    async def execute(self) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        report = await validate_async(
            self.config.max_a,
            self.config.max_b,
            mode=self.config.mode,
            lambda_zero=self.config.lambda_zero,
            engine=self.engine,
            jobs=self.jobs,
            max_c=self.config.max_c,
        )
        summary = {"mode": report.mode, **report.summary.model_dump()}
        return report.is_empty, summary, json.loads(report.to_json())
