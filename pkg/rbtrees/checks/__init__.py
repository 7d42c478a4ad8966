"""Composable verification checks run by sweeps."""

from .base import Check, CheckResult
from .counting import (
    ChainCountCheck,
    ChainProductCheck,
    ChainProductReport,
    chain_product_report,
)
from .identity import VerifyCheck
from .kernel import KernelCheck, KernelReport, kernel_check, sample_points
from .model import (
    LawReport,
    ModelCheck,
    ModelCheckReport,
    ModelFailure,
    RotaBaxterLawCheck,
    identity_rhs,
    model_check,
    model_check_async,
    rota_baxter_law_check,
)

__all__ = [
    "Check",
    "CheckResult",
    "ChainCountCheck",
    "ChainProductCheck",
    "ChainProductReport",
    "chain_product_report",
    "VerifyCheck",
    "KernelCheck",
    "KernelReport",
    "kernel_check",
    "sample_points",
    "LawReport",
    "ModelCheck",
    "ModelCheckReport",
    "ModelFailure",
    "RotaBaxterLawCheck",
    "identity_rhs",
    "model_check",
    "model_check_async",
    "rota_baxter_law_check",
]
