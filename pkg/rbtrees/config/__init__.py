"""Configuration, settings and schema definitions."""

from .schema import (
    CheckConfig,
    CheckType,
    ChainCountConfig,
    ChainProductConfig,
    DomainName,
    IdentityMode,
    IdentitySource,
    KernelConfig,
    ModelCheckConfig,
    ModelKind,
    OutputFormat,
    RotaBaxterLawConfig,
    SweepConfig,
    VerifyConfig,
)
from .settings import Settings, get_settings

__all__ = [
    "CheckConfig",
    "CheckType",
    "ChainCountConfig",
    "ChainProductConfig",
    "DomainName",
    "IdentityMode",
    "IdentitySource",
    "KernelConfig",
    "ModelCheckConfig",
    "ModelKind",
    "OutputFormat",
    "RotaBaxterLawConfig",
    "SweepConfig",
    "VerifyConfig",
    "Settings",
    "get_settings",
]
