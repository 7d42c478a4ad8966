"""
Schema definitions for identity checks and sweep configurations.

Defines the enums shared by the kernel, the CLI and the API, and the
structure of config-driven verification sweeps using Pydantic models.
"""

from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Type

from pydantic import BaseModel, Field, model_validator


class OutputFormat(str, Enum):
    """Rendering formats for command output."""

    JSON = "json"
    LATEX = "latex"
    TEXT = "text"


class IdentityMode(str, Enum):
    """Which version of the generic closed form to generate."""

    AS_PUBLISHED = "as-published"  # formulas exactly as printed
    RECONCILED = "reconciled"  # oracle-consistent formulas


class IdentitySource(str, Enum):
    """Where the right-hand side of an identity comes from."""

    NORMAL_FORM = "normal-form"
    RESTRICTED = "restricted"
    AS_PUBLISHED = "as-published"
    RECONCILED = "reconciled"


class DomainName(str, Enum):
    """Index domains of the five sums of the generic identity."""

    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    D5 = "D5"


class ModelKind(str, Enum):
    """Concrete Rota-Baxter algebras."""

    INTEGRAL = "integral"  # polynomial integration, weight 0
    SUM = "sum"  # sequence prefix sums, weight -1


class CheckType(str, Enum):
    """Types of composable checks."""

    VERIFY = "verify"
    MODEL_CHECK = "model_check"
    CHAIN_COUNT = "chain_count"
    CHAIN_PRODUCT = "chain_product"
    KERNEL = "kernel"
    ROTA_BAXTER_LAW = "rota_baxter_law"


class VerifyConfig(BaseModel):
    """Configuration for a closed-form versus oracle sweep."""

    max_a: int = Field(ge=1, description="Largest left-leg size in the grid")
    max_b: int = Field(ge=1, description="Largest right-leg size in the grid")
    mode: IdentityMode = Field(default=IdentityMode.RECONCILED)
    lambda_zero: bool = Field(
        default=False, description="Check the restricted identity against the oracle at weight 0"
    )
    max_c: int = Field(default=0, ge=0, description="Largest neck size checked")


class ModelCheckConfig(BaseModel):
    """Configuration for checking identities inside a concrete model."""

    model: ModelKind
    max_a: int = Field(ge=1)
    max_b: int = Field(ge=1)
    trials: int = Field(default=3, ge=1, description="Random input pairs per grid cell")
    seed: int = Field(default=0, ge=0)
    source: IdentitySource = Field(default=IdentitySource.NORMAL_FORM)


class ChainCountConfig(BaseModel):
    """Configuration for the chain-count formula report."""

    max_a: int = Field(ge=1)
    max_m: int = Field(ge=1)


class ChainProductConfig(BaseModel):
    """Configuration for the chain-count product identity over a grid."""

    max_a: int = Field(ge=1)
    max_b: int = Field(ge=1)
    max_m: int = Field(ge=1, description="Largest chain top checked")
    source: IdentitySource = Field(default=IdentitySource.NORMAL_FORM)


class KernelConfig(BaseModel):
    """Configuration for the simplex-kernel representation check."""

    max_a: int = Field(default=5, ge=0)
    degrees: List[int] = Field(default_factory=lambda: [0, 1, 2, 3])
    samples: int = Field(default=12, ge=1, description="Distinct rational sample points")
    normalization_max_a: int = Field(default=8, ge=0)


class RotaBaxterLawConfig(BaseModel):
    """Configuration for the ground-truth Rota-Baxter law check of a model."""

    model: ModelKind
    pairs: int = Field(default=200, ge=1)
    seed: int = Field(default=0, ge=0)
    max_degree: int = Field(default=4, ge=0, description="Polynomial degree bound (integral)")
    horizon: int = Field(default=30, ge=1, description="Sequence horizon (sum)")


CHECK_CONFIG_TYPES: Dict[CheckType, Type[BaseModel]] = {
    CheckType.VERIFY: VerifyConfig,
    CheckType.MODEL_CHECK: ModelCheckConfig,
    CheckType.CHAIN_COUNT: ChainCountConfig,
    CheckType.CHAIN_PRODUCT: ChainProductConfig,
    CheckType.KERNEL: KernelConfig,
    CheckType.ROTA_BAXTER_LAW: RotaBaxterLawConfig,
}


class CheckConfig(BaseModel):
    """Configuration for a single composable check."""

    type: CheckType = Field(description="Type of the check")
    config: Dict[str, Any] = Field(default_factory=dict, description="Check-specific configuration")
    name: Optional[str] = Field(default=None, description="Optional name for this check")
    enabled: bool = Field(default=True, description="Whether this check is enabled")
    expect_findings: bool = Field(
        default=False, description="The check documents a known defect and is expected to fail"
    )

    @model_validator(mode="after")
    def validate_config(self) -> "CheckConfig":
        """Validate the config dictionary against the model for its type."""
        CHECK_CONFIG_TYPES[self.type].model_validate(self.config)
        return self

    def parsed_config(self) -> BaseModel:
        """Return the typed configuration for this check."""
        return CHECK_CONFIG_TYPES[self.type].model_validate(self.config)


class SweepMetadata(BaseModel):
    """Metadata about a sweep."""

    created_by: Optional[str] = None
    created_at: datetime = Field(default_factory=datetime.utcnow)
    description: Optional[str] = None
    tags: List[str] = Field(default_factory=list)


class SweepConfig(BaseModel):
    """Complete sweep configuration."""

    sweep_id: str = Field(description="Unique identifier for the sweep")
    version: str = Field(default="1.0")
    name: str = Field(description="Human-readable name")
    checks: List[CheckConfig] = Field(description="Ordered list of checks")
    metadata: SweepMetadata = Field(default_factory=SweepMetadata)

    model_config = {"json_schema_extra": {
        "example": {
            "sweep_id": "generic-reconciled",
            "version": "1.0",
            "name": "Generic identity, reconciled",
            "checks": [
                {
                    "type": "verify",
                    "config": {"max_a": 8, "max_b": 8, "mode": "reconciled"},
                },
                {
                    "type": "model_check",
                    "config": {"model": "sum", "max_a": 5, "max_b": 5, "source": "reconciled"},
                },
            ],
            "metadata": {"description": "Acceptance gate for the reconciled formulas"},
        }
    }}
