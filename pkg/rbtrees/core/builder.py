"""Factory for creating check instances from configuration."""

from pydantic import BaseModel

from rbtrees.checks import (
    ChainCountCheck,
    ChainProductCheck,
    Check,
    KernelCheck,
    ModelCheck,
    RotaBaxterLawCheck,
    VerifyCheck,
)
from rbtrees.config import CheckType
from rbtrees.core.rewrite import NormalFormEngine


class CheckFactory:
    """Factory for creating check instances from configuration."""

    def __init__(self, engine: NormalFormEngine, jobs: int = 1):
        """
        Initialize check factory.

        Args:
            engine: Normal-form engine shared by every check
            jobs: Worker threads for grid checks
        """
        self.engine = engine
        self.jobs = jobs

    def create_check(self, check_type: CheckType, config: BaseModel) -> Check:
        """
        Create a check instance from configuration.

        Raises:
            ValueError: If check type is unknown
        """
        if check_type == CheckType.VERIFY:
            return VerifyCheck(config, self.engine, self.jobs)

        elif check_type == CheckType.MODEL_CHECK:
            return ModelCheck(config, self.engine, self.jobs)

        elif check_type == CheckType.CHAIN_COUNT:
            return ChainCountCheck(config, self.engine)

        elif check_type == CheckType.CHAIN_PRODUCT:
            return ChainProductCheck(config, self.engine)

        elif check_type == CheckType.KERNEL:
            return KernelCheck(config, self.engine)

        elif check_type == CheckType.ROTA_BAXTER_LAW:
            return RotaBaxterLawCheck(config, self.engine)

        else:
            raise ValueError(f"Unknown check type: {check_type}")
