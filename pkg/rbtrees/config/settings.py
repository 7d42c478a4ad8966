"""Application settings using Pydantic settings management."""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment variables (all optional)."""

    # Resource caps
    max_memo_sum: int = 2000
    max_naive_sum: int = 14
    max_chain_enumeration: int = 200_000
    max_terms: int = 1_000_000

    # Execution defaults
    default_jobs: int = 1
    default_seed: int = 0

    # Sweep storage
    sweep_config_path: str = "./configs/sweeps"

    # API Configuration
    api_host: str = "127.0.0.1"
    api_port: int = 8000
    api_reload: bool = False

    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="RBTREES_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
