"""Application settings using Pydantic."""

import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = "logs/swabc.log"

    # Parallelism cap for samplers, distance grids and the denoiser
    SWABC_THREADS: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)

    # Reproducibility
    DEFAULT_SEED: int = 0

    # Outputs
    OUTPUT_DIR: str = "out"

    # Wall-clock budget per SMC run, seconds
    TIME_BUDGET_SECONDS: float = 300.0

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


# Global settings instance
settings = Settings()
