"""
Configuration Management

Centralized settings for hardy-verify: tolerances, precision of the
reference mode, parallel sweep sizing and logging.
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables (prefix HARDY_).
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="HARDY_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "hardy-verify"
    app_version: str = "0.1.0"

    # Logging
    log_level: str = "INFO"
    log_file: Optional[str] = None

    # Numerics
    tolerance: float = Field(default=1e-10, gt=0.0)
    reference_dps: int = Field(default=60, ge=30)
    tail_explicit_terms: int = Field(default=1000, ge=0)

    # Sweeps
    threads: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=65536, ge=16)
    max_cutoff_n: int = Field(default=10_000, ge=2)

    # Gamma-space diagnostics
    dual_growth_slope: float = Field(default=0.05, gt=0.0)

    # Sampling helpers
    random_seed: int = 20240101

    def tol(self, scale: float) -> float:
        """Hybrid absolute-relative tolerance: tolerance * max(1, scale)."""
        return self.tolerance * max(1.0, abs(scale))


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings instance
    """
    return Settings()


settings = get_settings()
