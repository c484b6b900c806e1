"""Environment-driven configuration helpers for ExchLab."""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime configuration loaded from environment variables or .env files."""

    model_config = SettingsConfigDict(
        env_prefix="EXCHLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    support_guard: int = Field(default=3**10, ge=1)
    oracle_max_n: int = Field(default=8, ge=1, le=10)
    witness_floor_divisor: int = Field(default=2, ge=2)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return cached application settings."""

    return Settings()  # type: ignore[call-arg]
