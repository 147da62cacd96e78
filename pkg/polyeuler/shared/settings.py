"""Runtime configuration for the poly-Euler services."""
from __future__ import annotations

import functools
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(case_sensitive=False, populate_by_name=True)

    environment: str = Field("development", validation_alias="ENVIRONMENT")
    app_name: str = Field("fx-app-poly-euler", validation_alias="APP_NAME")
    app_version: str = Field("1.0.0", validation_alias="APP_VERSION")
    log_level: str = Field("WARNING", validation_alias="LOG_LEVEL")

    seq_server_url: Optional[str] = Field(default=None, validation_alias="SEQ_SERVER_URL")
    seq_api_key: Optional[str] = Field(default=None, validation_alias="SEQ_API_KEY")
    application_insights_connection_string: Optional[str] = Field(
        default=None, validation_alias="APPLICATION_INSIGHTS_CONNECTION_STRING"
    )

    # Desk-scale contract for the public API.
    max_k: int = Field(64, ge=0, validation_alias="POLYEULER_MAX_K")
    max_n: int = Field(512, ge=0, validation_alias="POLYEULER_MAX_N")

    verify_nmax: int = Field(16, ge=0, validation_alias="POLYEULER_VERIFY_NMAX")
    verify_kmax: int = Field(8, ge=0, validation_alias="POLYEULER_VERIFY_KMAX")
    verify_pmax: int = Field(13, ge=3, validation_alias="POLYEULER_VERIFY_PMAX")
    verify_big_n_max: int = Field(4, ge=0, validation_alias="POLYEULER_VERIFY_BIG_N_MAX")
    verify_workers: int = Field(1, ge=1, validation_alias="POLYEULER_VERIFY_WORKERS")


@functools.lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return cached settings instance."""
    return Settings()
