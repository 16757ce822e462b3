"""
Configuration management for the fivec-drawing toolkit.
"""

from typing import Optional
from pydantic_settings import BaseSettings
from pydantic import Field
from functools import lru_cache

class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables with defaults."""

    # Fixtures
    FIVEC_FIXTURE_DIR: str = Field("fixtures", env="FIVEC_FIXTURE_DIR")

    # Logging
    FIVEC_LOG_LEVEL: str = Field("INFO", env="FIVEC_LOG_LEVEL")
    FIVEC_LOG_FILE: Optional[str] = Field(None, env="FIVEC_LOG_FILE")

    # Drawing output
    FIVEC_SVG_SCALE: float = Field(500.0, env="FIVEC_SVG_SCALE")
    FIVEC_RESOLUTION_TOLERANCE: float = Field(1e-9, env="FIVEC_RESOLUTION_TOLERANCE")

    # Generator: move attempts allowed per requested vertex or flip
    FIVEC_GENERATOR_BUDGET_FACTOR: int = Field(60, env="FIVEC_GENERATOR_BUDGET_FACTOR")

    # Quadratic oracles run by --check are skipped above these sizes
    FIVEC_ORACLE_MAX_VERTICES: int = Field(300, env="FIVEC_ORACLE_MAX_VERTICES")
    FIVEC_SEGMENT_ORACLE_MAX_VERTICES: int = Field(200, env="FIVEC_SEGMENT_ORACLE_MAX_VERTICES")

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"

# One settings object per process
@lru_cache()
def get_settings() -> Settings:
    """Get toolkit settings."""
    return Settings()
