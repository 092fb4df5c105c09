"""
Core configuration and settings for the trimodule lab.
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    # ========================
    # Application Settings
    # ========================
    app_name: str = Field(default="Trimodule Lab", description="Application name")
    app_version: str = Field(default="1.0.0", description="Application version")
    debug: bool = Field(default=False, description="Debug mode (console log renderer)")
    schema_version: str = Field(default="1", description="Structure file schema version")

    # ========================
    # Output
    # ========================
    output_dir: Optional[Path] = Field(
        default=None, description="Directory that relative -o paths are resolved against"
    )

    # ========================
    # Sampling for coherence checks
    # ========================
    sample_seed: int = Field(default=0, description="Seed for sampled morphisms")
    naturality_samples: int = Field(default=20, description="Morphisms per naturality check")
    j_functor_samples: int = Field(default=10, description="Composable pairs for J")
    adjunction_samples: int = Field(default=10, description="Morphisms per adjunction square")

    # ========================
    # Monitoring & Logging
    # ========================
    log_level: str = Field(default="WARNING", description="Logging level")

    @field_validator("naturality_samples", "j_functor_samples", "adjunction_samples")
    @classmethod
    def validate_sample_count(cls, v: int) -> int:
        """Sample counts must be nonnegative."""
        if v < 0:
            raise ValueError("sample counts must be nonnegative")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Only standard logging levels are accepted."""
        if v.upper() not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v!r}")
        return v.upper()

    model_config = SettingsConfigDict(
        env_prefix="TRIMODULE_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
