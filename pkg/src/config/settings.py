"""
Runtime settings for the micro-tensile toolkit.

This module handles loading and validating configuration from environment
variables (prefix ``MTM_``) and an optional ``.env`` file. Campaign inputs
live in the JSON documents parsed by :mod:`config.campaign`.
"""

from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="MTM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging Configuration
    log_level: str = Field("INFO")
    log_file: Optional[str] = Field(None)
    log_rotation: str = Field("10 MB")

    # Solver Configuration
    solver_max_iterations: int = Field(200)
    solver_workers: int = Field(1)
    design_rel_tol: float = Field(1e-4)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("solver_max_iterations", "solver_workers")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("Must be at least 1")
        return v

    @field_validator("design_rel_tol")
    @classmethod
    def validate_rel_tol(cls, v: float) -> float:
        if not 0.0 < v < 1.0:
            raise ValueError("Design tolerance must be between 0 and 1")
        return v

    def get_logs_dir(self) -> Optional[Path]:
        """Directory of the log file, if file logging is enabled."""
        return Path(self.log_file).parent if self.log_file else None
