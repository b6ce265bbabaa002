"""
Configuration management for the HEN cleaning scheduler
"""

from typing import Literal
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, model_validator


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    """
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )

    # --- Logging ---
    LOG_LEVEL: Literal["TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    LOG_DIR: str = "logs"
    LOG_RETENTION_DAYS: int = 30
    LOG_TO_FILE: bool = True

    # --- Paths ---
    SCENARIO_PATH: str = "./data/scenarios/scenario_11he.json"
    OUTPUT_DIR: str = "./runs/latest"

    # --- Swarm Defaults ---
    PSO_PARTICLES: int = Field(30, ge=1, description="Swarm size")
    PSO_ITERATIONS: int = Field(100, ge=1, description="Full swarm updates per run")
    PSO_C1: float = Field(2.0, ge=0.0, description="Cognitive weight")
    PSO_C2: float = Field(2.0, ge=0.0, description="Social weight")
    PSO_INERTIA_MAX: float = Field(0.9, gt=0.0)
    PSO_INERTIA_MIN: float = Field(0.4, gt=0.0)
    PSO_INERTIA_POLICY: Literal["linear", "constant"] = "linear"
    PSO_SEED: int = 42
    PSO_WORKERS: int = Field(1, ge=1, description="Processes used for fitness evaluation")

    # --- Schedule Search Space ---
    INTERVAL_MAX_MONTHS: int = Field(31, ge=1, description="Upper bound of the interval box")
    INITIAL_VELOCITY_MAX: float = Field(1.0, gt=0.0, description="Initial speed range is [0, this]")

    @model_validator(mode="after")
    def check_inertia_order(self) -> "Settings":
        if self.PSO_INERTIA_MAX < self.PSO_INERTIA_MIN:
            raise ValueError("PSO_INERTIA_MAX must be >= PSO_INERTIA_MIN")
        return self


# Singleton instance
settings = Settings()
