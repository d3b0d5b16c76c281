"""Configuration management for radiolabel."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class SolverConfig(BaseSettings):
    """Budgets and switches for the exact radio-number search."""

    model_config = SettingsConfigDict(
        env_prefix="RADIOLABEL_SOLVER_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    node_budget: int | None = Field(
        default=None,
        description=(
            "Maximum search nodes per span attempt, shared by all workers "
            "(unbounded when unset)"
        ),
        ge=1,
    )
    time_budget: float | None = Field(
        default=None,
        description="Wall-clock budget in seconds for a whole solve",
        gt=0,
    )
    start_span: int | None = Field(
        default=None,
        description="First span to try; defaults to the best generic lower bound",
        ge=1,
    )
    symmetry_breaking: bool = Field(
        default=True,
        description="Restrict the first vertex to the lower half of the span",
    )
    workers: int = Field(
        default=1,
        description="Worker processes splitting the first branching level",
        ge=1,
    )


class AppSettings(BaseSettings):
    """Settings for the command line tool."""

    model_config = SettingsConfigDict(
        env_prefix="RADIOLABEL_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = Field(
        default="WARNING",
        description="Logging level",
        pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$",
    )
    fixture_path: str | None = Field(
        default=None,
        description="Small-gear fixture YAML; the packaged file when unset",
    )
    table_gear_solver_max_n: int = Field(
        default=6,
        description="Largest gear the table hands to the exact solver",
        ge=0,
    )
    table_solver_max_vertices: int = Field(
        default=13,
        description="Largest vertex count the table hands to the exact solver",
        ge=0,
    )
    table_time_budget: float = Field(
        default=120.0,
        description="Per-row solver time budget for the table, in seconds",
        gt=0,
    )


class Config:
    """Main configuration class combining all settings."""

    def __init__(self) -> None:
        """Initialize configuration from environment variables."""
        self.solver = SolverConfig()
        self.app = AppSettings()

    @classmethod
    def from_env(cls) -> "Config":
        """Create configuration from environment variables."""
        return cls()
