"""Configuration management for the toolkit."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

if TYPE_CHECKING:
    from ..models.models import Tolerances

DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class LogLevel(str, Enum):
    """Logging levels."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class Settings(BaseSettings):
    """Toolkit settings.

    All settings can be overridden by environment variables with the prefix PICKSPACE_.
    For example, PICKSPACE_TOL_MATCH=1e-7 sets the match tolerance, and PICKSPACE_TOL=1e-7
    sets the psd, rank-one and match tolerances at once.
    """

    model_config = SettingsConfigDict(
        env_prefix="PICKSPACE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Tolerance settings
    tol: float | None = Field(
        default=None,
        ge=0.0,
        description="Single tolerance applied to psd, rank-one and match tolerances",
    )
    tol_psd: float = Field(default=1e-9, ge=0.0, description="Relative eigenvalue floor")
    tol_rankone: float = Field(
        default=1e-8,
        ge=0.0,
        description="Relative second singular value allowed in rank-one tests",
    )
    tol_match: float = Field(default=1e-8, ge=0.0, description="Equality tolerance")
    tol_boundary: float = Field(
        default=1e-12,
        ge=0.0,
        description="Points closer than this to the unit sphere are rejected",
    )

    # Generator settings
    generic_margin: float = Field(
        default=1e-3,
        gt=0.0,
        description="Minimum geodesic margin of generated generic point sets",
    )
    min_separation: float = Field(
        default=0.3,
        gt=0.0,
        lt=1.0,
        description="Minimum pairwise pseudohyperbolic distance of generated points",
    )
    max_radius: float = Field(
        default=0.85,
        gt=0.0,
        lt=1.0,
        description="Euclidean radius generated points stay within",
    )

    # Output settings
    significant_digits: int = Field(default=12, ge=1, le=17)

    # Logging settings
    log_level: LogLevel = LogLevel.WARNING
    log_format: str = DEFAULT_LOG_FORMAT

    def tolerances(self) -> Tolerances:
        """Build the tolerance bundle used by the numerical core.

        Returns:
            Tolerances: Tolerances with PICKSPACE_TOL applied when set
        """
        from ..models.models import Tolerances

        if self.tol is not None:
            return Tolerances(
                psd_tol=self.tol,
                rankone_tol=self.tol,
                match_tol=self.tol,
                boundary_tol=self.tol_boundary,
            )
        return Tolerances(
            psd_tol=self.tol_psd,
            rankone_tol=self.tol_rankone,
            match_tol=self.tol_match,
            boundary_tol=self.tol_boundary,
        )


@lru_cache
def get_settings() -> Settings:
    """Get toolkit settings singleton.

    Returns:
        Settings: Toolkit settings
    """
    return Settings()
