"""Series engine configuration."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_DATA_PATH = Path(__file__).resolve().parent / "series" / "data"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8")

    log_level: str = "WARNING"
    log_format: str = "console"  # json | console

    # Budgets
    max_character_mass: int = 5_000_000
    max_orbit_size: int = 2_000_000
    max_plethysm_degree: int = 6
    large_module_dim: int = 56
    large_module_degree: int = 4
    kostant_max_rank: int = 6
    ambient_cube_max_rank: int = 6
    max_decompose_iterations: int = 1_000_000

    casimir_norm: str = "killing"  # killing | highest-root

    data_path: str = str(DEFAULT_DATA_PATH)
    jobs: int = 1

    def plethysm_degree_for(self, dim: int) -> int:
        """Largest plethysm degree the default budget allows for a module of this dimension."""
        if dim >= self.large_module_dim:
            return min(self.large_module_degree, self.max_plethysm_degree)
        return self.max_plethysm_degree


@lru_cache()
def get_settings() -> Settings:
    return Settings()


def override_settings(**values) -> Settings:
    """Apply command-line overrides to the cached settings; ``None`` leaves a field alone."""
    settings = get_settings()
    for key, value in values.items():
        if value is not None:
            setattr(settings, key, value)
    return settings
