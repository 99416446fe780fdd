"""
Solver Configuration
File: app/shared_kernel/settings.py
Created: 2025-09-03
Purpose: YAML-backed solver settings with environment overrides
Loads config/solver_config.yaml (or $ELASTINET_CONFIG) into pydantic models.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Type

import yaml
from pydantic import BaseModel, Field, ValidationError
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from .constants import (
    CONFIG_ENV_VAR,
    CONSTRUCTION_SAMPLES,
    DEFAULT_MAX_ITER,
    DEFAULT_RESTARTS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOL_C,
    DEFAULT_TOL_G,
    DEGENERATE_RATIO,
    ENV_PREFIX,
    EPS_ANG,
    INCIDENCE_TOL,
    PENALTY_GROWTH,
    PENALTY_INITIAL,
    PENALTY_MAX,
    PIVOT_TOL,
    RESTART_NOISE,
    SPLICE_SAMPLES,
    SVG_DEFAULT_SCALE,
    SVG_MARGIN,
)
from .exceptions import ConfigurationError


class ToleranceSettings(BaseModel):
    angle: float = Field(EPS_ANG, gt=0)
    incidence: float = Field(INCIDENCE_TOL, gt=0)
    pivot: float = Field(PIVOT_TOL, gt=0)


class SolverSettings(BaseModel):
    samples: int = Field(DEFAULT_SAMPLES, ge=8)
    max_iter: int = Field(DEFAULT_MAX_ITER, gt=0)
    tol_c: float = Field(DEFAULT_TOL_C, gt=0)
    tol_g: float = Field(DEFAULT_TOL_G, gt=0)
    seed: int = DEFAULT_SEED
    restarts: int = Field(DEFAULT_RESTARTS, ge=1)
    penalty_initial: float = Field(PENALTY_INITIAL, gt=0)
    penalty_growth: float = Field(PENALTY_GROWTH, gt=1)
    penalty_max: float = Field(PENALTY_MAX, gt=0)
    degenerate_ratio: float = Field(DEGENERATE_RATIO, gt=0, lt=1)
    restart_noise: float = Field(RESTART_NOISE, ge=0)


class ConstructionSettings(BaseModel):
    samples: int = Field(CONSTRUCTION_SAMPLES, ge=8)
    splice_samples: int = Field(SPLICE_SAMPLES, ge=2)


class RenderSettings(BaseModel):
    scale: float = Field(SVG_DEFAULT_SCALE, gt=0)
    margin: float = Field(SVG_MARGIN, ge=0)


class ElastiNetSettings(BaseSettings):
    """Complete runtime configuration.

    Precedence, highest first: ``ELASTINET_<SECTION>__<FIELD>`` environment
    variables, then the YAML file, then the defaults declared here.
    """

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_nested_delimiter="__",
        extra="ignore",
    )

    tolerances: ToleranceSettings = ToleranceSettings()
    solver: SolverSettings = SolverSettings()
    construction: ConstructionSettings = ConstructionSettings()
    render: RenderSettings = RenderSettings()

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # YAML values arrive as init kwargs; environment overrides them
        return env_settings, init_settings


def default_config_path() -> Path:
    env_path = os.getenv(CONFIG_ENV_VAR)
    if env_path:
        return Path(env_path)
    project_root = Path(__file__).parent.parent.parent
    return project_root / "config" / "solver_config.yaml"


def load_settings(config_path: Optional[Path] = None) -> ElastiNetSettings:
    path = Path(config_path) if config_path else default_config_path()
    data: Dict[str, Any] = {}
    if path.exists():
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as exc:
            raise ConfigurationError(f"Cannot parse config file {path}", {"error": str(exc)}) from exc
        if not isinstance(data, dict):
            raise ConfigurationError(f"Config file {path} must contain a mapping")
    try:
        return ElastiNetSettings(**data)
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid configuration in {path}", {"errors": exc.errors()}) from exc


_settings: Optional[ElastiNetSettings] = None


def get_settings() -> ElastiNetSettings:
    """Get the process-wide settings instance."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None


def use_config(config_path: Path) -> ElastiNetSettings:
    """Replace the process-wide settings with the ones in ``config_path``."""
    global _settings
    _settings = load_settings(config_path)
    return _settings
