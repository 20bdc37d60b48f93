import os
from enum import Enum
from functools import lru_cache

from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import SettingsConfigDict


class AppSettings(Enum):
    DEVELOPMENT = "development"
    PRODUCTION = "production"
    TESTING = "testing"


# Read ENVIRONMENT directly to decide which settings class to load
ENVIRONMENT = os.environ.get("ENVIRONMENT", AppSettings.DEVELOPMENT.value)


class BaseSettings(PydanticBaseSettings):
    """
    Base settings class using pydantic-settings.

    Settings are loaded from environment variables (and an optional .env file).
    They only steer logging, the default output location and the default
    worker count; no setting changes a numerical result.
    """
    APP_NAME: str = "nonlocal-diffusion"
    DEBUG: bool = False
    ENVIRONMENT: str = ENVIRONMENT
    TESTING: bool = False

    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Used when --out is not given on the command line
    OUTPUT_DIR: str = "out"
    # Used when --threads is not given on the command line
    THREADS: int = 1

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


class DevelopmentSettings(BaseSettings):
    """
    Development specific settings.
    Verbose logging, single worker.
    """
    DEBUG: bool = True
    LOG_LEVEL: str = "DEBUG"


class ProductionSettings(BaseSettings):
    """
    Settings for long batch runs: quieter logs, more workers.
    """
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    THREADS: int = max(1, (os.cpu_count() or 1))


class TestingSettings(BaseSettings):
    """
    Testing specific settings.
    """
    TESTING: bool = True
    DEBUG: bool = True
    LOG_LEVEL: str = "DEBUG"
    OUTPUT_DIR: str = "test-out"


@lru_cache()
def get_settings() -> BaseSettings:
    """
    Returns the settings object based on the ENVIRONMENT variable.
    Uses lru_cache to only instantiate the settings once.
    """
    env = ENVIRONMENT.lower()
    if env == AppSettings.DEVELOPMENT.value:
        return DevelopmentSettings()
    elif env == AppSettings.PRODUCTION.value:
        return ProductionSettings()
    elif env == AppSettings.TESTING.value:
        return TestingSettings()
    else:
        return BaseSettings()


settings = get_settings()
