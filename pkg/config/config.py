"""
Configuration management for the readcodes toolkit
"""
import os
from dataclasses import dataclass, field
from dotenv import load_dotenv

from src.core.exceptions import ConfigurationError

# Load environment variables
load_dotenv()


def _env_int(key: str, default: int) -> int:
    raw = os.getenv(key, '')
    if raw.strip() == '':
        return default
    try:
        value = int(raw.strip(), 0)
    except ValueError:
        raise ConfigurationError(f"{key} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"{key} must be positive, got {value}")
    return value


@dataclass
class EnumerationConfig:
    """Exhaustive enumeration and solver budgets"""

    # Words scanned by one enumeration or sweep instance
    ENUMERATION_BUDGET: int = field(default_factory=lambda: _env_int('READCODE_BUDGET', 2 ** 24))

    # Vertices handed to the exact independence-number solver
    EXACT_SOLVER_BUDGET: int = 2 ** 10

    # Words in one dense pairwise distance matrix
    PAIR_MATRIX_BUDGET: int = 2 ** 12

    # Residue tuples considered by joint residue optimization
    RESIDUE_SPACE_BUDGET: int = 2 ** 32

    # Parallelism
    WORKERS: int = field(default_factory=lambda: _env_int('READCODE_WORKERS', 1))
    CHUNK_SIZE: int = 2 ** 16


@dataclass
class AppConfig:
    """Main application configuration"""

    # Logging
    LOG_LEVEL: str = field(default_factory=lambda: os.getenv('READCODE_LOG_LEVEL', 'INFO'))
    LOG_FILE: str = field(default_factory=lambda: os.getenv('READCODE_LOG_FILE', ''))

    # Component configurations
    enumeration: EnumerationConfig = None

    def __post_init__(self):
        if self.enumeration is None:
            self.enumeration = EnumerationConfig()


# Global configuration instance
config = AppConfig()


def get_config() -> AppConfig:
    """Get the global configuration instance"""
    return config


def reload_config() -> AppConfig:
    """Rebuild the global configuration from the current environment"""
    global config
    config = AppConfig()
    return config


def update_config(**kwargs) -> None:
    """Update configuration values on the application or enumeration section"""
    for key, value in kwargs.items():
        if hasattr(config, key):
            setattr(config, key, value)
        elif hasattr(config.enumeration, key):
            setattr(config.enumeration, key, value)
        else:
            raise ConfigurationError(f"Unknown configuration key: {key}")


def resolve_budget(budget, key: str = 'ENUMERATION_BUDGET') -> int:
    """Return an explicit budget, or the configured one when budget is None"""
    if budget is not None:
        return int(budget)
    return int(getattr(get_config().enumeration, key))


def resolve_workers(workers) -> int:
    """Return an explicit worker count, or the configured one when workers is None"""
    if workers is not None:
        return max(1, int(workers))
    return max(1, int(get_config().enumeration.WORKERS))
