"""
Package-wide defaults, overridable through ``KKCLIQUE_*`` environment variables.
"""
import os
from dataclasses import dataclass, replace
from functools import lru_cache

from kkclique.util.exceptions import ConfigError

_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """
    Tunable defaults used across the package.

    Attributes:
        log_level: str
            Level handed to ``configure_logging`` by the CLI
        workers: int
            Worker processes for the exhaustive search
        default_v_max: int
            Vertex cap used when a search is not given one
        hard_v_max: int
            Largest vertex cap an exhaustive search accepts (2^28 edge masks)
        identity_n_max: int
            Upper end of the default range for identity checks
        t_scan_factor: int
            The scan for t in the extension of Bollobas' theorem stops at
            ``t_scan_factor * w``
        split_depth: int
            Number of leading edges whose decisions split the exhaustive mask
            space into independent chunks
        heuristic_iterations: int
            Random restarts of the hill climber when none are requested
    """
    log_level: str = "WARNING"
    workers: int = 1
    default_v_max: int = 7
    hard_v_max: int = 8
    identity_n_max: int = 200
    t_scan_factor: int = 4
    split_depth: int = 4
    heuristic_iterations: int = 20

    def with_overrides(self, **kwargs) -> "Settings":
        """Return a copy with the non-None keyword arguments applied."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    """Build a Settings object from the environment."""
    level = os.environ.get("KKCLIQUE_LOG_LEVEL", "WARNING").upper()
    if level not in _LEVELS:
        raise ConfigError(f"KKCLIQUE_LOG_LEVEL must be one of {', '.join(_LEVELS)}")
    defaults = Settings()
    return Settings(
        log_level=level,
        workers=_int_env("KKCLIQUE_WORKERS", defaults.workers, 1),
        default_v_max=min(_int_env("KKCLIQUE_V_MAX", defaults.default_v_max, 2), defaults.hard_v_max),
        identity_n_max=_int_env("KKCLIQUE_IDENTITY_N_MAX", defaults.identity_n_max, 7),
        split_depth=_int_env("KKCLIQUE_SPLIT_DEPTH", defaults.split_depth, 0),
        heuristic_iterations=_int_env("KKCLIQUE_HEURISTIC_ITERATIONS", defaults.heuristic_iterations, 0),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings, read from the environment once."""
    return load_settings()
