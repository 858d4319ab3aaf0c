"""
Runtime configuration.
Values come from the environment after python-dotenv has loaded `.env` from
the project root; `.env.example` lists every key. CLI flags and scenario
`(config ...)` blocks override what is read here.
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

from tentacle.errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parent.parent


@dataclass(frozen=True)
class Settings:
    color: bool = True
    log_level: str = "INFO"
    budget_depth: int = 12
    budget_size: int = 80
    budget_candidates: int = 24
    horizon: int = 3
    max_plan_steps: int = 3
    plan_ceiling: int = 20000
    delta: int = 2
    lock_timeout: float = 10.0
    artifact_dir: str = "artifacts"

    def with_overrides(self, **overrides) -> "Settings":
        """Return a copy with every non-None override applied."""
        clean = {k: v for k, v in overrides.items() if v is not None}
        updated = replace(self, **clean)
        updated.validate()
        return updated

    def validate(self):
        for name in ("budget_depth", "budget_size", "budget_candidates", "horizon",
                     "max_plan_steps", "plan_ceiling"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.delta < 0:
            raise ConfigError(f"delta must not be negative, got {self.delta}")
        if self.lock_timeout <= 0:
            raise ConfigError(f"lock_timeout must be positive, got {self.lock_timeout}")


def _int(env, key, default):
    raw = env.get(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}")


def _flag(env, key, default):
    raw = env.get(key)
    if raw is None or raw.strip() == "":
        return default
    if raw.strip() not in ("0", "1"):
        raise ConfigError(f"{key} must be 0 or 1, got {raw!r}")
    return raw.strip() == "1"


def load_settings(env=None, dotenv_path=None) -> Settings:
    """
    Build Settings from the environment.
    :param env: Mapping to read instead of os.environ (tests pass dicts).
    :param dotenv_path: `.env` file to load first; defaults to the project root.
    """
    if env is None:
        load_dotenv(dotenv_path or PROJECT_ROOT / ".env")
        env = os.environ

    timeout_raw = env.get("TAI_LOCK_TIMEOUT")
    try:
        lock_timeout = float(timeout_raw) if timeout_raw else Settings.lock_timeout
    except ValueError:
        raise ConfigError(f"TAI_LOCK_TIMEOUT must be a number, got {timeout_raw!r}")

    settings = Settings(
        color=_flag(env, "TAI_COLOR", Settings.color),
        log_level=env.get("TAI_LOG_LEVEL", Settings.log_level).upper(),
        budget_depth=_int(env, "TAI_BUDGET_DEPTH", Settings.budget_depth),
        budget_size=_int(env, "TAI_BUDGET_SIZE", Settings.budget_size),
        budget_candidates=_int(env, "TAI_BUDGET_CANDIDATES", Settings.budget_candidates),
        horizon=_int(env, "TAI_HORIZON", Settings.horizon),
        max_plan_steps=_int(env, "TAI_MAX_PLAN_STEPS", Settings.max_plan_steps),
        plan_ceiling=_int(env, "TAI_PLAN_CEILING", Settings.plan_ceiling),
        delta=_int(env, "TAI_DELTA", Settings.delta),
        lock_timeout=lock_timeout,
        artifact_dir=env.get("TAI_ARTIFACT_DIR", Settings.artifact_dir),
    )
    settings.validate()
    return settings
