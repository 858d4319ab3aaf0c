"""
Settings from the environment, the artifact-directory lock, and log setup.
"""

import io
import logging

import pytest

from tentacle.errors import ConfigError, HorizonTooLarge, InputError, LockTimeout
from tentacle.prover.rules import Budget
from utils.file_lock import LOCK_NAME, AtomicLock
from utils.logs import setup_logging
from utils.settings import Settings, load_settings

pytestmark = pytest.mark.reasoning


def test_empty_environment_gives_defaults():
    assert load_settings({}) == Settings()


def test_environment_values_are_parsed():
    settings = load_settings({
        "TAI_COLOR": "0",
        "TAI_LOG_LEVEL": "debug",
        "TAI_BUDGET_DEPTH": "20",
        "TAI_HORIZON": " 4 ",
        "TAI_LOCK_TIMEOUT": "2.5",
        "TAI_ARTIFACT_DIR": "out",
    })
    assert settings.color is False
    assert settings.log_level == "DEBUG"
    assert settings.budget_depth == 20
    assert settings.horizon == 4
    assert settings.lock_timeout == 2.5
    assert settings.artifact_dir == "out"
    assert Budget.from_settings(settings) == Budget(20, 80, 24)


@pytest.mark.parametrize("env", [
    {"TAI_HORIZON": "three"},
    {"TAI_HORIZON": "0"},
    {"TAI_DELTA": "-1"},
    {"TAI_COLOR": "yes"},
    {"TAI_LOCK_TIMEOUT": "soon"},
    {"TAI_PLAN_CEILING": "-5"},
])
def test_bad_environment_values(env):
    with pytest.raises(ConfigError):
        load_settings(env)


def test_dotenv_file_is_read(tmp_path, monkeypatch):
    # register the variable so monkeypatch restores its absence afterwards
    monkeypatch.setenv("TAI_MAX_PLAN_STEPS", "1")
    monkeypatch.delenv("TAI_MAX_PLAN_STEPS")
    dotenv = tmp_path / ".env"
    dotenv.write_text("TAI_MAX_PLAN_STEPS=5\n", encoding="utf-8")
    assert load_settings(dotenv_path=dotenv).max_plan_steps == 5


def test_overrides_skip_none_and_validate():
    base = Settings()
    assert base.with_overrides(horizon=None) == base
    assert base.with_overrides(horizon=6).horizon == 6
    with pytest.raises(ConfigError):
        base.with_overrides(budget_size=0)
    with pytest.raises(ConfigError):
        Budget(depth=0)


def test_error_exit_codes():
    assert ConfigError("x").exit_code == 2
    assert InputError("x").exit_code == 2
    assert HorizonTooLarge(10, 5).exit_code == 1
    assert LockTimeout("x").exit_code == 1


def test_lock_is_exclusive(tmp_path):
    directory = str(tmp_path / "artifacts")
    with AtomicLock(directory, timeout_seconds=1) as held:
        assert held.lock_file.endswith(LOCK_NAME)
        with pytest.raises(LockTimeout):
            AtomicLock(directory, timeout_seconds=0.2).acquire()
    # released on exit
    with AtomicLock(directory, timeout_seconds=0.2):
        pass


def test_log_lines_carry_level_and_tag():
    stream = io.StringIO()
    root = logging.getLogger()
    level = root.level
    handler = setup_logging("INFO", color=False, stream=stream)
    try:
        logging.getLogger("tentacle.planner.search").info("[Planner] hello")
        logging.getLogger("tentacle.planner.search").debug("[Planner] hidden")
    finally:
        root.removeHandler(handler)
        root.setLevel(level)
    text = stream.getvalue()
    assert "[    INFO] [Planner] hello" in text
    assert "hidden" not in text
    assert "\033[" not in text
