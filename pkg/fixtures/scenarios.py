"""
Shipped scenario loading. Scenario runs are the slowest thing the suite
does, so the storm and monoxide worlds are run once per session and shared.
"""

import os

import pytest

from tentacle.agents.runtime import run_world
from tentacle.scenario import build_world, load_scenario
from utils.settings import Settings

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SCENARIO_DIR = os.path.join(ROOT_DIR, "config", "scenarios")
GOLDEN_DIR = os.path.join(ROOT_DIR, "config", "golden")


def scenario_path(name: str) -> str:
    return os.path.join(SCENARIO_DIR, f"{name}.tai")


def load_shipped(name: str):
    with open(scenario_path(name), encoding="utf-8") as handle:
        return load_scenario(handle.read())


def run_shipped(name: str, **overrides):
    """Build and run a shipped scenario with default settings; env values are ignored."""
    world = build_world(load_shipped(name), Settings(), **overrides)
    return run_world(world)


@pytest.fixture(scope="session")
def storm_world():
    print("\n[Scenario] running storm...")
    return run_shipped("storm")


@pytest.fixture(scope="session")
def monoxide_world():
    print("\n[Scenario] running monoxide...")
    return run_shipped("monoxide")


# Two agents, one goal that needs both of them: a does alpha, then b does beta.
RELAY_SCENARIO = """
(constant p Boolean)
(constant q Boolean)
(constant alpha ActionType)
(constant beta ActionType)
(agent a {mode})
(agent b level1)
(formula relay
  (forall (u Moment) (forall (v Moment)
    (implies (and (happens (action a alpha) u) (happens (action b beta) v) (prior u v)) q))))
(contract a (implies p q))
(percept 1 a p)
(config ticks 5)
"""

CAN_A = "(forall (t Moment) (can a alpha t))"
CAN_B = "(forall (t Moment) (can b beta t))"


def relay_scenario(mode: str = "level1", extra: str = ""):
    return load_scenario(RELAY_SCENARIO.format(mode=mode) + extra)


def relay_world(mode: str = "level1", extra: str = "", **overrides):
    """Unrun world for the relay scenario; `extra` appends forms."""
    return build_world(relay_scenario(mode, extra), Settings(), **overrides)
