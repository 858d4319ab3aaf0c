"""Tentacular agents: contracts, goal generation, declaration protocols and the world loop."""

from tentacle.agents.goals import GoalRecord, NoGoal, generate_goal, planning_base  # noqa: F401
from tentacle.agents.obligations import Resolution, held_oughts, resolve_obligations  # noqa: F401
from tentacle.agents.protocols import Episode, observe, run_level1, run_level2  # noqa: F401
from tentacle.agents.runtime import grant_prerequisites, run_world, step_world  # noqa: F401
from tentacle.agents.state import AgentSpec, Artifact, Mode, ScheduledEvent, World  # noqa: F401
from tentacle.agents.transcript import Transcript  # noqa: F401
