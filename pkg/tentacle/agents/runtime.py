"""
The perceive / plan / act cycle.

One tick:
    1. the clock advances
    2. scheduled percepts, messages and observations for the tick arrive
    3. plan steps due at the tick execute (happens facts enter Γ); a plan
       whose last step ran completes. Its goal is never added to Γ; a Says
       goal is delivered only once Γ entails it
    4. each agent, in declaration order, may generate one goal and run its
       level's protocol on it
"""

import logging

from tentacle.agents.goals import generate_goal, planning_base
from tentacle.agents.obligations import held_oughts, resolve_obligations
from tentacle.agents.protocols import deliver, run_level1, run_level2
from tentacle.agents.state import Execution, Mode, ScheduledEvent, World
from tentacle.errors import EpisodeFailed, UnresolvedConflict
from tentacle.kernel.formulas import Believes, Knows, Perceives, Says
from tentacle.kernel.knowledge import DERIVED, PERCEPT
from tentacle.kernel.printer import pretty
from tentacle.kernel.terms import moment
from tentacle.kernel.vocabulary import can
from tentacle.planner.catalog import can_entry
from tentacle.prover.rules import Inconsistent
from tentacle.prover.search import Prover, consistent

logger = logging.getLogger(__name__)


def grant_prerequisites(world: World):
    """Level-1* agents know every capability fact in Γ from moment 0."""
    capabilities = [f for f in world.gamma.formulas if can_entry(f) is not None]
    for name, spec in list(world.agents.items()):
        if spec.mode != Mode.LEVEL1:
            continue
        for fact in capabilities:
            spec = spec.remember(Knows(spec.term, moment(0), fact), DERIVED)
        world.update(spec)


def _arrive(world: World, event: ScheduledEvent):
    tick = world.clock
    if event.kind == "percept":
        spec = world.agents[event.agent]
        world.gamma.add(Perceives(spec.term, moment(tick), event.formula), provenance=PERCEPT)
        world.update(spec.remember(Believes(spec.term, moment(tick), event.formula), PERCEPT))
        world.transcript.add(tick, "percept", event.agent, pretty(event.formula))
    elif event.kind == "message":
        says = event.formula
        world.gamma.add(says, provenance=PERCEPT)
        world.messages.append(says)
        deliver(world, says)
        world.transcript.add(tick, "message", None, pretty(says))
    elif event.kind == "observe":
        world.observations.setdefault(event.agent, []).append(event.formula)
        world.transcript.add(tick, "observe", event.agent, f"queued {pretty(event.formula)}")


def _complete(world: World, execution: Execution):
    world.transcript.add(world.clock, "complete", execution.agent, pretty(execution.goal))
    if not isinstance(execution.goal, Says):
        return
    if not Prover(world.gamma, world.budget).prove(execution.goal):
        logger.warning("[World] %s: %s does not follow from Γ; not delivered",
                       execution.agent, pretty(execution.goal))
        return
    world.messages.append(execution.goal)
    deliver(world, execution.goal)


def _execute(world: World, execution: Execution):
    for step in execution.plan.steps[execution.done:]:
        if step.time != world.clock:
            break
        fact = step.happens()
        capable = Prover(world.gamma, world.budget).prove(can(step.agent, step.action, step.time))
        clash = consistent(world.gamma, [fact], world.budget) if capable else None
        if not capable or isinstance(clash, Inconsistent):
            reason = "no such capability" if not capable else "inconsistent with Γ"
            world.transcript.add(world.clock, "divergence", execution.agent,
                                 f"step {step.describe()} fails against Γ: {reason}")
            logger.warning("[World] %s: step %s diverges (%s)", execution.agent, step.describe(), reason)
            execution.aborted = True
            return
        world.gamma.add(fact, provenance=DERIVED)
        world.transcript.add(world.clock, "execute", pretty(step.agent), pretty(fact))
        execution.done += 1
    if execution.done == len(execution.plan.steps):
        _complete(world, execution)


def _episode(world: World, name: str):
    record = generate_goal(world.agents[name], world)
    if not record:
        return
    proof_name = world.artifact(f"{name}-justification", "proof", record.proof, record.kb)
    world.transcript.add(world.clock, "goal", name,
                         f"{pretty(record.goal)} because {pretty(record.condition)}", (proof_name,))
    spec = world.agents[name]
    try:
        base = planning_base(world, spec)
        resolution = resolve_obligations(spec, held_oughts(world, spec), base, world.clock,
                                         world.settings.horizon, world.budget)
        for suspension in resolution.suspended:
            ref = world.artifact(f"{name}-suspension", "refutation", suspension.refutation, suspension.kb)
            world.transcript.add(world.clock, "suspension", name,
                                 f"{pretty(suspension.legal)} yields to {pretty(suspension.moral)}", (ref,))
        run = run_level1 if spec.mode == Mode.LEVEL1 else run_level2
        episode = run(world.agents[name], record, world, resolution.constraints)
        if not episode.plan.steps:
            execution = world.executions.pop()
            _complete(world, execution)
    except EpisodeFailed as exc:
        world.transcript.add(world.clock, "failure", name, f"no plan for {pretty(exc.goal)}")
        logger.warning("[World] %s: episode failed for %s", name, pretty(exc.goal))
    except UnresolvedConflict as exc:
        refs = ()
        if exc.refutation is not None:
            kb = base.extend([o.action for o in exc.obligations], prefix="extra")
            refs = (world.artifact(f"{name}-conflict", "refutation", exc.refutation, kb),)
        world.transcript.add(world.clock, "conflict", name,
                             " vs ".join(pretty(o) for o in exc.obligations), refs)
        logger.error("[World] %s: unresolved moral conflict, episode halted", name)


def step_world(world: World) -> World:
    world.clock += 1
    logger.debug("[World] tick %d", world.clock)
    for event in world.schedule:
        if event.tick == world.clock:
            _arrive(world, event)
    for execution in world.executions:
        if not execution.finished:
            _execute(world, execution)
    for name in list(world.agents):
        _episode(world, name)
    return world


def run_world(world: World, ticks: int = None) -> World:
    ticks = world.ticks if ticks is None else ticks
    logger.info("[World] running %d ticks with %d agents", ticks, len(world.agents))
    while world.clock < ticks:
        step_world(world)
    return world
