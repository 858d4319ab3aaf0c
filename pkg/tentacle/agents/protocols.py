"""
The Level-1* and Level-2* declaration protocols.

Both look for a plan τ can carry out alone first. If one exists it is
declared directly. Otherwise τ declares, with a certificate, that no solo
plan exists within the horizon, then searches over the whole agent pool and
declares the joint plan with its satisfaction proof. The two levels differ
only in where the catalog comes from: K(τ, t, can(...)) for Level-1*,
B(τ, t, can(...)) for Level-2*.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from tentacle.agents.goals import GoalRecord, planning_base
from tentacle.agents.state import AgentSpec, Execution, Mode, World
from tentacle.errors import EpisodeFailed, SortError
from tentacle.kernel.formulas import Believes, ForAll, Formula, Knows, Ought, Says
from tentacle.kernel.knowledge import DECLARED, PERCEPT
from tentacle.kernel.printer import pretty
from tentacle.kernel.sorts import MOMENT
from tentacle.kernel.terms import moment
from tentacle.planner.catalog import CatalogEntry, can_entry
from tentacle.planner.certificate import NonexistenceCertificate
from tentacle.planner.plans import Plan, nonexistence_says, plan_says
from tentacle.planner.search import PlanFound, PlanningProblem, search

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Episode:
    agent: str
    goal: GoalRecord
    plan: Plan
    found: PlanFound
    solo_certificate: Optional[NonexistenceCertificate]
    declarations: Tuple[Says, ...]


def catalog_for(spec: AgentSpec) -> Tuple[CatalogEntry, ...]:
    modal = Knows if spec.mode == Mode.LEVEL1 else Believes
    entries: List[CatalogEntry] = []
    for formula in spec.store.formulas:
        if isinstance(formula, modal) and formula.agent == spec.term:
            entry = can_entry(formula.body)
            if entry is not None and entry not in entries:
                entries.append(entry)
    return tuple(entries)


def check_evidence(spec: AgentSpec, evidence: Formula):
    """Evidence must be a capability or another agent's contract clause."""
    if can_entry(evidence) is not None:
        return
    clause = evidence
    if isinstance(evidence, ForAll) and evidence.var.sort == MOMENT:
        clause = evidence.body
    if isinstance(clause, Ought) and clause.agent != spec.term:
        return
    raise SortError("a can fact or another agent's contract clause", pretty(evidence),
                    detail=f"observed by {spec.name}")


def observe(spec: AgentSpec, evidence: Formula, time: int) -> AgentSpec:
    check_evidence(spec, evidence)
    return spec.remember(Believes(spec.term, moment(time), evidence), PERCEPT)


# --- declarations ------------------------------------------------------------

def deliver(world: World, says: Says):
    """Addressed Says reach the audience; broadcasts reach every other agent."""
    if says.audience is not None:
        recipients = [world.agent_of(says.audience)]
    else:
        recipients = [s for s in world.agents.values() if s.term != says.agent]
    for recipient in recipients:
        if recipient is None:
            continue
        world.update(recipient.remember(Believes(recipient.term, says.time, says.body), PERCEPT))


def declare(world: World, spec: AgentSpec, says: Says, artifact: str):
    world.gamma.add(says, f"d{len(world.messages) + 1}", DECLARED)
    world.messages.append(says)
    deliver(world, says)
    world.transcript.add(world.clock, "declare", spec.name, pretty(says), (artifact,))
    logger.info("[%s] %s declares %s", spec.mode.value.capitalize(), spec.name, pretty(says))


def _problem(world: World, spec: AgentSpec, record: GoalRecord, constraints) -> PlanningProblem:
    settings = world.settings
    return PlanningProblem(
        gamma=planning_base(world, spec),
        planner=spec.term,
        goal=record.goal,
        time=world.clock,
        pool=world.pool(),
        horizon=settings.horizon,
        catalog=catalog_for(spec),
        budget=world.budget,
        max_steps=settings.max_plan_steps,
        ceiling=settings.plan_ceiling,
        constraints=tuple(constraints),
    )


def _certificate_entry(world: World, spec: AgentSpec, cert: NonexistenceCertificate, base, label: str) -> str:
    name = world.artifact(f"{spec.name}-certificate", "certificate", cert, base)
    reasons = ", ".join(f"{k}={v}" for k, v in cert.reasons().items())
    world.transcript.add(world.clock, "certificate", spec.name,
                         f"{label}: {cert.count} candidates over {{{', '.join(pretty(a) for a in cert.agents)}}}"
                         f" ({reasons})", (name,))
    return name


def _episode(world: World, spec: AgentSpec, record: GoalRecord, constraints=()) -> Episode:
    problem = _problem(world, spec, record, constraints)
    solo = search(problem.restricted((spec.term,)))
    declarations = []
    certificate = None
    if isinstance(solo, PlanFound):
        found = solo
    else:
        certificate = solo
        cert_name = _certificate_entry(world, spec, solo, problem.base(), "no solo plan")
        joint = search(problem)
        if not isinstance(joint, PlanFound):
            _certificate_entry(world, spec, joint, problem.base(), "no joint plan")
            raise EpisodeFailed(record.goal, joint)
        says = nonexistence_says(spec.term, world.clock, problem.horizon, record.goal)
        declare(world, spec, says, cert_name)
        declarations.append(says)
        found = joint

    proof_name = world.artifact(f"{spec.name}-plan", "proof", found.proof, found.kb)
    says = plan_says(spec.term, world.clock, found.plan, record.goal)
    declare(world, spec, says, proof_name)
    declarations.append(says)
    world.transcript.add(world.clock, "plan", spec.name, found.plan.describe())
    world.executions.append(Execution(spec.name, record.goal, found.plan))
    return Episode(spec.name, record, found.plan, found, certificate, tuple(declarations))


def run_level1(spec: AgentSpec, record: GoalRecord, world: World, constraints=()) -> Episode:
    if spec.mode != Mode.LEVEL1:
        raise ValueError(f"{spec.name} is not a Level-1 agent")
    return _episode(world, spec, record, constraints)


def run_level2(spec: AgentSpec, record: GoalRecord, world: World, constraints=()) -> Episode:
    """As Level-1*, then once more after draining queued observations if the first try fails."""
    if spec.mode != Mode.LEVEL2:
        raise ValueError(f"{spec.name} is not a Level-2 agent")
    try:
        return _episode(world, spec, record, constraints)
    except EpisodeFailed:
        queued = world.observations.pop(spec.name, [])
        if not queued:
            raise
        world.transcript.add(world.clock, "retry", spec.name,
                             f"first attempt failed; applying {len(queued)} observation(s)")
    current = world.agents[spec.name]
    for evidence in queued:
        current = observe(current, evidence, world.clock)
        world.transcript.add(world.clock, "observed", spec.name, pretty(evidence))
    world.update(current)
    return _episode(world, current, record, constraints)
