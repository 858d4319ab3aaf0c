"""
Contracts, doxastic views and goal generation.

An agent's view is Γ plus its own store. Its planning base is Γ plus the
contents of its B/K formulas: τ acts on what it believes, so B(τ,t,φ)
contributes φ and ∀t B(τ,t,φ) contributes ∀t φ, or just φ when t does
not occur in φ.

A contract clause O(a,t,φ,χ) complies as φ → χ; an implication complies as
itself. A clause led by ∀t:Moment is read at now+δ. The clause is
threatened, and χ becomes a goal, once the agent believes or knows φ now.
Prohibitions never produce goals and a clause is engaged at most once.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from tentacle.agents.state import AgentSpec, World
from tentacle.kernel.formulas import (
    Believes, ForAll, Formula, Implies, Knows, Not, Ought, conjoin, free_variables, is_closed,
)
from tentacle.kernel.knowledge import DERIVED, KnowledgeBase
from tentacle.kernel.printer import pretty
from tentacle.kernel.sorts import MOMENT
from tentacle.kernel.substitution import instantiate
from tentacle.kernel.terms import moment
from tentacle.prover.rules import Proof
from tentacle.prover.search import Prover

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoalRecord:
    agent: str
    time: int
    goal: Formula
    condition: Formula
    justification: Formula
    proof: Proof
    kb: KnowledgeBase
    clause: int
    delta: int


@dataclass(frozen=True)
class NoGoal:
    agent: str
    time: int

    def __bool__(self):
        return False


def at_moment(clause: Formula, time: int) -> Formula:
    """Instantiate a leading ∀t:Moment at `time`; other clauses are returned unchanged."""
    if isinstance(clause, ForAll) and clause.var.sort == MOMENT:
        return instantiate(clause, moment(time))
    return clause


def compliance(instance: Formula) -> Formula:
    if isinstance(instance, Ought):
        return Implies(instance.condition, instance.action)
    return instance


def goal_parts(instance: Formula) -> Optional[Tuple[Formula, Formula]]:
    """(condition, goal) for a clause that can produce goals, else None."""
    if isinstance(instance, Ought):
        literal = instance.action_literal()
        if literal is not None and not literal.positive:
            return None
        parts = (instance.condition, instance.action)
    elif isinstance(instance, Implies):
        parts = (instance.antecedent, instance.consequent)
    else:
        return None
    return parts if all(is_closed(p) for p in parts) else None


def store_contents(spec: AgentSpec) -> List[Formula]:
    contents: List[Formula] = []
    for formula in spec.store.formulas:
        body = _content(spec, formula)
        if body is not None and body not in contents:
            contents.append(body)
    return contents


def _content(spec: AgentSpec, formula: Formula) -> Optional[Formula]:
    if isinstance(formula, (Believes, Knows)) and formula.agent == spec.term:
        return formula.body if is_closed(formula.body) else None
    if isinstance(formula, ForAll) and formula.var.sort == MOMENT:
        inner = formula.body
        if isinstance(inner, (Believes, Knows)) and inner.agent == spec.term and inner.time == formula.var:
            if formula.var not in free_variables(inner.body):
                return inner.body if is_closed(inner.body) else None
            lifted = ForAll(formula.var, inner.body)
            return lifted if is_closed(lifted) else None
    return None


def agent_view(world: World, spec: AgentSpec) -> KnowledgeBase:
    return world.gamma.extend(spec.store.formulas, prefix=f"{spec.name}-store")


def planning_base(world: World, spec: AgentSpec) -> KnowledgeBase:
    return world.gamma.extend(store_contents(spec), prefix=f"{spec.name}-belief")


def generate_goal(spec: AgentSpec, world: World) -> Union[GoalRecord, NoGoal]:
    """
    First threatened contract clause, in contract order. On success the
    belief in the condition and the justification
        B(a, now, ¬g → ¬⋀c(a, now+δ))
    are appended to the agent's store and the clause is marked engaged.
    """
    now = world.clock
    ahead = now + world.settings.delta
    prover = None
    for index, clause in enumerate(spec.contract):
        if index in spec.engaged:
            continue
        parts = goal_parts(at_moment(clause, ahead))
        if parts is None:
            continue
        condition, goal = parts
        prover = prover or Prover(agent_view(world, spec), world.budget)
        if not any(prover.prove(modal(spec.term, moment(now), condition)) for modal in (Believes, Knows)):
            continue

        updated = spec.remember(Believes(spec.term, moment(now), condition), DERIVED)
        clauses = conjoin([compliance(at_moment(c, ahead)) for c in spec.contract])
        justification = Believes(spec.term, moment(now), Implies(Not(goal), Not(clauses)))
        view = agent_view(world, updated)
        proof = Prover(view, world.budget).prove(justification)
        if not proof:
            logger.warning("[Goals] %s: justification of %s not shown (%s)",
                           spec.name, pretty(goal), proof.exhausted)
            continue
        updated = updated.remember(justification, DERIVED).engage(index)
        world.update(updated)
        logger.info("[Goals] %s at %d: goal %s", spec.name, now, pretty(goal))
        return GoalRecord(spec.name, now, goal, condition, justification, proof, view, index,
                          world.settings.delta)
    return NoGoal(spec.name, now)
