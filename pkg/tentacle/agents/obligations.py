"""
Obligation flavors and override.

Each held Ought is read at every moment in [now, now+H]. An instance takes
part only when its prescribed action is a (¬)happens(action(a, α), t)
literal and its condition holds in the planning base. A moral instance that
cannot be jointly satisfied with a legal one suspends the whole legal clause
for the episode; two moral instances in conflict halt the episode. The
prohibitions left standing become planning constraints.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from tentacle.agents.goals import agent_view
from tentacle.agents.state import AgentSpec, World
from tentacle.errors import UnresolvedConflict
from tentacle.kernel.formulas import Flavor, ForAll, Formula, Ought
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.printer import pretty
from tentacle.kernel.sorts import MOMENT
from tentacle.kernel.substitution import instantiate
from tentacle.kernel.terms import moment
from tentacle.prover.rules import Budget, Inconsistent, Proof
from tentacle.prover.search import Prover, consistent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Suspension:
    clause: Formula
    moral: Ought
    legal: Ought
    refutation: Proof
    kb: KnowledgeBase


@dataclass(frozen=True)
class Resolution:
    kept: Tuple[Formula, ...]
    suspended: Tuple[Suspension, ...] = ()
    constraints: Tuple[Formula, ...] = ()


def _ought_of(clause: Formula):
    body = clause.body if isinstance(clause, ForAll) and clause.var.sort == MOMENT else clause
    return body if isinstance(body, Ought) else None


def held_oughts(world: World, spec: AgentSpec) -> List[Formula]:
    """Ought clauses (possibly ∀t-led) for this agent, from Γ and its store, in order."""
    found: List[Formula] = []
    for formula in agent_view(world, spec).formulas:
        ought = _ought_of(formula)
        if ought is not None and ought.agent == spec.term and formula not in found:
            found.append(formula)
    return found


def _instances(clause: Formula, now: int, horizon: int) -> List[Ought]:
    if isinstance(clause, ForAll):
        return [instantiate(clause, moment(t)) for t in range(now, now + horizon + 1)]
    return [clause]


def resolve_obligations(spec: AgentSpec, oughts: Sequence[Formula], base: KnowledgeBase,
                        now: int, horizon: int, budget: Budget = Budget()) -> Resolution:
    prover = Prover(base, budget)
    live = []
    for clause in oughts:
        for instance in _instances(clause, now, horizon):
            if instance.action_literal() is None:
                continue
            if prover.prove(instance.condition):
                live.append((clause, instance))

    moral = [(c, i) for c, i in live if i.flavor == Flavor.MORAL]
    legal = [(c, i) for c, i in live if i.flavor == Flavor.LEGAL]

    for n, (first_clause, first) in enumerate(moral):
        for second_clause, second in moral[n + 1:]:
            if second_clause == first_clause:
                continue
            outcome = consistent(base, [first.action, second.action], budget)
            if isinstance(outcome, Inconsistent):
                logger.error("[Obligations] %s: moral conflict %s vs %s", spec.name,
                             pretty(first), pretty(second))
                raise UnresolvedConflict((first, second), outcome.refutation)

    suspended: List[Suspension] = []
    for legal_clause, instance in legal:
        if any(s.clause == legal_clause for s in suspended):
            continue
        for _, duty in moral:
            outcome = consistent(base, [duty.action, instance.action], budget)
            if isinstance(outcome, Inconsistent):
                logger.info("[Obligations] %s: %s overrides %s; legal clause suspended",
                            spec.name, pretty(duty), pretty(instance))
                suspended.append(Suspension(legal_clause, duty, instance, outcome.refutation, outcome.base))
                break

    kept = tuple(c for c in oughts if not any(s.clause == c for s in suspended))
    constraints: List[Formula] = []
    for clause, instance in live:
        if clause in kept and not instance.action_literal().positive:
            if instance.action not in constraints:
                constraints.append(instance.action)
    return Resolution(kept, tuple(suspended), tuple(constraints))
