"""
Plans as values and as Plan-sorted terms.

A plan reifies right-nested:
    plan-step(a1, α1, t1, plan-step(a2, α2, t2, ... plan-end(t)))
where t is the planning time, so `interpret(reify(p)) == p` including the
empty plan. `plan(ρ, agents)` takes its agents as an agents-cons list.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from tentacle.errors import MalformedPlanTerm
from tentacle.kernel.formulas import And, Atom, Exists, Formula, Implies, Not, Says
from tentacle.kernel.printer import pretty
from tentacle.kernel.signature import (
    AGENTS_CONS, AGENTS_NIL, PERFORMED, PLAN_END, PLAN_PRED, PLAN_STEP, WITHIN,
)
from tentacle.kernel.sorts import PLAN
from tentacle.kernel.terms import Application, Term, Variable, apply, int_value, moment
from tentacle.kernel.vocabulary import does


@dataclass(frozen=True)
class PlanStep:
    agent: Term
    action: Term
    time: int

    def happens(self) -> Formula:
        return does(self.agent, self.action, self.time)

    def describe(self) -> str:
        return f"({pretty(self.agent)}, {pretty(self.action)}, {self.time})"


@dataclass(frozen=True)
class Plan:
    steps: Tuple[PlanStep, ...]
    time: int

    def __post_init__(self):
        previous = self.time
        for step in self.steps:
            if step.time <= previous:
                raise MalformedPlanTerm(
                    f"Plan step {step.describe()} is not strictly after moment {previous}")
            previous = step.time

    @property
    def agents(self) -> Tuple[Term, ...]:
        seen: List[Term] = []
        for step in self.steps:
            if step.agent not in seen:
                seen.append(step.agent)
        return tuple(seen)

    def happens_facts(self) -> List[Formula]:
        return [step.happens() for step in self.steps]

    def describe(self) -> str:
        if not self.steps:
            return "[]"
        return "[" + ", ".join(step.describe() for step in self.steps) + "]"

    def __len__(self):
        return len(self.steps)


def reify(plan: Plan) -> Term:
    term = apply(PLAN_END, (moment(plan.time),))
    for step in reversed(plan.steps):
        term = apply(PLAN_STEP, (step.agent, step.action, moment(step.time), term))
    return term


def interpret(term: Term) -> Plan:
    if not term.sort.is_subsort_of(PLAN):
        raise MalformedPlanTerm(f"Expected a Plan term, found sort {term.sort.name}")
    steps: List[PlanStep] = []
    node = term
    while isinstance(node, Application) and node.symbol == PLAN_STEP:
        agent, action, when, node = node.args
        value = int_value(when)
        if value is None or not agent.is_ground or not action.is_ground:
            raise MalformedPlanTerm(f"Plan step at {pretty(when)} is not ground")
        steps.append(PlanStep(agent, action, value))
    if not (isinstance(node, Application) and node.symbol == PLAN_END):
        raise MalformedPlanTerm(f"Plan term does not end in plan-end: {pretty(node)}")
    start = int_value(node.args[0])
    if start is None:
        raise MalformedPlanTerm(f"Plan term has a non-integer planning time {pretty(node.args[0])}")
    return Plan(tuple(steps), start)


def agent_list(agents: Sequence[Term]) -> Term:
    term: Term = AGENTS_NIL
    for agent in reversed(tuple(agents)):
        term = apply(AGENTS_CONS, (agent, term))
    return term


def performed(plan_term: Term) -> Atom:
    return Atom(apply(PERFORMED, (plan_term,)))


def plan_atom(plan_term: Term, agents: Iterable[Term]) -> Atom:
    return Atom(apply(PLAN_PRED, (plan_term, agent_list(tuple(agents)))))


def plan_says(speaker: Term, time: int, plan: Plan, goal: Formula) -> Says:
    """S(τ, t, plan(ρ, agents) ∧ (performed(ρ) → g)); τ is always among the agents."""
    rho = reify(plan)
    agents = plan.agents if speaker in plan.agents else (speaker,) + plan.agents
    body = And((plan_atom(rho, agents), Implies(performed(rho), goal)))
    return Says(speaker, moment(time), body)


def nonexistence_says(speaker: Term, time: int, horizon: int, goal: Formula) -> Says:
    """S(τ, t, ¬∃ρ:Plan (plan(ρ, [τ]) ∧ within(ρ, t+H) ∧ (performed(ρ) → g)))"""
    rho = Variable("rho", PLAN)
    body = And((
        plan_atom(rho, (speaker,)),
        Atom(apply(WITHIN, (rho, moment(time + horizon)))),
        Implies(performed(rho), goal),
    ))
    return Says(speaker, moment(time), Not(Exists(rho, body)))
