"""
Consistent-plan search.

A candidate is a plan when
    1. every step's can(a, α, t) is provable from the planning base,
    2. the base plus every happens(action(a, α), t) survives the bounded
       consistency check (jointly; stepwise when the problem asks for it),
    3. the goal is provable from the base plus those happens facts.
Candidates are tried in canonical order and the first success wins; when
none succeeds the failures are collected into a nonexistence certificate.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from tentacle.kernel.formulas import Formula
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.printer import pretty
from tentacle.kernel.terms import Term
from tentacle.kernel.vocabulary import can
from tentacle.planner.catalog import (
    CatalogEntry, candidate_count, catalog_from, catalog_hash, catalog_pairs,
    enumerate_candidates,
)
from tentacle.planner.certificate import (
    INCONSISTENT, MISSING_CAN, NOT_ENTAILED, CandidateRecord, NonexistenceCertificate,
)
from tentacle.planner.plans import Plan, PlanStep
from tentacle.prover.rules import Budget, Inconsistent, Proof
from tentacle.prover.search import Prover, consistent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlanningProblem:
    gamma: KnowledgeBase
    planner: Term
    goal: Formula
    time: int
    pool: Tuple[Term, ...]
    horizon: int = 3
    catalog: Optional[Tuple[CatalogEntry, ...]] = None
    budget: Budget = Budget()
    max_steps: int = 3
    ceiling: int = 20000
    constraints: Tuple[Formula, ...] = ()
    stepwise: bool = False

    def base(self) -> KnowledgeBase:
        if not self.constraints:
            return self.gamma
        return self.gamma.extend(self.constraints, prefix="constraint")

    def resolved_catalog(self) -> Tuple[CatalogEntry, ...]:
        if self.catalog is not None:
            return tuple(e for e in self.catalog if e.agent in self.pool)
        return catalog_from(self.gamma.formulas, self.pool)

    def restricted(self, pool) -> "PlanningProblem":
        return PlanningProblem(
            self.gamma, self.planner, self.goal, self.time, tuple(pool), self.horizon,
            self.catalog, self.budget, self.max_steps, self.ceiling, self.constraints,
            self.stepwise,
        )


@dataclass(frozen=True)
class PlanVerdict:
    """yes, or no with a reason (missing-can with the step, or inconsistent with a refutation)."""
    ok: bool
    reason: Optional[str] = None
    step: Optional[PlanStep] = None
    refutation: Optional[Proof] = None
    base: Optional[KnowledgeBase] = None

    def __bool__(self):
        return self.ok


YES = PlanVerdict(True)


@dataclass(frozen=True)
class NotShown:
    goal: Formula
    budget: Budget
    exhausted: Optional[str] = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class PlanFound:
    plan: Plan
    proof: Proof
    kb: KnowledgeBase  # base plus the plan's happens facts; the proof checks against it
    examined: int = 1


def plan_base(base: KnowledgeBase, plan: Plan) -> KnowledgeBase:
    if not plan.steps:
        return base
    return base.extend(plan.happens_facts(), prefix="step")


@dataclass
class _CanCache:
    prover: Prover
    seen: dict = field(default_factory=dict)

    def provable(self, step: PlanStep) -> bool:
        key = (step.agent, step.action, step.time)
        if key not in self.seen:
            self.seen[key] = bool(self.prover.prove(can(step.agent, step.action, step.time)))
        return self.seen[key]


def is_consistent_plan(plan: Plan, gamma: KnowledgeBase, budget: Budget = Budget(),
                       stepwise: bool = False, _cans: Optional[_CanCache] = None) -> PlanVerdict:
    cans = _cans or _CanCache(Prover(gamma, budget))
    for step in plan.steps:
        if not cans.provable(step):
            return PlanVerdict(False, MISSING_CAN, step=step)
    facts = plan.happens_facts()
    if not facts:
        return YES
    prefixes = [facts[:i] for i in range(1, len(facts) + 1)] if stepwise else [facts]
    for prefix in prefixes:
        outcome = consistent(gamma, prefix, budget)
        if isinstance(outcome, Inconsistent):
            return PlanVerdict(False, INCONSISTENT, refutation=outcome.refutation, base=outcome.base)
    return YES


def satisfies(plan: Plan, gamma: KnowledgeBase, goal: Formula, budget: Budget = Budget()):
    """Proof of `goal` from gamma plus the plan's happens facts, or NotShown."""
    result = Prover(plan_base(gamma, plan), budget).prove(goal)
    if not result:
        return NotShown(goal, budget, result.exhausted)
    return result


def search(problem: PlanningProblem):
    """PlanFound for the first canonical candidate that works, else a NonexistenceCertificate."""
    catalog = problem.resolved_catalog()
    pairs = catalog_pairs(catalog, problem.pool)
    base = problem.base()
    count = candidate_count(len(pairs), problem.horizon, problem.max_steps)
    logger.info("[Planner] %s: goal %s, pool {%s}, %d candidates", pretty(problem.planner),
                pretty(problem.goal), ", ".join(pretty(a) for a in problem.pool), count)
    cans = _CanCache(Prover(base, problem.budget))
    records: List[CandidateRecord] = []
    for plan in enumerate_candidates(pairs, problem.time, problem.horizon, problem.max_steps,
                                     problem.ceiling):
        verdict = is_consistent_plan(plan, base, problem.budget, problem.stepwise, cans)
        if not verdict:
            logger.debug("[Planner] %s rejected: %s", plan.describe(), verdict.reason)
            records.append(CandidateRecord(plan, verdict.reason, step=verdict.step,
                                           refutation=verdict.refutation))
            continue
        outcome = satisfies(plan, base, problem.goal, problem.budget)
        if outcome:
            logger.info("[Planner] plan %s satisfies %s (%d candidates examined)",
                        plan.describe(), pretty(problem.goal), len(records) + 1)
            return PlanFound(plan, outcome, plan_base(base, plan), len(records) + 1)
        records.append(CandidateRecord(plan, NOT_ENTAILED, exhausted=outcome.exhausted))

    assert len(records) == count, f"enumerated {len(records)} of {count} candidates"
    logger.info("[Planner] no plan for %s over {%s}: certificate of %d candidates",
                pretty(problem.goal), ", ".join(pretty(a) for a in problem.pool), count)
    return NonexistenceCertificate(
        goal=problem.goal,
        planner=problem.planner,
        agents=problem.pool,
        horizon=problem.horizon,
        time=problem.time,
        max_steps=problem.max_steps,
        catalog=catalog,
        catalog_hash=catalog_hash(catalog),
        count=count,
        budget=problem.budget,
        stepwise=problem.stepwise,
        records=tuple(records),
    )
