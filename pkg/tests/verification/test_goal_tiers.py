"""
Verification Script: Goal Tiers
Reason: Verify that the planner handles propositional, first-order and nested
belief goals with the same machinery.
Scenario:
- Capabilities: a can alpha, b can beta, at every moment.
- Tier 1: q, reached by a's alpha strictly before b's beta.
- Tier 2: (forall (s Room) (clean s)), reached by a's alpha.
- Tier 3: a believes at 5 that b believes at 5 every room is clean,
  reached by b's beta before moment 5.
- Expected: each tier has a plan, and each plan's proof checks.
"""

import pytest

from fixtures.kernel import kb
from tentacle.kernel.parser import parse_formula
from tentacle.planner.search import PlanFound, PlanningProblem, search
from tentacle.prover.checker import check

pytestmark = pytest.mark.verification

CAPABILITIES = ["(forall (t Moment) (can a alpha t))", "(forall (t Moment) (can b beta t))"]

TIERS = [
    (
        "propositional",
        "q",
        "(forall (u Moment) (forall (v Moment) (implies (and (happens (action a alpha) u)"
        " (happens (action b beta) v) (prior u v)) q)))",
        "[(a, alpha, 1), (b, beta, 2)]",
    ),
    (
        "first-order",
        "(forall (s Room) (clean s))",
        "(forall (r Room) (forall (u Moment) (implies (happens (action a alpha) u) (clean r))))",
        "[(a, alpha, 1)]",
    ),
    (
        "nested-belief",
        "(B a 5 (B b 5 (forall (r Room) (clean r))))",
        "(forall (u Moment) (implies (and (happens (action b beta) u) (prior u 5))"
        " (B a 5 (B b 5 (forall (r Room) (clean r))))))",
        "[(b, beta, 1)]",
    ),
]


@pytest.mark.parametrize("name, goal, rule, expected", TIERS, ids=[t[0] for t in TIERS])
def test_goal_tier_verification(name, goal, rule, expected):
    gamma = kb(rule, *CAPABILITIES)
    sig = gamma.signature
    problem = PlanningProblem(
        gamma=gamma,
        planner=sig.constant("a"),
        goal=parse_formula(goal, sig),
        time=0,
        pool=(sig.constant("a"), sig.constant("b")),
    )
    print(f"\n[Tiers] {name}: planning for {goal}")
    result = search(problem)
    assert isinstance(result, PlanFound), f"{name}: {result.reasons()}"
    print(f"[Tiers] {name}: {result.plan.describe()} after {result.examined} candidates")
    assert result.plan.describe() == expected
    verdict = check(result.proof, result.kb)
    assert verdict, f"{name}: rejected at {verdict.path}: {verdict.reason}"
    print(f"[Tiers] SUCCESS: {name}")
