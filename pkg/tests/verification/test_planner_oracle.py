"""
Verification Script: Planner / Brute-Force Oracle Sweep
Reason: Verify that the canonical plan search and an independent brute-force
enumeration agree on plan existence for every small planning problem.
Scenario:
- Agents a and b; catalogs are every set of at most two of the four
  (agent, action type) capabilities; horizons 1 to 3; five fixed goals.
- Expected: search finds a plan exactly when the oracle does, found plans
  check, and every nonexistence certificate re-verifies.
"""

from itertools import combinations

import pytest

from fixtures.kernel import kb
from tentacle.kernel.parser import parse_formula
from tentacle.planner.certificate import check_certificate
from tentacle.planner.oracle import brute_force
from tentacle.planner.search import PlanFound, PlanningProblem, search
from tentacle.prover.checker import check

pytestmark = [pytest.mark.verification, pytest.mark.slow]

CAPABILITIES = [("a", "alpha"), ("a", "beta"), ("b", "alpha"), ("b", "beta")]

RULES = [
    "p",
    # q needs a's alpha strictly before b's beta
    "(forall (u Moment) (forall (v Moment) (implies (and (happens (action a alpha) u)"
    " (happens (action b beta) v) (prior u v)) q)))",
    # r needs a's alpha
    "(forall (u Moment) (implies (happens (action a alpha) u) r))",
    # the kitchen is clean after b's beta then b's alpha
    "(forall (u Moment) (forall (v Moment) (implies (and (happens (action b beta) u)"
    " (happens (action b alpha) v) (prior u v)) (clean kitchen))))",
]

GOALS = ["q", "r", "p", "(clean kitchen)", "(clean hall)"]


def _catalogs():
    for size in range(0, 3):
        yield from combinations(CAPABILITIES, size)


def _problem(catalog, horizon, goal):
    cans = [f"(forall (t Moment) (can {agent} {act} t))" for agent, act in catalog]
    gamma = kb(*RULES, *cans)
    sig = gamma.signature
    return PlanningProblem(
        gamma=gamma,
        planner=sig.constant("a"),
        goal=parse_formula(goal, sig),
        time=0,
        pool=(sig.constant("a"), sig.constant("b")),
        horizon=horizon,
    )


def test_planner_oracle_verification():
    cases = found_count = 0
    disagreements = []
    for catalog in _catalogs():
        for horizon in (1, 2, 3):
            for goal in GOALS:
                problem = _problem(catalog, horizon, goal)
                result = search(problem)
                oracle = brute_force(problem)
                cases += 1
                if isinstance(result, PlanFound) != (oracle is not None):
                    disagreements.append((catalog, horizon, goal))
                    continue
                if isinstance(result, PlanFound):
                    found_count += 1
                    assert check(result.proof, result.kb), (catalog, horizon, goal)
                else:
                    assert check_certificate(result, problem.base()), (catalog, horizon, goal)

    print(f"\n[Oracle] {cases} problems, {found_count} with plans, {len(disagreements)} disagreements")
    assert cases == 11 * 3 * 5
    assert not disagreements, disagreements[:5]
    # p is always reachable (empty plan); the hall never is
    assert 33 <= found_count < cases - 33
    print("[Oracle] SUCCESS: search and oracle agree on every problem.")
