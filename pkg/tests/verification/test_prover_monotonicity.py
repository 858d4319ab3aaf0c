"""
Verification Script: Prover Monotonicity
Reason: Verify that appending literals over unrelated predicates to Γ never
loses a proof, including when the instantiation cap is tight.
Scenario:
- Every golden problem and 60 forward-derived problems, each re-proved after
  appending 1 to 12 seeded clutter literals (fresh predicates over existing
  constants, new moments and new Room terms).
- A rule whose instantiation needs the second of two candidates, proved
  under a cap of exactly two before and after clutter.
- Expected: every goal proved before is proved after, and the checker
  accepts the new proof against the enlarged Γ.
"""

import random

import pytest

from fixtures.generator import CLUTTER_SIGNATURE, ForwardDerivation, clutter_literals
from fixtures.golden import GOLDEN
from fixtures.kernel import kb, signature
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.parser import parse_formula
from tentacle.kernel.printer import pretty
from tentacle.prover.checker import check
from tentacle.prover.rules import Budget
from tentacle.prover.search import prove

pytestmark = pytest.mark.verification

SEED = 99
ROUNDS = 5
DERIVED = 60


def _cluttered(gamma, literals):
    return gamma.extend(literals, prefix="clutter")


def _still_proved(gamma, goal, literals, budget=Budget()):
    before = prove(gamma, goal, budget)
    assert before, f"{pretty(goal)}: no proof before clutter"
    bigger = _cluttered(gamma, literals)
    after = prove(bigger, goal, budget)
    if not after:
        return f"{pretty(goal)} lost after {len(literals)} literals (exhausted={after.exhausted})"
    verdict = check(after, bigger)
    if not verdict:
        return f"{pretty(goal)}: rejected at {verdict.path}: {verdict.reason}"
    return None


def test_golden_problems_survive_clutter_verification():
    sig = signature(CLUTTER_SIGNATURE)
    rng = random.Random(SEED)
    failures = []
    for problem in GOLDEN:
        gamma = kb(*problem.gamma, sig=sig)
        goal = parse_formula(problem.goal, sig)
        for _ in range(ROUNDS):
            literals = clutter_literals(sig, rng, rng.randint(1, 12))
            failure = _still_proved(gamma, goal, literals)
            if failure:
                failures.append(f"{problem.name}: {failure}")
    print(f"\n[Monotonicity] {len(GOLDEN) * ROUNDS} golden variants, {len(failures)} lost")
    assert not failures, failures[:5]


def test_derived_problems_survive_clutter_verification():
    sig = signature(CLUTTER_SIGNATURE)
    rng = random.Random(SEED + 1)
    failures = []
    for _ in range(DERIVED):
        derivation = ForwardDerivation(sig, rng)
        derivation.seed()
        steps = derivation.derive(4)
        gamma = KnowledgeBase(sig)
        for formula in derivation.gamma:
            gamma.add(formula)
        literals = clutter_literals(sig, rng, rng.randint(1, 12))
        for _, goal in steps:
            failure = _still_proved(gamma, goal, literals)
            if failure:
                failures.append(failure)
    print(f"\n[Monotonicity] {DERIVED} derived bases, {len(failures)} lost")
    assert not failures, failures[:5]


def test_tight_instantiation_cap_survives_clutter():
    sig = signature(CLUTTER_SIGNATURE)
    # the antecedent is not a literal, so r is filled from the Room universe: kitchen, then hall
    gamma = kb("(forall (r Room) (implies (not (not (clean r))) q))", "(clean hall)", sig=sig)
    goal = parse_formula("q", sig)
    tight = Budget(candidates=2)
    assert not prove(gamma, goal, Budget(candidates=1))

    clutter = [parse_formula(text, sig) for text in (
        "(dusty (wing kitchen) 7)", "(dusty (wing hall) 8)", "(not (dusty (wing (wing hall)) 9))",
        "(idle jack running)", "(dusty kitchen 6)",
    )]
    assert _still_proved(gamma, goal, clutter, tight) is None
    # each clutter literal on its own, then all of them in the other order
    for literal in clutter:
        assert _still_proved(gamma, goal, [literal], tight) is None
    assert _still_proved(gamma, goal, clutter[::-1], tight) is None
