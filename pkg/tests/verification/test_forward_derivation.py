"""
Verification Script: Forward Derivation Certification
Reason: Verify that goals built by applying ∧I, ∨I, →E, IK and IB forward
from a random ground Γ are proved, and that the checker accepts every proof.
Scenario:
- 150 seeded bases of atoms and K / B facts, 8 forward steps each; the
  implications a step consumes are added to Γ.
- Expected: every derived goal is proved from the final Γ and the proof is
  accepted.
"""

import random
from collections import Counter

import pytest

from fixtures.generator import ForwardDerivation
from fixtures.kernel import signature
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.printer import pretty
from tentacle.prover.checker import check
from tentacle.prover.search import prove

pytestmark = pytest.mark.verification

SEED = 4711
BASES = 150
STEPS = 8


def test_forward_derived_goals_are_certified_verification():
    sig = signature()
    rng = random.Random(SEED)
    rules = Counter()
    failures = []
    for index in range(BASES):
        derivation = ForwardDerivation(sig, rng)
        derivation.seed()
        steps = derivation.derive(STEPS)
        gamma = KnowledgeBase(sig)
        for formula in derivation.gamma:
            gamma.add(formula)
        for rule, goal in steps:
            rules[rule] += 1
            proof = prove(gamma, goal)
            if not proof:
                failures.append(f"base {index}: {rule} {pretty(goal)}: exhausted={proof.exhausted}")
                continue
            verdict = check(proof, gamma)
            if not verdict:
                failures.append(f"base {index}: {rule} {pretty(goal)}: rejected at {verdict.path}: {verdict.reason}")
    print(f"\n[Forward] {BASES * STEPS} goals, {dict(rules)}, {len(failures)} failures")
    assert set(rules) == {"and-intro", "or-intro", "imp-elim", "IK", "IB"}
    assert not failures, failures[:5]
