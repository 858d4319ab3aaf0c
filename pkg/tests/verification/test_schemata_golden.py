"""
Verification Script: Schemata Golden Suite
Reason: Verify that every modal schema instance (IK, IB, I4, I13, I14) and the
classical golden problems are proved, accepted by the independent checker,
and that the whole suite stays under one second.
"""

import time

import pytest

from fixtures.golden import GOLDEN
from tentacle.prover.checker import check
from tentacle.prover.rules import RuleId
from tentacle.prover.search import prove

pytestmark = pytest.mark.verification

SCHEMATA = {RuleId.IK, RuleId.IB, RuleId.I4, RuleId.I13, RuleId.I14}


def test_schemata_golden_verification():
    print("\n[Golden] proving golden problems...")
    started = time.perf_counter()
    seen = set()
    for problem in GOLDEN:
        gamma, goal = problem.build()
        proof = prove(gamma, goal)
        assert proof, f"{problem.name}: no proof"
        verdict = check(proof, gamma)
        assert verdict, f"{problem.name}: rejected at {verdict.path}: {verdict.reason}"
        seen.add(proof.rule)
        print(f"[Golden] {problem.name}: {proof.rule.value}, {proof.size} nodes")
    elapsed = time.perf_counter() - started
    print(f"[Golden] SUCCESS: {len(GOLDEN)} problems in {elapsed:.3f}s")
    assert SCHEMATA <= seen
    assert elapsed < 1.0, f"golden suite took {elapsed:.2f}s"
