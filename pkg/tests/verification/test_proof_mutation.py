"""
Verification Script: Proof Mutation Fuzzer
Reason: Verify that the checker rejects proofs damaged at a single node.
Scenario:
- Prove every golden problem.
- Apply 1200 seeded single-node mutations: swap the node's rule, or wrap its
  conclusion in a negation.
- Expected: every mutant is rejected (zero false accepts).
"""

import random
from dataclasses import replace

import pytest

from fixtures.golden import GOLDEN
from tentacle.kernel.formulas import Not
from tentacle.prover.checker import check
from tentacle.prover.rules import RuleId
from tentacle.prover.search import prove

pytestmark = pytest.mark.verification

SEED = 20240611
MUTANTS = 1200
SWAP_TARGETS = [rule for rule in RuleId if rule != RuleId.BOT_E]


def _replace_at(proof, index, mutate):
    """Copy of `proof` with the node at pre-order `index` passed through `mutate`."""
    counter = [0]

    def walk(node):
        here = counter[0]
        counter[0] += 1
        if here == index:
            return mutate(node)
        return replace(node, premises=tuple(walk(p) for p in node.premises))

    return walk(proof)


def _mutations(rng, node):
    options = []
    others = [rule for rule in SWAP_TARGETS if rule != node.rule]
    options.append(("swap", lambda n: replace(n, rule=rng.choice(others))))
    if node.rule != RuleId.BOT_E:
        options.append(("negate", lambda n: replace(n, conclusion=Not(n.conclusion))))
    return options


def test_proof_mutation_verification():
    rng = random.Random(SEED)
    proved = []
    for problem in GOLDEN:
        gamma, goal = problem.build()
        proof = prove(gamma, goal)
        assert proof and check(proof, gamma), problem.name
        proved.append((problem.name, gamma, proof))

    accepted = []
    tally = {"swap": 0, "negate": 0}
    for _ in range(MUTANTS):
        name, gamma, proof = rng.choice(proved)
        nodes = list(proof.nodes())
        index = rng.randrange(len(nodes))
        kind, mutate = rng.choice(_mutations(rng, nodes[index]))
        mutant = _replace_at(proof, index, mutate)
        tally[kind] += 1
        if check(mutant, gamma):
            accepted.append((name, index, kind))

    print(f"\n[Fuzzer] {MUTANTS} mutants: {tally}")
    if accepted:
        print(f"[Fuzzer] FAILURE: accepted mutants {accepted[:10]}")
    assert not accepted, f"{len(accepted)} mutants were accepted"
    print("[Fuzzer] SUCCESS: every mutant rejected.")
