"""
Brute-force plan existence, used to cross-check `search`.

Shares no enumeration code with the planner: every sequence over the
catalog's (agent, action) pairs and every moment in the window is built
with itertools, out-of-order sequences are dropped, and each survivor is
tested with direct prover calls.
"""

from itertools import product
from typing import Optional

from tentacle.kernel.vocabulary import can
from tentacle.planner.plans import Plan, PlanStep
from tentacle.prover.rules import Inconsistent
from tentacle.prover.search import Prover, consistent


def brute_force(problem) -> Optional[Plan]:
    """Some plan for the problem (not necessarily the canonical first), or None."""
    base = problem.base()
    pairs = []
    for entry in problem.resolved_catalog():
        if (entry.agent, entry.action) not in pairs:
            pairs.append((entry.agent, entry.action))
    moments = list(range(problem.time + 1, problem.time + problem.horizon + 1))
    steps = [PlanStep(agent, action, t) for (agent, action), t in product(pairs, moments)]

    for length in range(0, problem.max_steps + 1):
        for sequence in product(steps, repeat=length):
            if any(a.time >= b.time for a, b in zip(sequence, sequence[1:])):
                continue
            plan = Plan(tuple(sequence), problem.time)
            if not all(Prover(base, problem.budget).prove(can(s.agent, s.action, s.time)) for s in sequence):
                continue
            facts = plan.happens_facts()
            if facts and isinstance(consistent(base, facts, problem.budget), Inconsistent):
                continue
            extended = base.extend(facts, prefix="step") if facts else base
            if Prover(extended, problem.budget).prove(problem.goal):
                return plan
    return None
