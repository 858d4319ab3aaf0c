"""
Action catalogs and the canonical candidate enumeration.

A catalog lists what the planner may try: (agent, action type, time) where
time None means "at every moment" (a ∀t can fact). Candidates range over
the distinct (agent, action type) pairs at strictly increasing times in
(t, t+H]; whether a pair is actually available at a given time is decided
later by the consistency check, so the count below is exact.
"""

import hashlib
import json
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from tentacle.errors import HorizonTooLarge
from tentacle.kernel.formulas import Atom, ForAll, Formula
from tentacle.kernel.printer import pretty
from tentacle.kernel.sorts import MOMENT
from tentacle.kernel.terms import Term, int_value
from tentacle.planner.plans import Plan, PlanStep


@dataclass(frozen=True)
class CatalogEntry:
    agent: Term
    action: Term
    time: Optional[int] = None

    def record(self) -> list:
        return [pretty(self.agent), pretty(self.action), self.time]


def can_entry(formula: Formula) -> Optional[CatalogEntry]:
    """can(a, α, n) or ∀t:Moment can(a, α, t) as a catalog entry, else None."""
    if isinstance(formula, ForAll) and formula.var.sort == MOMENT and isinstance(formula.body, Atom):
        atom = formula.body
        if atom.predicate == "can":
            agent, action, when = atom.term.args
            if when == formula.var and agent.is_ground and action.is_ground:
                return CatalogEntry(agent, action, None)
        return None
    if isinstance(formula, Atom) and formula.predicate == "can" and formula.term.is_ground:
        agent, action, when = formula.term.args
        value = int_value(when)
        if value is not None:
            return CatalogEntry(agent, action, value)
    return None


def catalog_from(formulas: Iterable[Formula], pool: Sequence[Term]) -> Tuple[CatalogEntry, ...]:
    """Catalog entries for agents in `pool`, in the order the facts appear."""
    found: List[CatalogEntry] = []
    for formula in formulas:
        entry = can_entry(formula)
        if entry is not None and entry.agent in pool and entry not in found:
            found.append(entry)
    return tuple(found)


def catalog_pairs(catalog: Sequence[CatalogEntry], pool: Sequence[Term]) -> List[Tuple[Term, Term]]:
    """Distinct (agent, action) pairs ordered by agent position in the pool, then first appearance."""
    action_order: List[Term] = []
    pairs: List[Tuple[Term, Term]] = []
    for entry in catalog:
        if entry.action not in action_order:
            action_order.append(entry.action)
        if (entry.agent, entry.action) not in pairs:
            pairs.append((entry.agent, entry.action))
    pool = list(pool)
    return sorted(pairs, key=lambda pair: (pool.index(pair[0]), action_order.index(pair[1])))


def catalog_hash(catalog: Sequence[CatalogEntry]) -> str:
    text = json.dumps([entry.record() for entry in catalog], ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def candidate_count(pair_count: int, horizon: int, max_steps: int) -> int:
    return sum(comb(horizon, k) * pair_count ** k for k in range(0, max_steps + 1))


def enumerate_candidates(pairs: Sequence[Tuple[Term, Term]], time: int, horizon: int,
                         max_steps: int, ceiling: Optional[int] = None) -> Iterator[Plan]:
    """
    Every candidate plan in canonical order: by length, then lexicographically
    over (agent index, action index, time) per step.
    """
    count = candidate_count(len(pairs), horizon, max_steps)
    if ceiling is not None and count > ceiling:
        raise HorizonTooLarge(count, ceiling)
    moments = range(time + 1, time + horizon + 1)
    for length in range(0, max_steps + 1):
        batch = []
        for times in combinations(moments, length):
            for chosen in product(range(len(pairs)), repeat=length):
                key = tuple((chosen[i], times[i]) for i in range(length))
                batch.append((key, chosen, times))
        batch.sort(key=lambda item: item[0])
        for _, chosen, times in batch:
            steps = tuple(PlanStep(pairs[i][0], pairs[i][1], t) for i, t in zip(chosen, times))
            yield Plan(steps, time)
