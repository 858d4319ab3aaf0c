"""
Ground narratives and the direct projection evaluator.

`project` decides holds(f, t) by replaying the narrative under exactly the
reading the axioms give: a fluent holds at t when it held initially or was
initiated at some t1 < t, and no terminating event falls in [start, t).
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple, Union

from tentacle.errors import UnorderedMoment
from tentacle.kernel.formulas import Atom, Formula, Not
from tentacle.kernel.printer import pretty
from tentacle.kernel.terms import Term, int_value
from tentacle.kernel.vocabulary import clipped, happens, initially, initiates, terminates

logger = logging.getLogger(__name__)

NARRATIVE_PREDICATES = ("happens", "initiates", "terminates", "initially")


def _moment(term: Term, context: str) -> int:
    value = int_value(term)
    if value is None:
        raise UnorderedMoment(pretty(term), f"({context} needs an integer moment)")
    return value


@dataclass(frozen=True)
class Narrative:
    happens: Tuple[Tuple[Term, int], ...] = ()
    initiates: Tuple[Tuple[Term, Term, int], ...] = ()
    terminates: Tuple[Tuple[Term, Term, int], ...] = ()
    initially: Tuple[Term, ...] = ()

    @classmethod
    def from_formulas(cls, formulas: Iterable[Formula]) -> "Narrative":
        """Collect the ground narrative atoms; everything else is ignored."""
        found = {name: [] for name in NARRATIVE_PREDICATES}
        for formula in formulas:
            if not isinstance(formula, Atom) or formula.predicate not in found:
                continue
            if not formula.term.is_ground:
                continue
            args = formula.term.args
            name = formula.predicate
            if name == "initially":
                fact = args[0]
            elif name == "happens":
                fact = (args[0], _moment(args[1], pretty(formula)))
            else:
                fact = (args[0], args[1], _moment(args[2], pretty(formula)))
            if fact not in found[name]:
                found[name].append(fact)
        return cls(*(tuple(found[name]) for name in NARRATIVE_PREDICATES))

    def fluents(self) -> Tuple[Term, ...]:
        seen: List[Term] = []
        for fluent in (list(self.initially) + [f for _, f, _ in self.initiates]
                       + [f for _, f, _ in self.terminates]):
            if fluent not in seen:
                seen.append(fluent)
        return tuple(seen)

    def last_moment(self) -> int:
        times = ([t for _, t in self.happens] + [t for _, _, t in self.initiates]
                 + [t for _, _, t in self.terminates])
        return max(times, default=0)

    def occurs(self, event: Term, time: int) -> bool:
        return (event, time) in self.happens

    def clipping_times(self, fluent: Term) -> List[int]:
        return sorted({t for e, f, t in self.terminates if f == fluent and self.occurs(e, t)})

    def initiation_times(self, fluent: Term) -> List[int]:
        return sorted({t for e, f, t in self.initiates if f == fluent and self.occurs(e, t)})

    def clipped_between(self, fluent: Term, start: int, end: int) -> bool:
        return any(start <= t < end for t in self.clipping_times(fluent))


def narrative_formulas(narrative: Narrative) -> List[Formula]:
    formulas: List[Formula] = [initially(f) for f in narrative.initially]
    formulas.extend(happens(e, t) for e, t in narrative.happens)
    formulas.extend(initiates(e, f, t) for e, f, t in narrative.initiates)
    formulas.extend(terminates(e, f, t) for e, f, t in narrative.terminates)
    return formulas


def completion(narrative: Narrative, moments: Union[int, Iterable[int]],
               fluents: Iterable[Term] = ()) -> Iterator[Formula]:
    """
    Closed-world ¬clipped(t1, f, t2) facts for t1 <= t2 over `moments`
    (an int n means 0..n), one per interval no listed terminating event hits.
    """
    span = sorted(range(moments + 1) if isinstance(moments, int) else set(moments))
    targets = list(narrative.fluents())
    for fluent in fluents:
        if fluent not in targets:
            targets.append(fluent)
    for fluent in targets:
        for t1 in span:
            for t2 in span:
                if t1 <= t2 and not narrative.clipped_between(fluent, t1, t2):
                    yield Not(clipped(t1, fluent, t2))


def project(narrative: Narrative, fluent: Term, time) -> bool:
    """True when holds(fluent, time) follows from the narrative; False otherwise."""
    t = time if isinstance(time, int) else _moment(time, "projection")
    if t < 0:
        raise UnorderedMoment(str(t), "(moments start at 0)")
    if fluent in narrative.initially and not narrative.clipped_between(fluent, 0, t):
        return True
    for start in narrative.initiation_times(fluent):
        if start < t and not narrative.clipped_between(fluent, start, t):
            return True
    return False
