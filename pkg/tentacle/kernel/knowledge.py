"""
Knowledge bases: ordered collections of closed, well-sorted formulas with
provenance labels. Order is insertion order everywhere so every consumer
(prover, planner, writers) sees the same sequence on every run.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from tentacle.errors import SortError
from tentacle.kernel.formulas import Formula, free_variables
from tentacle.kernel.printer import pretty
from tentacle.kernel.signature import Signature
from tentacle.kernel.substitution import alpha_key, check_formula

logger = logging.getLogger(__name__)


class ProvenanceKind(str, Enum):
    AXIOM = "axiom"
    CONTRACT = "contract"
    PERCEPT = "percept"
    DERIVED = "derived"
    DECLARED = "declared"


@dataclass(frozen=True)
class Provenance:
    kind: ProvenanceKind
    agent: Optional[str] = None

    def __str__(self):
        return f"{self.kind.value}({self.agent})" if self.agent else self.kind.value

    @classmethod
    def parse(cls, text: str) -> "Provenance":
        if "(" in text and text.endswith(")"):
            kind, agent = text[:-1].split("(", 1)
            return cls(ProvenanceKind(kind), agent)
        return cls(ProvenanceKind(text))


AXIOM = Provenance(ProvenanceKind.AXIOM)
DERIVED = Provenance(ProvenanceKind.DERIVED)
PERCEPT = Provenance(ProvenanceKind.PERCEPT)
DECLARED = Provenance(ProvenanceKind.DECLARED)


def contract_of(agent: str) -> Provenance:
    return Provenance(ProvenanceKind.CONTRACT, agent)


@dataclass(frozen=True)
class Entry:
    label: str
    formula: Formula
    provenance: Provenance


class KnowledgeBase:
    def __init__(self, signature: Signature, entries: Iterable[Entry] = ()):
        self.signature = signature
        self._entries: List[Entry] = []
        self._index: Dict[object, Entry] = {}
        for entry in entries:
            self.add(entry.formula, entry.label, entry.provenance)

    def add(self, formula: Formula, label: Optional[str] = None, provenance: Provenance = DERIVED) -> Entry:
        """
        Validate and append `formula`. An alpha-equivalent formula already
        present is kept as is and its entry returned.
        """
        free = free_variables(formula)
        if free:
            raise SortError("a closed formula", f"free variable {free[0].name}", detail=pretty(formula))
        check_formula(formula, self.signature)
        key = alpha_key(formula)
        if key in self._index:
            return self._index[key]
        entry = Entry(label or f"g{len(self._entries) + 1}", formula, provenance)
        self._entries.append(entry)
        self._index[key] = entry
        return entry

    def extend(self, formulas: Iterable[Formula], provenance: Provenance = DERIVED,
               prefix: str = "x") -> "KnowledgeBase":
        """A new base holding these entries followed by `formulas`."""
        other = self.copy()
        for i, formula in enumerate(formulas, 1):
            other.add(formula, f"{prefix}{i}", provenance)
        return other

    def copy(self) -> "KnowledgeBase":
        other = KnowledgeBase(self.signature)
        other._entries = list(self._entries)
        other._index = dict(self._index)
        return other

    def contract(self, agent: str) -> Tuple[Formula, ...]:
        return tuple(e.formula for e in self._entries
                     if e.provenance.kind == ProvenanceKind.CONTRACT and e.provenance.agent == agent)

    def entry_for(self, formula: Formula) -> Optional[Entry]:
        return self._index.get(alpha_key(formula))

    @property
    def entries(self) -> Tuple[Entry, ...]:
        return tuple(self._entries)

    @property
    def formulas(self) -> Tuple[Formula, ...]:
        return tuple(e.formula for e in self._entries)

    def __contains__(self, formula: Formula) -> bool:
        return alpha_key(formula) in self._index

    def __iter__(self) -> Iterator[Entry]:
        return iter(list(self._entries))

    def __len__(self):
        return len(self._entries)
