from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass(frozen=True)
class Sort:
    """A sort with at most one parent (single inheritance)."""
    name: str
    parent: Optional["Sort"] = None

    def lineage(self) -> Iterator["Sort"]:
        node = self
        while node is not None:
            yield node
            node = node.parent

    def is_subsort_of(self, other: "Sort") -> bool:
        return any(s == other for s in self.lineage())

    def __str__(self):
        return self.name


AGENT = Sort("Agent")
ACTION_TYPE = Sort("ActionType")
EVENT = Sort("Event")
ACTION = Sort("Action", EVENT)
MOMENT = Sort("Moment")
FLUENT = Sort("Fluent")
BOOLEAN = Sort("Boolean")
PLAN = Sort("Plan")
AGENT_LIST = Sort("AgentList")

BUILTIN_SORTS = (AGENT, ACTION_TYPE, EVENT, ACTION, MOMENT, FLUENT, BOOLEAN, PLAN, AGENT_LIST)
