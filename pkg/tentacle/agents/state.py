"""
Agents, the shared world, and the artifacts an episode leaves behind.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from tentacle.agents.transcript import Transcript
from tentacle.kernel.formulas import Formula, Says
from tentacle.kernel.knowledge import KnowledgeBase, Provenance
from tentacle.kernel.terms import Constant
from tentacle.planner.plans import Plan
from tentacle.prover.rules import Budget
from utils.settings import Settings


class Mode(str, Enum):
    LEVEL1 = "level1"  # knows every true capability
    LEVEL2 = "level2"  # believes the capabilities it has observed


@dataclass(frozen=True)
class AgentSpec:
    name: str
    term: Constant
    store: KnowledgeBase
    mode: Mode = Mode.LEVEL1
    contract: Tuple[Formula, ...] = ()
    engaged: Tuple[int, ...] = ()

    def remember(self, formula: Formula, provenance: Provenance) -> "AgentSpec":
        store = self.store.copy()
        store.add(formula, f"{self.name}-{len(store) + 1}", provenance)
        return replace(self, store=store)

    def engage(self, clause: int) -> "AgentSpec":
        return replace(self, engaged=self.engaged + (clause,))


@dataclass(frozen=True)
class ScheduledEvent:
    """percept | message | observe, injected at the start of `tick`."""
    tick: int
    kind: str
    agent: Optional[str]
    formula: Formula


@dataclass(frozen=True)
class Artifact:
    name: str
    kind: str  # proof | refutation | certificate
    payload: object
    kb: KnowledgeBase


@dataclass
class Execution:
    agent: str
    goal: Formula
    plan: Plan
    done: int = 0
    aborted: bool = False

    @property
    def finished(self) -> bool:
        return self.aborted or self.done >= len(self.plan.steps)


@dataclass
class World:
    gamma: KnowledgeBase
    agents: Dict[str, AgentSpec]
    settings: Settings = field(default_factory=Settings)
    schedule: List[ScheduledEvent] = field(default_factory=list)
    ticks: int = 0
    clock: int = 0
    messages: List[Says] = field(default_factory=list)
    executions: List[Execution] = field(default_factory=list)
    observations: Dict[str, List[Formula]] = field(default_factory=dict)
    artifacts: List[Artifact] = field(default_factory=list)
    transcript: Transcript = field(default_factory=Transcript)

    @property
    def budget(self) -> Budget:
        return Budget.from_settings(self.settings)

    def agent_named(self, name: str) -> AgentSpec:
        return self.agents[name]

    def agent_of(self, term) -> Optional[AgentSpec]:
        for spec in self.agents.values():
            if spec.term == term:
                return spec
        return None

    def update(self, spec: AgentSpec):
        self.agents[spec.name] = spec

    def pool(self) -> Tuple[Constant, ...]:
        return tuple(spec.term for spec in self.agents.values())

    def artifact(self, stem: str, kind: str, payload, kb: KnowledgeBase) -> str:
        name = f"t{self.clock:03d}-{stem}-{len(self.artifacts) + 1:02d}"
        self.artifacts.append(Artifact(name, kind, payload, kb))
        return name
