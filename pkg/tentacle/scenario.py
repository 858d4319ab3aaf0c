"""
Scenario and knowledge-base files (`.tai`).

A file is a sequence of top-level forms, read in order:

    (sort Name [Parent])                 (function f (ArgSort ...) Result)
    (constant c Sort)                    (agent name level1|level2)
    (axioms)                             the event-calculus axioms enter Γ
    (formula [label] F)                  Γ
    (entry label kind F)                 Γ with provenance (written KB files)
    (contract agent [label] F)           Γ and the agent's store
    (store agent [label] F)              the agent's store only
    (happens e t) (initiates e f t) (terminates e f t) (initially f)
    (percept tick agent F)               P(agent, tick, F) into Γ, its belief into the store
    (message tick (S ...))               a Says delivered at tick
    (observe tick agent F)               queued capability / contract evidence
    (config key value)                   horizon, delta, ticks, max-steps, ceiling,
                                         budget-depth, budget-size, budget-candidates

Knowledge-base files written next to artifacts use only the declaration
forms and `entry`, so they load back into an equal base.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from tentacle.agents.protocols import check_evidence
from tentacle.agents.runtime import grant_prerequisites
from tentacle.agents.state import AgentSpec, Mode, ScheduledEvent, World
from tentacle.errors import ConfigError, CyclicOrder, InputError, Position, ScenarioSyntaxError
from tentacle.eventcalc.axioms import labelled_axioms
from tentacle.kernel.formulas import Formula, Says
from tentacle.kernel.knowledge import (
    AXIOM, DERIVED, PERCEPT, KnowledgeBase, Provenance, ProvenanceKind, contract_of,
)
from tentacle.kernel.moments import MomentOrder
from tentacle.kernel.parser import Parser
from tentacle.kernel.printer import pretty
from tentacle.kernel.sexpr import Node, SList, Symbol, read_all
from tentacle.kernel.signature import Signature
from tentacle.kernel.sorts import AGENT
from tentacle.kernel.vocabulary import happens, initially, initiates, terminates
from utils.settings import Settings

logger = logging.getLogger(__name__)

CONFIG_KEYS = {
    "horizon": "horizon",
    "delta": "delta",
    "max-steps": "max_plan_steps",
    "ceiling": "plan_ceiling",
    "budget-depth": "budget_depth",
    "budget-size": "budget_size",
    "budget-candidates": "budget_candidates",
}


@dataclass
class AgentDecl:
    name: str
    mode: Mode
    contract: List[Tuple[str, Formula]] = field(default_factory=list)
    store: List[Tuple[str, Formula]] = field(default_factory=list)


@dataclass
class Scenario:
    signature: Signature
    gamma: KnowledgeBase
    agents: Dict[str, AgentDecl] = field(default_factory=dict)
    schedule: List[ScheduledEvent] = field(default_factory=list)
    config: Dict[str, int] = field(default_factory=dict)
    ticks: Optional[int] = None
    errors: List[InputError] = field(default_factory=list)


class _Loader:
    def __init__(self):
        signature = Signature()
        self.scenario = Scenario(signature, KnowledgeBase(signature))
        self.parser = Parser(signature)
        self.order = MomentOrder()

    @property
    def signature(self) -> Signature:
        return self.scenario.signature

    # --- helpers ---------------------------------------------------------

    @staticmethod
    def _symbol(node: Node, what: str) -> str:
        if not isinstance(node, Symbol):
            raise ScenarioSyntaxError(f"Expected {what}", node.position)
        return node.text

    @staticmethod
    def _int(node: Node, what: str) -> int:
        if not isinstance(node, Symbol) or not node.text.lstrip("-").isdigit():
            raise ScenarioSyntaxError(f"Expected an integer {what}", node.position)
        return int(node.text)

    @staticmethod
    def _arity(form: SList, low: int, high: int = None):
        count = len(form.items) - 1
        high = low if high is None else high
        if not low <= count <= high:
            expected = str(low) if low == high else f"{low}-{high}"
            raise ScenarioSyntaxError(f"'{form.head}' takes {expected} arguments, got {count}", form.position)

    def _formula(self, node: Node) -> Formula:
        return self.parser.formula(node, {})

    def _agent(self, node: Node) -> AgentDecl:
        name = self._symbol(node, "an agent name")
        if name not in self.scenario.agents:
            raise InputError(f"'{name}' is not a declared agent", node.position)
        return self.scenario.agents[name]

    def _labelled(self, form: SList, start: int) -> Tuple[Optional[str], Formula]:
        rest = form.items[start:]
        if len(rest) == 2:
            return self._symbol(rest[0], "a label"), self._formula(rest[1])
        if len(rest) == 1:
            return None, self._formula(rest[0])
        raise ScenarioSyntaxError(f"'{form.head}' expects [label] formula", form.position)

    def _add(self, formula: Formula, label: Optional[str], provenance: Provenance, position: Position):
        if self.order.contradicts(formula):
            raise CyclicOrder(f"{pretty(formula)} makes the moment order cyclic", position)
        try:
            self.scenario.gamma.add(formula, label, provenance)
            self.order.observe(formula)
        except InputError as exc:
            if exc.position is None:
                exc.position = position
                exc.args = (f"{exc.args[0]} at {position}",)
            raise

    # --- forms -----------------------------------------------------------

    def form(self, form: Node):
        if not isinstance(form, SList) or form.head is None:
            raise ScenarioSyntaxError("Expected a top-level form like (formula ...)", form.position)
        handler = getattr(self, "_form_" + form.head.replace("-", "_"), None)
        if handler is None:
            raise ScenarioSyntaxError(f"Unknown top-level form '{form.head}'", form.position)
        handler(form)

    def _form_sort(self, form: SList):
        self._arity(form, 1, 2)
        parent = self._symbol(form.items[2], "a parent sort") if len(form.items) == 3 else None
        self.signature.declare_sort(self._symbol(form.items[1], "a sort name"), parent)

    def _form_function(self, form: SList):
        self._arity(form, 3)
        args = form.items[2]
        if not isinstance(args, SList):
            raise ScenarioSyntaxError("Expected a list of argument sorts", args.position)
        self.signature.declare_function(
            self._symbol(form.items[1], "a function name"),
            [self._symbol(a, "a sort") for a in args.items],
            self._symbol(form.items[3], "a result sort"),
        )

    def _form_constant(self, form: SList):
        self._arity(form, 2)
        self.signature.declare_constant(self._symbol(form.items[1], "a constant name"),
                                        self._symbol(form.items[2], "a sort"))

    def _form_agent(self, form: SList):
        self._arity(form, 2)
        name = self._symbol(form.items[1], "an agent name")
        mode_text = self._symbol(form.items[2], "level1 or level2")
        try:
            mode = Mode(mode_text)
        except ValueError:
            raise ScenarioSyntaxError(f"Unknown agent mode '{mode_text}'", form.items[2].position)
        if name not in self.signature.constants:
            self.signature.declare_constant(name, AGENT.name)
        elif not self.signature.constants[name].sort.is_subsort_of(AGENT):
            raise InputError(f"'{name}' is declared but is not an Agent", form.items[1].position)
        if name in self.scenario.agents:
            raise InputError(f"Agent '{name}' is declared twice", form.position)
        self.scenario.agents[name] = AgentDecl(name, mode)

    def _form_axioms(self, form: SList):
        self._arity(form, 0)
        for label, axiom in labelled_axioms():
            self._add(axiom, label, AXIOM, form.position)

    def _form_formula(self, form: SList):
        label, formula = self._labelled(form, 1)
        self._add(formula, label, DERIVED, form.position)

    def _form_entry(self, form: SList):
        self._arity(form, 3)
        kind, _, agent = self._symbol(form.items[2], "a provenance").partition(":")
        try:
            provenance = Provenance(ProvenanceKind(kind), agent or None)
        except ValueError:
            raise ScenarioSyntaxError(f"Unknown provenance '{kind}'", form.items[2].position)
        self._add(self._formula(form.items[3]), self._symbol(form.items[1], "a label"),
                  provenance, form.position)

    def _form_contract(self, form: SList):
        agent = self._agent(form.items[1]) if len(form.items) > 1 else None
        if agent is None:
            raise ScenarioSyntaxError("'contract' needs an agent", form.position)
        label, formula = self._labelled(form, 2)
        self._add(formula, label, contract_of(agent.name), form.position)
        agent.contract.append((label, formula))

    def _form_store(self, form: SList):
        if len(form.items) < 3:
            raise ScenarioSyntaxError("'store' expects an agent and a formula", form.position)
        agent = self._agent(form.items[1])
        label, formula = self._labelled(form, 2)
        agent.store.append((label, formula))

    def _narrative(self, form: SList, build, count: int):
        self._arity(form, count)
        args = [self.parser.term(node, {}) for node in form.items[1:]]
        self._add(build(*args), None, DERIVED, form.position)

    def _form_happens(self, form: SList):
        self._narrative(form, happens, 2)

    def _form_initiates(self, form: SList):
        self._narrative(form, initiates, 3)

    def _form_terminates(self, form: SList):
        self._narrative(form, terminates, 3)

    def _form_initially(self, form: SList):
        self._narrative(form, initially, 1)

    def _form_percept(self, form: SList):
        self._arity(form, 3)
        tick = self._int(form.items[1], "tick")
        agent = self._agent(form.items[2])
        formula = self._formula(form.items[3])
        self._closed(formula, form.position)
        self.scenario.schedule.append(ScheduledEvent(tick, "percept", agent.name, formula))

    def _form_message(self, form: SList):
        self._arity(form, 2)
        tick = self._int(form.items[1], "tick")
        formula = self._formula(form.items[2])
        if not isinstance(formula, Says):
            raise InputError("A message must be an S formula", form.items[2].position)
        self._closed(formula, form.position)
        self.scenario.schedule.append(ScheduledEvent(tick, "message", None, formula))

    def _form_observe(self, form: SList):
        self._arity(form, 3)
        tick = self._int(form.items[1], "tick")
        agent = self._agent(form.items[2])
        formula = self._formula(form.items[3])
        self._closed(formula, form.position)
        self.scenario.schedule.append(ScheduledEvent(tick, "observe", agent.name, formula))

    def _form_config(self, form: SList):
        self._arity(form, 2)
        key = self._symbol(form.items[1], "a config key")
        value = self._int(form.items[2], key)
        if key == "ticks":
            self.scenario.ticks = value
        elif key in CONFIG_KEYS:
            self.scenario.config[CONFIG_KEYS[key]] = value
        else:
            raise ConfigError(f"Unknown config key '{key}'", form.items[1].position)

    def _closed(self, formula: Formula, position: Position):
        scratch = KnowledgeBase(self.signature)
        try:
            scratch.add(formula)
        except InputError as exc:
            if exc.position is None:
                exc.position = position
                exc.args = (f"{exc.args[0]} at {position}",)
            raise


def load_scenario(text: str, collect: bool = False) -> Scenario:
    """
    Parse a scenario or KB file. With collect=True every failing form is
    recorded in `errors` and loading goes on; otherwise the first error raises.
    """
    loader = _Loader()
    for form in read_all(text):
        try:
            loader.form(form)
        except InputError as exc:
            if not collect:
                raise
            loader.scenario.errors.append(exc)
    scenario = loader.scenario
    for event in scenario.schedule:
        if event.kind != "observe":
            continue
        spec = AgentSpec(event.agent, scenario.signature.constant(event.agent),
                         KnowledgeBase(scenario.signature))
        try:
            check_evidence(spec, event.formula)
        except InputError as exc:
            if not collect:
                raise
            scenario.errors.append(exc)
    return scenario


def load_kb(text: str) -> KnowledgeBase:
    return load_scenario(text).gamma


def build_world(scenario: Scenario, settings: Settings = None, **overrides) -> World:
    """World for a scenario; precedence is overrides > scenario config > settings."""
    settings = (settings or Settings()).with_overrides(**scenario.config).with_overrides(**overrides)
    agents: Dict[str, AgentSpec] = {}
    for name, decl in scenario.agents.items():
        store = KnowledgeBase(scenario.signature)
        for i, (label, formula) in enumerate(decl.contract, 1):
            store.add(formula, label or f"{name}-c{i}", contract_of(name))
        for i, (label, formula) in enumerate(decl.store, 1):
            store.add(formula, label or f"{name}-s{i}", PERCEPT)
        agents[name] = AgentSpec(name, scenario.signature.constant(name), store, decl.mode,
                                 tuple(formula for _, formula in decl.contract))
    last_tick = max((event.tick for event in scenario.schedule), default=0)
    ticks = scenario.ticks if scenario.ticks is not None else (last_tick + settings.horizon if agents else 0)
    world = World(scenario.gamma.copy(), agents, settings, list(scenario.schedule), ticks)
    grant_prerequisites(world)
    logger.info("[Scenario] %d agents, %d formulas in Γ, %d scheduled events, %d ticks",
                len(agents), len(world.gamma), len(world.schedule), ticks)
    return world


# --- writing -------------------------------------------------------------------

def _provenance_token(provenance: Provenance) -> str:
    if provenance.agent:
        return f"{provenance.kind.value}:{provenance.agent}"
    return provenance.kind.value


def dump_kb(kb: KnowledgeBase) -> str:
    lines = []
    for declaration in kb.signature.declarations:
        if declaration.kind == "sort":
            lines.append(f"(sort {declaration.name}{''.join(' ' + d for d in declaration.detail)})")
        elif declaration.kind == "function":
            *args, result = declaration.detail
            lines.append(f"(function {declaration.name} ({' '.join(args)}) {result})")
        else:
            lines.append(f"(constant {declaration.name} {declaration.detail[0]})")
    for entry in kb.entries:
        lines.append(f"(entry {entry.label} {_provenance_token(entry.provenance)} {pretty(entry.formula)})")
    return "\n".join(lines) + "\n"
