"""
Signatures: sorts, function symbols and constants.

Every signature starts from the built-in vocabulary (event calculus, `can`,
plan reification, agent lists, moment addition). Scenario files add their own
symbols through the declare_* methods; shadowing a built-in or a reserved
keyword is refused with SignatureError.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from tentacle.errors import SignatureError, UnknownSymbol
from tentacle.kernel.sorts import (
    ACTION, ACTION_TYPE, AGENT, AGENT_LIST, BOOLEAN, BUILTIN_SORTS, EVENT,
    FLUENT, MOMENT, PLAN, Sort,
)
from tentacle.kernel.terms import Constant, FunctionSymbol, moment

logger = logging.getLogger(__name__)

RESERVED = frozenset({
    "not", "and", "or", "implies", "forall", "exists",
    "P", "K", "B", "C", "S", "D", "I", "O", "O-legal", "O-moral", "false",
})

ACTION_FN = FunctionSymbol("action", (AGENT, ACTION_TYPE), ACTION)
INITIALLY = FunctionSymbol("initially", (FLUENT,), BOOLEAN)
HOLDS = FunctionSymbol("holds", (FLUENT, MOMENT), BOOLEAN)
HAPPENS = FunctionSymbol("happens", (EVENT, MOMENT), BOOLEAN)
CLIPPED = FunctionSymbol("clipped", (MOMENT, FLUENT, MOMENT), BOOLEAN)
INITIATES = FunctionSymbol("initiates", (EVENT, FLUENT, MOMENT), BOOLEAN)
TERMINATES = FunctionSymbol("terminates", (EVENT, FLUENT, MOMENT), BOOLEAN)
PRIOR = FunctionSymbol("prior", (MOMENT, MOMENT), BOOLEAN)
CAN = FunctionSymbol("can", (AGENT, ACTION_TYPE, MOMENT), BOOLEAN)
PLAN_PRED = FunctionSymbol("plan", (PLAN, AGENT_LIST), BOOLEAN)
PERFORMED = FunctionSymbol("performed", (PLAN,), BOOLEAN)
WITHIN = FunctionSymbol("within", (PLAN, MOMENT), BOOLEAN)
PLAN_END = FunctionSymbol("plan-end", (MOMENT,), PLAN)
PLAN_STEP = FunctionSymbol("plan-step", (AGENT, ACTION_TYPE, MOMENT, PLAN), PLAN)
AGENTS_CONS = FunctionSymbol("agents-cons", (AGENT, AGENT_LIST), AGENT_LIST)
PLUS = FunctionSymbol("+", (MOMENT, MOMENT), MOMENT)
AGENTS_NIL = Constant("agents-nil", AGENT_LIST)

BUILTIN_FUNCTIONS = (
    ACTION_FN, INITIALLY, HOLDS, HAPPENS, CLIPPED, INITIATES, TERMINATES, PRIOR,
    CAN, PLAN_PRED, PERFORMED, WITHIN, PLAN_END, PLAN_STEP, AGENTS_CONS, PLUS,
)
BUILTIN_CONSTANTS = (AGENTS_NIL,)


@dataclass(frozen=True)
class Declaration:
    """One user declaration, kept in order so a signature can be written back."""
    kind: str  # sort | function | constant
    name: str
    detail: Tuple[str, ...]


class Signature:
    def __init__(self):
        self.sorts: Dict[str, Sort] = {s.name: s for s in BUILTIN_SORTS}
        self.functions: Dict[str, FunctionSymbol] = {f.name: f for f in BUILTIN_FUNCTIONS}
        self.constants: Dict[str, Constant] = {c.name: c for c in BUILTIN_CONSTANTS}
        self.declarations: List[Declaration] = []
        self.frozen = False

    # --- building -------------------------------------------------------

    def _claim(self, name: str):
        if self.frozen:
            raise SignatureError(f"Signature is frozen; cannot declare {name}")
        if name in RESERVED:
            raise SignatureError(f"'{name}' is a reserved keyword")
        if name.isdigit() or name.startswith("?"):
            raise SignatureError(f"'{name}' is not a valid symbol name")
        builtin = ({s.name for s in BUILTIN_SORTS} | {f.name for f in BUILTIN_FUNCTIONS}
                   | {c.name for c in BUILTIN_CONSTANTS})
        if name in builtin:
            raise SignatureError(f"'{name}' shadows a built-in symbol")
        if name in self.sorts or name in self.functions or name in self.constants:
            raise SignatureError(f"'{name}' is declared twice")

    def declare_sort(self, name: str, parent: Optional[str] = None) -> Sort:
        self._claim(name)
        parent_sort = self.sort(parent) if parent else None
        sort = Sort(name, parent_sort)
        self.sorts[name] = sort
        self.declarations.append(Declaration("sort", name, (parent,) if parent else ()))
        return sort

    def declare_function(self, name: str, arg_sorts, result: str) -> FunctionSymbol:
        self._claim(name)
        arg_names = tuple(arg_sorts)
        if not arg_names:
            raise SignatureError(f"Function '{name}' needs at least one argument; declare a constant instead")
        symbol = FunctionSymbol(name, tuple(self.sort(s) for s in arg_names), self.sort(result))
        self.functions[name] = symbol
        self.declarations.append(Declaration("function", name, arg_names + (result,)))
        return symbol

    def declare_constant(self, name: str, sort: str) -> Constant:
        self._claim(name)
        constant = Constant(name, self.sort(sort))
        self.constants[name] = constant
        self.declarations.append(Declaration("constant", name, (sort,)))
        return constant

    def freeze(self) -> "Signature":
        self.frozen = True
        return self

    def copy(self) -> "Signature":
        other = Signature()
        other.sorts = dict(self.sorts)
        other.functions = dict(self.functions)
        other.constants = dict(self.constants)
        other.declarations = list(self.declarations)
        return other

    # --- lookup ---------------------------------------------------------

    def sort(self, name: str, position=None) -> Sort:
        try:
            return self.sorts[name]
        except KeyError:
            raise UnknownSymbol(name, position)

    def function(self, name: str, position=None) -> FunctionSymbol:
        try:
            return self.functions[name]
        except KeyError:
            raise UnknownSymbol(name, position)

    def constant(self, name: str, position=None) -> Constant:
        if name.isdigit():
            return moment(int(name))
        try:
            return self.constants[name]
        except KeyError:
            raise UnknownSymbol(name, position)

    def lookup(self, name: str) -> Union[FunctionSymbol, Constant, None]:
        if name.isdigit():
            return moment(int(name))
        return self.functions.get(name) or self.constants.get(name)

    def constants_of(self, sort: Sort) -> Tuple[Constant, ...]:
        return tuple(c for c in self.constants.values() if c.sort.is_subsort_of(sort))


def builtin_signature() -> Signature:
    return Signature()
