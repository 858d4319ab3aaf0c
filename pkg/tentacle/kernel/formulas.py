"""
Abstract syntax of the deontic cognitive event calculus.

Every class is a frozen dataclass; constructors check that modal operators
receive Agent- and Moment-sorted arguments and that atoms are Boolean.
`map` rebuilds a non-binding node from transformed terms and children, which
lets substitution and the printer stay generic over the modal operators.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, ClassVar, Iterator, Optional, Tuple

from tentacle.errors import SortError
from tentacle.kernel.sorts import AGENT, BOOLEAN, MOMENT
from tentacle.kernel.terms import Application, Term, Variable


def _require(term: Term, expected, role: str):
    if not isinstance(term, Term):
        raise SortError(expected.name, type(term).__name__, detail=role)
    if not term.sort.is_subsort_of(expected):
        raise SortError(expected.name, term.sort.name, detail=role)


class Flavor(str, Enum):
    UNFLAGGED = "unflagged"
    LEGAL = "legal"
    MORAL = "moral"


class Formula:
    def terms(self) -> Tuple[Term, ...]:
        return ()

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def map(self, on_term: Callable[[Term], Term], on_formula: Callable[["Formula"], "Formula"]) -> "Formula":
        return self

    def walk(self) -> Iterator["Formula"]:
        yield self
        for child in self.children():
            yield from child.walk()


@dataclass(frozen=True)
class Atom(Formula):
    term: Term

    def __post_init__(self):
        _require(self.term, BOOLEAN, "atom")

    def terms(self):
        return (self.term,)

    def map(self, on_term, on_formula):
        return Atom(on_term(self.term))

    @property
    def predicate(self) -> Optional[str]:
        if isinstance(self.term, Application):
            return self.term.symbol.name
        return None


@dataclass(frozen=True)
class Bottom(Formula):
    pass


BOTTOM = Bottom()


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def children(self):
        return (self.body,)

    def map(self, on_term, on_formula):
        return Not(on_formula(self.body))


@dataclass(frozen=True)
class And(Formula):
    parts: Tuple[Formula, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("and needs at least two conjuncts")

    def children(self):
        return self.parts

    def map(self, on_term, on_formula):
        return And(tuple(on_formula(p) for p in self.parts))


@dataclass(frozen=True)
class Or(Formula):
    parts: Tuple[Formula, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("or needs at least two disjuncts")

    def children(self):
        return self.parts

    def map(self, on_term, on_formula):
        return Or(tuple(on_formula(p) for p in self.parts))


@dataclass(frozen=True)
class Implies(Formula):
    antecedent: Formula
    consequent: Formula

    def children(self):
        return (self.antecedent, self.consequent)

    def map(self, on_term, on_formula):
        return Implies(on_formula(self.antecedent), on_formula(self.consequent))


@dataclass(frozen=True)
class ForAll(Formula):
    var: Variable
    body: Formula
    keyword: ClassVar[str] = "forall"

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Exists(Formula):
    var: Variable
    body: Formula
    keyword: ClassVar[str] = "exists"

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class AgentModal(Formula):
    """Operators of shape Op(agent, time, body)."""
    agent: Term
    time: Term
    body: Formula
    keyword: ClassVar[str] = ""

    def __post_init__(self):
        _require(self.agent, AGENT, f"agent of {self.keyword}")
        _require(self.time, MOMENT, f"time of {self.keyword}")

    def terms(self):
        return (self.agent, self.time)

    def children(self):
        return (self.body,)

    def map(self, on_term, on_formula):
        return type(self)(on_term(self.agent), on_term(self.time), on_formula(self.body))


@dataclass(frozen=True)
class Perceives(AgentModal):
    keyword: ClassVar[str] = "P"


@dataclass(frozen=True)
class Knows(AgentModal):
    keyword: ClassVar[str] = "K"


@dataclass(frozen=True)
class Believes(AgentModal):
    keyword: ClassVar[str] = "B"


@dataclass(frozen=True)
class Desires(AgentModal):
    keyword: ClassVar[str] = "D"


@dataclass(frozen=True)
class Intends(AgentModal):
    keyword: ClassVar[str] = "I"


AGENT_MODALS = {cls.keyword: cls for cls in (Perceives, Knows, Believes, Desires, Intends)}


@dataclass(frozen=True)
class Common(Formula):
    time: Term
    body: Formula
    keyword: ClassVar[str] = "C"

    def __post_init__(self):
        _require(self.time, MOMENT, "time of C")

    def terms(self):
        return (self.time,)

    def children(self):
        return (self.body,)

    def map(self, on_term, on_formula):
        return Common(on_term(self.time), on_formula(self.body))


@dataclass(frozen=True)
class Says(Formula):
    """S(agent, time, body) is a broadcast; S(agent, audience, time, body) is addressed."""
    agent: Term
    time: Term
    body: Formula
    audience: Optional[Term] = None
    keyword: ClassVar[str] = "S"

    def __post_init__(self):
        _require(self.agent, AGENT, "speaker of S")
        if self.audience is not None:
            _require(self.audience, AGENT, "audience of S")
        _require(self.time, MOMENT, "time of S")

    def terms(self):
        if self.audience is None:
            return (self.agent, self.time)
        return (self.agent, self.audience, self.time)

    def children(self):
        return (self.body,)

    def map(self, on_term, on_formula):
        audience = on_term(self.audience) if self.audience is not None else None
        return Says(on_term(self.agent), on_term(self.time), on_formula(self.body), audience)


@dataclass(frozen=True)
class ActionLiteral:
    positive: bool
    actor: Term
    action_type: Term
    time: Term
    formula: Formula


@dataclass(frozen=True)
class Ought(Formula):
    agent: Term
    time: Term
    condition: Formula
    action: Formula
    flavor: Flavor = Flavor.UNFLAGGED

    def __post_init__(self):
        _require(self.agent, AGENT, "agent of O")
        _require(self.time, MOMENT, "time of O")
        if not isinstance(self.flavor, Flavor):
            object.__setattr__(self, "flavor", Flavor(self.flavor))

    @property
    def keyword(self) -> str:
        return "O" if self.flavor == Flavor.UNFLAGGED else f"O-{self.flavor.value}"

    def terms(self):
        return (self.agent, self.time)

    def children(self):
        return (self.condition, self.action)

    def map(self, on_term, on_formula):
        return Ought(on_term(self.agent), on_term(self.time),
                     on_formula(self.condition), on_formula(self.action), self.flavor)

    def action_literal(self) -> Optional[ActionLiteral]:
        """The (¬)happens(action(a*, α), t′) view of the prescribed action, if it has that shape."""
        positive = True
        body = self.action
        if isinstance(body, Not):
            positive, body = False, body.body
        if not isinstance(body, Atom) or body.predicate != "happens":
            return None
        event, when = body.term.args
        if not isinstance(event, Application) or event.symbol.name != "action":
            return None
        actor, action_type = event.args
        return ActionLiteral(positive, actor, action_type, when, self.action)


def conjoin(parts) -> Formula:
    parts = tuple(parts)
    if not parts:
        raise ValueError("cannot conjoin an empty sequence")
    return parts[0] if len(parts) == 1 else And(parts)


def formula_size(formula: Formula) -> int:
    size = 0
    for node in formula.walk():
        size += 1
        for term in node.terms():
            size += sum(1 for _ in term.subterms())
    return size


def term_occurrences(formula: Formula) -> Iterator[Term]:
    """Every term and subterm, binder variables included, in textual order."""
    for node in formula.walk():
        if isinstance(node, (ForAll, Exists)):
            yield node.var
        for term in node.terms():
            yield from term.subterms()


def free_variables(formula: Formula) -> Tuple[Variable, ...]:
    found = []

    def visit(node, bound):
        if isinstance(node, (ForAll, Exists)):
            visit(node.body, bound | {node.var})
            return
        for term in node.terms():
            for var in term.variables():
                if var not in bound and var not in found:
                    found.append(var)
        for child in node.children():
            visit(child, bound)

    visit(formula, frozenset())
    return tuple(found)


def is_closed(formula: Formula) -> bool:
    return not free_variables(formula)


def ground_terms(formula: Formula) -> Iterator[Term]:
    for node in formula.walk():
        for term in node.terms():
            for sub in term.subterms():
                if sub.is_ground:
                    yield sub
