"""
Concrete syntax -> sort-checked AST.

Grammar (keyword heads):
    formula := atom | false | (not f) | (and f f+) | (or f f+) | (implies f f)
             | (forall (x Sort) f) | (exists (x Sort) f)
             | (P ag t f) | (K ag t f) | (B ag t f) | (D ag t f) | (I ag t f)
             | (C t f) | (S ag t f) | (S ag ag t f)
             | (O ag t f f) | (O-legal ag t f f) | (O-moral ag t f f)
Integer literals are Moment constants; `?name:Sort` is a free variable.
"""

from typing import Dict, Optional, Union

from tentacle.errors import ScenarioSyntaxError, SortError
from tentacle.kernel.formulas import (
    AGENT_MODALS, And, Atom, BOTTOM, Common, Exists, Flavor, ForAll, Formula,
    Implies, Not, Or, Ought, Says,
)
from tentacle.kernel.sexpr import Node, SList, Symbol, read_one
from tentacle.kernel.signature import RESERVED, Signature
from tentacle.kernel.sorts import AGENT, BOOLEAN, MOMENT, Sort
from tentacle.kernel.terms import Term, Variable, apply

FLAVORS = {"O": Flavor.UNFLAGGED, "O-legal": Flavor.LEGAL, "O-moral": Flavor.MORAL}


class Parser:
    def __init__(self, signature: Signature):
        self.signature = signature

    # --- terms ----------------------------------------------------------

    def term(self, node: Node, scope: Dict[str, Variable], expected: Optional[Sort] = None) -> Term:
        result = self._term(node, scope)
        if expected is not None and not result.sort.is_subsort_of(expected):
            raise SortError(expected.name, result.sort.name, node.position)
        return result

    def _term(self, node: Node, scope) -> Term:
        if isinstance(node, Symbol):
            text = node.text
            if text in RESERVED:
                raise SortError("a term", "a formula keyword", node.position)
            if text.startswith("?"):
                return self._free_variable(node)
            if text in scope:
                return scope[text]
            if text in self.signature.functions:
                symbol = self.signature.functions[text]
                raise ScenarioSyntaxError(
                    f"Function '{text}' expects {symbol.arity} arguments", node.position)
            return self.signature.constant(text, node.position)

        head = node.items[0] if node.items else None
        if not isinstance(head, Symbol):
            raise ScenarioSyntaxError("Expected a function symbol at the head of a term", node.position)
        if head.text in RESERVED:
            raise SortError("a term", "a formula", node.position)
        symbol = self.signature.function(head.text, head.position)
        args = node.items[1:]
        if len(args) != symbol.arity:
            raise ScenarioSyntaxError(
                f"'{symbol.name}' takes {symbol.arity} arguments, got {len(args)}", node.position)
        parsed = [self.term(arg, scope, expected) for arg, expected in zip(args, symbol.arg_sorts)]
        return apply(symbol, parsed)

    def _free_variable(self, node: Symbol) -> Variable:
        name, _, sort_name = node.text[1:].partition(":")
        if not name or not sort_name:
            raise ScenarioSyntaxError(f"Malformed free variable '{node.text}'", node.position)
        return Variable(name, self.signature.sort(sort_name, node.position))

    # --- formulas -------------------------------------------------------

    def formula(self, node: Node, scope: Dict[str, Variable]) -> Formula:
        if isinstance(node, Symbol):
            if node.text == "false":
                return BOTTOM
            return self._atom(node, scope)

        head = node.head
        args = node.items[1:]
        if head == "not":
            self._arity(node, args, 1)
            return Not(self.formula(args[0], scope))
        if head in ("and", "or"):
            if len(args) < 2:
                raise ScenarioSyntaxError(f"'{head}' needs at least two arguments", node.position)
            parts = tuple(self.formula(a, scope) for a in args)
            return And(parts) if head == "and" else Or(parts)
        if head == "implies":
            self._arity(node, args, 2)
            return Implies(self.formula(args[0], scope), self.formula(args[1], scope))
        if head in ("forall", "exists"):
            return self._quantifier(node, head, args, scope)
        if head in AGENT_MODALS:
            self._arity(node, args, 3)
            agent = self.term(args[0], scope, AGENT)
            time = self.term(args[1], scope, MOMENT)
            return AGENT_MODALS[head](agent, time, self.formula(args[2], scope))
        if head == "C":
            self._arity(node, args, 2)
            return Common(self.term(args[0], scope, MOMENT), self.formula(args[1], scope))
        if head == "S":
            if len(args) == 3:
                return Says(self.term(args[0], scope, AGENT), self.term(args[1], scope, MOMENT),
                            self.formula(args[2], scope))
            self._arity(node, args, 4)
            return Says(self.term(args[0], scope, AGENT), self.term(args[2], scope, MOMENT),
                        self.formula(args[3], scope), audience=self.term(args[1], scope, AGENT))
        if head in FLAVORS:
            self._arity(node, args, 4)
            return Ought(
                self.term(args[0], scope, AGENT),
                self.term(args[1], scope, MOMENT),
                self.formula(args[2], scope),
                self.formula(args[3], scope),
                FLAVORS[head],
            )
        return self._atom(node, scope)

    def _atom(self, node: Node, scope) -> Atom:
        term = self._term(node, scope)
        if not term.sort.is_subsort_of(BOOLEAN):
            raise SortError(BOOLEAN.name, term.sort.name, node.position)
        return Atom(term)

    def _quantifier(self, node: SList, head: str, args, scope):
        self._arity(node, args, 2)
        binder = args[0]
        if (not isinstance(binder, SList) or len(binder.items) != 2
                or not all(isinstance(i, Symbol) for i in binder.items)):
            raise ScenarioSyntaxError(f"'{head}' expects a binder of the form (x Sort)", binder.position)
        name, sort_name = binder.items[0].text, binder.items[1].text
        if name in RESERVED or name.isdigit() or name.startswith("?"):
            raise ScenarioSyntaxError(f"'{name}' cannot be bound", binder.items[0].position)
        var = Variable(name, self.signature.sort(sort_name, binder.items[1].position))
        inner = dict(scope)
        inner[name] = var
        body = self.formula(args[1], inner)
        return ForAll(var, body) if head == "forall" else Exists(var, body)

    @staticmethod
    def _arity(node: SList, args, count: int):
        if len(args) != count:
            raise ScenarioSyntaxError(
                f"'{node.head}' takes {count} arguments, got {len(args)}", node.position)


def _is_formula_node(node: Node) -> bool:
    if isinstance(node, Symbol):
        return node.text == "false"
    return node.head in RESERVED


def parse_node(node: Node, signature: Signature) -> Union[Formula, Term]:
    parser = Parser(signature)
    if _is_formula_node(node):
        return parser.formula(node, {})
    term = parser.term(node, {})
    return Atom(term) if term.sort.is_subsort_of(BOOLEAN) else term


def parse(text: str, signature: Signature) -> Union[Formula, Term]:
    """Parse one expression; Boolean-sorted terms come back as atoms."""
    return parse_node(read_one(text), signature)


def parse_formula(text: str, signature: Signature) -> Formula:
    return Parser(signature).formula(read_one(text), {})


def parse_term(text: str, signature: Signature) -> Term:
    return Parser(signature).term(read_one(text), {})
