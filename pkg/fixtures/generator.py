"""
Seeded random generators for well-sorted closed formulas and whole `.tai`
files over the base test signature (fixtures/kernel.py).
"""

import random
from typing import Dict, List, Optional

from fixtures.kernel import BASE_SIGNATURE
from tentacle.kernel.formulas import (
    And, Atom, Believes, Common, Desires, Exists, Flavor, ForAll, Formula,
    Implies, Intends, Knows, Not, Or, Ought, Perceives, Says,
)
from tentacle.kernel.printer import pretty
from tentacle.kernel.signature import Signature
from tentacle.kernel.terms import Term, Variable, apply, int_value, moment
from tentacle.kernel.vocabulary import action, can, happens, holds, plus, prior

BOUND_NAMES = ("x", "y", "z")
MODALS = (Perceives, Knows, Believes, Desires, Intends)


class FormulaGenerator:
    def __init__(self, signature: Signature, rng: random.Random, max_depth: int = 4):
        self.signature = signature
        self.rng = rng
        self.max_depth = max_depth

    # --- terms -----------------------------------------------------------

    def _pick(self, sort_name: str, scope: Dict[str, Variable]) -> Term:
        sort = self.signature.sort(sort_name)
        bound = [v for v in scope.values() if v.sort == sort]
        constants = list(self.signature.constants_of(sort))
        if bound and self.rng.random() < 0.4:
            return self.rng.choice(bound)
        return self.rng.choice(constants)

    def moment_term(self, scope) -> Term:
        bound = [v for v in scope.values() if v.sort.name == "Moment"]
        roll = self.rng.random()
        if bound and roll < 0.3:
            return self.rng.choice(bound)
        if bound and roll < 0.45:
            return plus(self.rng.choice(bound), self.rng.randint(1, 3))
        return moment(self.rng.randint(0, 5))

    def event_term(self, scope) -> Term:
        if self.rng.random() < 0.5:
            return action(self._pick("Agent", scope), self._pick("ActionType", scope))
        return self._pick("Event", scope)

    # --- formulas --------------------------------------------------------

    def atom(self, scope) -> Formula:
        choice = self.rng.randrange(6)
        if choice == 0:
            return Atom(self._pick("Boolean", scope))
        if choice == 1:
            return Atom(apply(self.signature.function("clean"), (self._pick("Room", scope),)))
        if choice == 2:
            return holds(self._pick("Fluent", scope), self.moment_term(scope))
        if choice == 3:
            return happens(self.event_term(scope), self.moment_term(scope))
        if choice == 4:
            return can(self._pick("Agent", scope), self._pick("ActionType", scope), self.moment_term(scope))
        earlier, later = self.moment_term(scope), self.moment_term(scope)
        # ground literals go in increasing order; a file may not order a moment before itself
        if int_value(earlier) is not None and int_value(later) is not None:
            low, high = sorted((int_value(earlier), int_value(later)))
            earlier, later = moment(low), moment(high if high > low else low + 1)
        return prior(earlier, later)

    def formula(self, depth: Optional[int] = None, scope: Dict[str, Variable] = None) -> Formula:
        depth = self.max_depth if depth is None else depth
        scope = scope or {}
        if depth <= 0 or self.rng.random() < 0.2:
            return self.atom(scope)
        sub = lambda: self.formula(depth - 1, scope)  # noqa: E731
        choice = self.rng.randrange(11)
        if choice == 0:
            return Not(sub())
        if choice == 1:
            return And(tuple(sub() for _ in range(self.rng.randint(2, 3))))
        if choice == 2:
            return Or(tuple(sub() for _ in range(self.rng.randint(2, 3))))
        if choice == 3:
            return Implies(sub(), sub())
        if choice in (4, 5):
            var = Variable(self.rng.choice(BOUND_NAMES),
                           self.signature.sort(self.rng.choice(("Room", "Moment", "Agent"))))
            inner = dict(scope)
            inner[var.name] = var
            body = self.formula(depth - 1, inner)
            return ForAll(var, body) if choice == 4 else Exists(var, body)
        if choice == 6:
            modal = self.rng.choice(MODALS)
            return modal(self._pick("Agent", scope), self.moment_term(scope), sub())
        if choice == 7:
            return Common(self.moment_term(scope), sub())
        if choice == 8:
            audience = self._pick("Agent", scope) if self.rng.random() < 0.5 else None
            return Says(self._pick("Agent", scope), self.moment_term(scope), sub(), audience)
        if choice == 9:
            flavor = self.rng.choice(list(Flavor))
            prescribed = happens(action(self._pick("Agent", scope), self._pick("ActionType", scope)),
                                 self.moment_term(scope))
            if self.rng.random() < 0.5:
                prescribed = Not(prescribed)
            return Ought(self._pick("Agent", scope), self.moment_term(scope), sub(), prescribed, flavor)
        return self.atom(scope)

    def formulas(self, count: int) -> List[Formula]:
        return [self.formula() for _ in range(count)]


def random_tai_file(signature: Signature, rng: random.Random, count: int = 5) -> str:
    """A `.tai` text: the base declarations followed by `count` random formulas."""
    generator = FormulaGenerator(signature, rng, max_depth=3)
    lines = [BASE_SIGNATURE.strip()]
    for i, formula in enumerate(generator.formulas(count), 1):
        lines.append(f"(formula r{i} {pretty(formula)})")
    return "\n".join(lines) + "\n"


# Predicates no base problem mentions; literals over them leave every
# entailment of the base signature unchanged.
CLUTTER_SIGNATURE = """
(function wing (Room) Room)
(function dusty (Room Moment) Boolean)
(function idle (Agent ActionType) Boolean)
"""


def clutter_literals(signature: Signature, rng: random.Random, count: int) -> List[Formula]:
    """Ground literals over the CLUTTER_SIGNATURE predicates, never complementary."""
    rooms = list(signature.constants_of(signature.sort("Room")))
    agents = list(signature.constants_of(signature.sort("Agent")))
    types = list(signature.constants_of(signature.sort("ActionType")))
    literals: List[Formula] = []
    while len(literals) < count:
        if rng.random() < 0.5:
            room = rng.choice(rooms)
            if rng.random() < 0.5:
                room = apply(signature.function("wing"), (room,))
            literal = Atom(apply(signature.function("dusty"), (room, moment(rng.randint(0, 9)))))
        else:
            literal = Atom(apply(signature.function("idle"), (rng.choice(agents), rng.choice(types))))
        if rng.random() < 0.3:
            literal = Not(literal)
        complement = literal.body if isinstance(literal, Not) else Not(literal)
        if complement not in literals:
            literals.append(literal)
    return literals


class ForwardDerivation:
    """
    Grows a ground Γ and a list of goals it entails by applying ∧I, ∨I,
    →E, IK and IB forward. →E, IK and IB add the implication they consume
    to Γ, so every goal follows from the final Γ.
    """

    ATOMS = ("clean", "holds", "happens", "can")

    def __init__(self, signature: Signature, rng: random.Random, layers: int = 2):
        self.signature = signature
        self.rng = rng
        self.layers = layers
        self.generator = FormulaGenerator(signature, rng)
        self.gamma: List[Formula] = []
        self.known: List[tuple] = []  # (formula, layer)
        self.modal: List[Formula] = []

    def atom(self) -> Formula:
        while True:
            atom = self.generator.atom({})
            if atom.predicate in self.ATOMS:
                return atom

    def _assert(self, formula: Formula):
        if formula not in self.gamma:
            self.gamma.append(formula)

    def seed(self, atoms: int = 3, modal: int = 3):
        agents = list(self.signature.constants_of(self.signature.sort("Agent")))
        for _ in range(atoms):
            fact = self.atom()
            self._assert(fact)
            self.known.append((fact, 0))
        for _ in range(modal):
            cls = self.rng.choice((Knows, Believes))
            fact = cls(self.rng.choice(agents), moment(self.rng.randint(0, 3)), self.atom())
            self._assert(fact)
            self.modal.append(fact)
            self.known.append((fact, 0))

    def _pick(self):
        return self.rng.choice([item for item in self.known if item[1] < self.layers])

    def step(self) -> tuple:
        """One forward rule application: (rule name, derived goal)."""
        rule = self.rng.choice(("and-intro", "or-intro", "imp-elim", "closure"))
        if rule == "and-intro":
            (left, a), (right, b) = self._pick(), self._pick()
            goal, layer = And((left, right)), max(a, b) + 1
        elif rule == "or-intro":
            part, layer = self._pick()
            other = self.atom()
            goal = Or((part, other) if self.rng.random() < 0.5 else (other, part))
            layer += 1
        elif rule == "imp-elim":
            premise, layer = self._pick()
            goal = self.atom()
            self._assert(Implies(premise, goal))
            layer += 1
        else:
            fact = self.rng.choice(self.modal)
            cls = type(fact)
            rule = "IK" if cls is Knows else "IB"
            consequence = self.atom()
            self._assert(cls(fact.agent, fact.time, Implies(fact.body, consequence)))
            later = moment(int_value(fact.time) + self.rng.randint(0, 2))
            goal, layer = cls(fact.agent, later, consequence), 1
        self.known.append((goal, layer))
        return rule, goal

    def derive(self, steps: int) -> List[tuple]:
        return [self.step() for _ in range(steps)]
