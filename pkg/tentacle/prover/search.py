"""
Bounded natural-deduction proof search.

The search is goal directed:
    1. lookup in the forward closure of Γ and of the live assumptions
       (closure = ∧E, I4 and DNE applied to saturation)
    2. decided order facts prior(i, j) / ¬prior(i, j)
    3. chaining: match the goal against the head of a (∀-prefixed)
       implication or fact, instantiate the remaining variables from known
       literals, prove the antecedents
    4. introduction rules by goal shape, then the modal schemata
       (IK, IB with persistence lifting, I13, I14)
    5. case splits (∨E, ∃E) and classical reductio, at limited depth

Shallow mode (used for consistency checks) stops after step 3 plus ∧I.
Iteration order is list/dict insertion order throughout, so identical inputs
yield identical proofs. Instantiation candidates are ranked by the earliest Γ
position they rest on: appending formulas to Γ never pushes an existing
candidate past the budget cap.
"""

import logging
from collections import deque
from dataclasses import dataclass, replace
from itertools import product
from typing import Dict, List, Optional, Tuple

from tentacle.kernel.formulas import (
    And, Atom, BOTTOM, Believes, Bottom, Exists, ForAll, Formula, Implies,
    Intends, Knows, Not, Or, Ought, Perceives, formula_size, free_variables,
    ground_terms,
)
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.moments import MomentOrder
from tentacle.kernel.printer import pretty
from tentacle.kernel.substitution import alpha_key, fresh_variable, instantiate
from tentacle.kernel.terms import Term, Variable
from tentacle.kernel.vocabulary import negate
from tentacle.prover.matching import match, shape
from tentacle.prover.rules import (
    Budget, Consistent, Inconsistent, NoProofWithinBudget, Proof, RuleId, hyp,
)

logger = logging.getLogger(__name__)

MAX_SPLITS = 2


@dataclass(frozen=True)
class Context:
    """Live assumptions and eigenvariables of the current subproof."""
    assumptions: Tuple[Formula, ...] = ()
    eigen: Tuple[Variable, ...] = ()
    split: Tuple[object, ...] = ()

    def assume(self, formula: Formula) -> "Context":
        return replace(self, assumptions=self.assumptions + (formula,))

    def with_eigen(self, var: Variable) -> "Context":
        return replace(self, eigen=self.eigen + (var,))

    def mark_split(self, key) -> "Context":
        return replace(self, split=self.split + (key,))

    @property
    def key(self):
        return (tuple(alpha_key(a) for a in self.assumptions), self.eigen, self.split)


ROOT = Context()


@dataclass
class Rule:
    """A known formula read as ∀v̄ (A1 → ... → An → head)."""
    formula: Formula
    proof: Proof
    variables: Tuple[Variable, ...]
    antecedents: Tuple[Formula, ...]
    head: Formula


@dataclass
class View:
    """Forward closure of a set of formulas, indexed for lookup and chaining.

    `arrival` maps each closure member to the earliest seed position it
    follows from.
    """
    index: Dict[object, Proof]
    arrival: Dict[object, int]
    items: List[Tuple[Formula, Proof]]
    literals: Dict[tuple, List[Formula]]
    rules: Dict[tuple, List[Rule]]


def _strip(formula: Formula):
    variables = []
    while isinstance(formula, ForAll):
        variables.append(formula.var)
        formula = formula.body
    antecedents = []
    while isinstance(formula, Implies):
        antecedents.append(formula.antecedent)
        formula = formula.consequent
    return tuple(variables), tuple(antecedents), formula


def _conjuncts(formula: Formula):
    if isinstance(formula, And):
        for part in formula.parts:
            yield from _conjuncts(part)
    else:
        yield formula


def _is_literal(formula: Formula) -> bool:
    return isinstance(formula, Atom) or (isinstance(formula, Not) and isinstance(formula.body, Atom))


def _keep_earliest(ranked: list, value, arrival: int):
    """Append (value, arrival) to `ranked`, or lower the arrival of an equal entry."""
    for index, (seen, earlier) in enumerate(ranked):
        if seen == value:
            ranked[index] = (seen, min(earlier, arrival))
            return
    ranked.append((value, arrival))


def build_view(seed: List[Tuple[Formula, Proof]]) -> View:
    index: Dict[object, Proof] = {}
    arrival: Dict[object, int] = {}
    items: List[Tuple[Formula, Proof]] = []
    queue = deque((formula, proof, position) for position, (formula, proof) in enumerate(seed))
    while queue:
        formula, proof, source = queue.popleft()
        key = alpha_key(formula)
        if key in index:
            arrival[key] = min(arrival[key], source)
            continue
        index[key] = proof
        arrival[key] = source
        items.append((formula, proof))
        if isinstance(formula, And):
            queue.extend((part, Proof(part, RuleId.AND_E, (proof,)), source) for part in formula.parts)
        elif isinstance(formula, Knows):
            queue.append((formula.body, Proof(formula.body, RuleId.I4, (proof,)), source))
        elif isinstance(formula, Not) and isinstance(formula.body, Not):
            inner = formula.body.body
            queue.append((inner, Proof(inner, RuleId.DNE, (proof,)), source))

    literals: Dict[tuple, List[Formula]] = {}
    rules: Dict[tuple, List[Rule]] = {}
    for formula, proof in items:
        if _is_literal(formula):
            literals.setdefault(shape(formula), []).append(formula)
        variables, antecedents, head = _strip(formula)
        if variables or antecedents:
            rules.setdefault(shape(head), []).append(Rule(formula, proof, variables, antecedents, head))
    return View(index, arrival, items, literals, rules)


class Prover:
    def __init__(self, kb: KnowledgeBase, budget: Budget = Budget()):
        self.kb = kb
        self.budget = budget
        self.order = MomentOrder(kb.formulas)
        self.world = build_view([(f, hyp(f, "gamma")) for f in kb.formulas])
        self._views: Dict[object, View] = {}
        self._universe: List[Term] = []
        self._arrival: Dict[Term, int] = {}
        for constant in kb.signature.constants.values():
            self._add_term(constant, -1)
        for position, formula in enumerate(kb.formulas):
            self._grow_universe(formula, position)
        self._proved: Dict[object, Proof] = {}
        self._failed: Dict[object, tuple] = {}
        self._active = set()
        self._cutoffs = 0
        self._exhausted: Optional[str] = None
        self._inner: Dict[object, "Prover"] = {}

    # --- public entry points ---------------------------------------------

    def prove(self, goal: Formula):
        self._exhausted = None
        if formula_size(goal) > self.budget.size:
            return NoProofWithinBudget(goal, self.budget, "size")
        self._grow_universe(goal)
        proof = self._prove(goal, ROOT, self.budget.depth, False)
        if proof is None:
            logger.debug("[Prover] no proof of %s (exhausted=%s)", pretty(goal), self._exhausted)
            return NoProofWithinBudget(goal, self.budget, self._exhausted)
        if proof.rule == RuleId.HYP:
            proof = Proof(goal, RuleId.REIT, (proof,))
        return proof

    def refute(self, focus: Tuple[Formula, ...] = ()) -> Optional[Proof]:
        """Search for a proof of ⊥, trying literals of `focus` first."""
        self._exhausted = None
        return self._refute(ROOT, self.budget.depth, focus or None)

    # --- bookkeeping ------------------------------------------------------

    def _note(self, reason: str):
        if self._exhausted is None:
            self._exhausted = reason

    def _add_term(self, term: Term, arrival: int):
        """Record `term` once, at the earliest Γ position mentioning it.

        Declared constants and goal terms arrive at -1.
        """
        if term.sort.name == "Boolean":
            return
        if term in self._arrival:
            self._arrival[term] = min(self._arrival[term], arrival)
            return
        self._arrival[term] = arrival
        self._universe.append(term)

    def _grow_universe(self, formula: Formula, arrival: int = -1):
        for term in ground_terms(formula):
            self._add_term(term, arrival)

    def _terms_of(self, sort, ctx: Context) -> List[Term]:
        found = [t for t in self._universe if t.sort.is_subsort_of(sort)]
        found.extend(v for v in ctx.eigen if v.sort.is_subsort_of(sort))
        return found

    def _term_arrival(self, term: Term) -> int:
        return self._arrival.get(term, -1)

    def _fact_arrival(self, view: View, fact: Formula) -> int:
        return view.arrival[alpha_key(fact)] if view is self.world else -1

    def _ordered_product(self, pools: List[List[Term]]):
        """
        The product of `pools`, grouped by the latest arrival among each
        tuple's terms; yields (values, arrival).
        """
        if not all(pools):
            return
        levels = sorted({self._term_arrival(t) for pool in pools for t in pool})
        for level in levels:
            heads = [[t for t in pool if self._term_arrival(t) <= level] for pool in pools]
            if not all(heads):
                continue
            for values in product(*heads):
                if any(self._term_arrival(t) == level for t in values):
                    yield values, level

    def _view(self, ctx: Context) -> Optional[View]:
        if not ctx.assumptions:
            return None
        key = ctx.key
        if key not in self._views:
            self._views[key] = build_view([(a, hyp(a, "assumption")) for a in ctx.assumptions])
        return self._views[key]

    def _views_of(self, ctx: Context) -> List[View]:
        local = self._view(ctx)
        return [local, self.world] if local else [self.world]

    def _known(self, goal: Formula, ctx: Context) -> Optional[Proof]:
        key = alpha_key(goal)
        for view in self._views_of(ctx):
            if key in view.index:
                return view.index[key]
        bottom = alpha_key(BOTTOM)
        for view in self._views_of(ctx):
            if bottom in view.index and not isinstance(goal, Bottom):
                return Proof(goal, RuleId.BOT_E, (view.index[bottom],))
        return None

    # --- core -------------------------------------------------------------

    def _prove(self, goal: Formula, ctx: Context, depth: int, shallow: bool) -> Optional[Proof]:
        known = self._known(goal, ctx)
        if known is not None:
            return known
        decided = self._decide_order(goal)
        if decided is not None:
            return decided
        if depth <= 0:
            self._note("depth")
            return None
        if formula_size(goal) > self.budget.size:
            self._note("size")
            return None

        key = (alpha_key(goal), ctx.key, shallow)
        if key in self._proved:
            return self._proved[key]
        failed = self._failed.get(key)
        if failed is not None and failed[0] >= depth:
            if failed[1]:
                self._note(failed[1])
            return None
        if key in self._active:
            self._cutoffs += 1
            return None

        self._active.add(key)
        cutoffs = self._cutoffs
        outer, self._exhausted = self._exhausted, None
        try:
            proof = self._search(goal, ctx, depth, shallow)
        finally:
            self._active.discard(key)
            reason = self._exhausted
            self._exhausted = outer or reason
        if proof is not None:
            self._proved[key] = proof
        elif self._cutoffs == cutoffs and (failed is None or depth > failed[0]):
            self._failed[key] = (depth, reason)
        return proof

    def _decide_order(self, goal: Formula) -> Optional[Proof]:
        positive = True
        atom = goal
        if isinstance(goal, Not):
            positive, atom = False, goal.body
        if not isinstance(atom, Atom) or atom.predicate != "prior" or not atom.term.is_ground:
            return None
        verdict = self.order.decide_prior(*atom.term.args)
        if verdict is None or verdict != positive:
            return None
        return hyp(goal, "order")

    def _search(self, goal: Formula, ctx: Context, depth: int, shallow: bool) -> Optional[Proof]:
        proof = self._chain(goal, ctx, depth, shallow)
        if proof is not None:
            return proof
        if isinstance(goal, And):
            return self._and_intro(goal, ctx, depth, shallow)
        if isinstance(goal, Bottom):
            return self._refute(ctx, depth, None, shallow)
        if shallow:
            return None

        proof = self._introduce(goal, ctx, depth)
        if proof is not None:
            return proof
        if depth >= 2:
            proof = self._split(goal, ctx, depth)
            if proof is not None:
                return proof
        return self._reductio(goal, ctx, depth)

    def _and_intro(self, goal: And, ctx, depth, shallow):
        parts = []
        for part in goal.parts:
            proof = self._prove(part, ctx, depth - 1, shallow)
            if proof is None:
                return None
            parts.append(proof)
        return Proof(goal, RuleId.AND_I, tuple(parts))

    # --- chaining ---------------------------------------------------------

    def _chain(self, goal: Formula, ctx: Context, depth: int, shallow: bool) -> Optional[Proof]:
        for view in self._views_of(ctx):
            for rule in view.rules.get(shape(goal), ()):
                partial = match(rule.head, goal, frozenset(rule.variables))
                if partial is None:
                    continue
                for binding in self._complete(rule, partial, ctx):
                    proof = self._apply_rule(rule, binding, goal, ctx, depth, shallow)
                    if proof is not None:
                        return proof
        return None

    def _complete(self, rule: Rule, partial, ctx: Context):
        """
        Full bindings for the rule's variables, fact-driven first, capped by the
        budget. Candidates are ranked by the latest Γ position they rest on, so
        formulas appended to Γ only add candidates behind the existing ones.
        """
        unbound = [v for v in rule.variables if v not in partial]
        if not unbound:
            return [partial]
        bindings = [(partial, -1)]
        views = self._views_of(ctx)
        for antecedent in rule.antecedents:
            for literal in _conjuncts(antecedent):
                if not _is_literal(literal):
                    continue
                open_vars = [v for v in free_variables(literal) if v in unbound]
                if not open_vars or all(all(v in b for v in open_vars) for b, _ in bindings):
                    continue
                extended = []
                for binding, arrival in bindings:
                    for view in views:
                        for fact in view.literals.get(shape(literal), ()):
                            result = match(literal, fact, frozenset(rule.variables), binding)
                            if result is not None:
                                _keep_earliest(extended, result, max(arrival, self._fact_arrival(view, fact)))
                if extended:
                    extended.sort(key=lambda item: item[1])
                    bindings = extended

        cap = self.budget.candidates
        complete = []
        for binding, arrival in bindings:
            missing = [v for v in rule.variables if v not in binding]
            if not missing:
                complete.append((binding, arrival))
                continue
            pools = [self._terms_of(v.sort, ctx) for v in missing]
            for count, (values, latest) in enumerate(self._ordered_product(pools)):
                if count > cap:
                    break
                filled = dict(binding)
                filled.update(zip(missing, values))
                complete.append((filled, max(arrival, latest)))
        complete.sort(key=lambda item: item[1])
        if len(complete) > cap:
            self._note("candidates")
            complete = complete[:cap]
        return [binding for binding, _ in complete]

    def _apply_rule(self, rule: Rule, binding, goal, ctx, depth, shallow) -> Optional[Proof]:
        proof = rule.proof
        current = rule.formula
        for var in rule.variables:
            term = binding[var]
            current = instantiate(current, term)
            proof = Proof(current, RuleId.ALL_E, (proof,), (f"term:{pretty(term)}",))
        while isinstance(current, Implies):
            support = self._prove(current.antecedent, ctx, depth - 1, shallow)
            if support is None:
                return None
            current = current.consequent
            proof = Proof(current, RuleId.IMP_E, (proof, support))
        if alpha_key(current) != alpha_key(goal):
            return None
        return proof

    # --- introduction rules and modal schemata -----------------------------

    def _introduce(self, goal: Formula, ctx: Context, depth: int) -> Optional[Proof]:
        if isinstance(goal, Implies):
            body = self._prove(goal.consequent, ctx.assume(goal.antecedent), depth - 1, False)
            if body is not None:
                return Proof(goal, RuleId.IMP_I, (body,), (f"discharge:{pretty(goal.antecedent)}",))
            return None
        if isinstance(goal, Not):
            body = self._prove(BOTTOM, ctx.assume(goal.body), depth - 1, False)
            if body is not None:
                return Proof(goal, RuleId.NOT_I, (body,), (f"discharge:{pretty(goal.body)}",))
            return None
        if isinstance(goal, ForAll):
            return self._forall_intro(goal, ctx, depth)
        if isinstance(goal, Exists):
            return self._exists_intro(goal, ctx, depth)
        if isinstance(goal, Or):
            for part in goal.parts:
                proof = self._prove(part, ctx, depth - 1, False)
                if proof is not None:
                    return Proof(goal, RuleId.OR_I, (proof,))
            return None
        if isinstance(goal, Knows):
            return self._i14(goal, ctx, depth) or self._closure_intro(goal, ctx, depth, RuleId.IK)
        if isinstance(goal, Believes):
            return self._closure_intro(goal, ctx, depth, RuleId.IB)
        if isinstance(goal, Perceives):
            return self._i13(goal, ctx)
        return None

    def _avoid(self, ctx: Context, goal: Formula):
        names = {v.name for v in ctx.eigen}
        for assumption in ctx.assumptions:
            names.update(v.name for v in free_variables(assumption))
        names.update(v.name for v in free_variables(goal))
        return names

    def _forall_intro(self, goal: ForAll, ctx, depth):
        eigen = fresh_variable(goal.var, self._avoid(ctx, goal))
        body = self._prove(instantiate(goal, eigen), ctx.with_eigen(eigen), depth - 1, False)
        if body is None:
            return None
        return Proof(goal, RuleId.ALL_I, (body,), (f"eigen:{eigen.name}:{eigen.sort.name}",))

    def _exists_intro(self, goal: Exists, ctx, depth):
        witnesses: List[Tuple[Term, int]] = []
        free = frozenset((goal.var,))
        for view in self._views_of(ctx):
            for fact in view.literals.get(shape(goal.body), ()):
                binding = match(goal.body, fact, free)
                if binding and goal.var in binding:
                    _keep_earliest(witnesses, binding[goal.var], self._fact_arrival(view, fact))
        for term in self._terms_of(goal.var.sort, ctx):
            _keep_earliest(witnesses, term, self._term_arrival(term))
        witnesses.sort(key=lambda item: item[1])
        if len(witnesses) > self.budget.candidates:
            self._note("candidates")
            witnesses = witnesses[: self.budget.candidates]
        for term, _ in witnesses:
            proof = self._prove(instantiate(goal, term), ctx, depth - 1, False)
            if proof is not None:
                return Proof(goal, RuleId.EX_I, (proof,), (f"term:{pretty(term)}",))
        return None

    def _known_items(self, ctx: Context, cls):
        for view in self._views_of(ctx):
            for formula, proof in view.items:
                if isinstance(formula, cls):
                    yield formula, proof

    def _closure_intro(self, goal, ctx: Context, depth: int, rule: RuleId) -> Optional[Proof]:
        """
        IK / IB. Premises of the same agent at times t1 <= goal time are first
        lifted to the goal time (one-premise instance), then the inner
        derivation runs over their contents alone.
        """
        cls = type(goal)
        premises = []
        contents = []
        for formula, proof in self._known_items(ctx, cls):
            if formula.agent != goal.agent or not self.order.leq(formula.time, goal.time):
                continue
            if free_variables(formula):
                continue
            if formula.time != goal.time:
                lifted = cls(formula.agent, goal.time, formula.body)
                proof = Proof(lifted, rule, (proof,),
                              (f"order:{pretty(formula.time)} <= {pretty(goal.time)}",))
            if alpha_key(formula.body) == alpha_key(goal.body):
                return proof
            if alpha_key(formula.body) in {alpha_key(c) for c in contents}:
                continue
            premises.append(proof)
            contents.append(formula.body)
        if not premises or depth < 2 or free_variables(goal):
            return None
        inner = self._inner_prover(contents)
        derivation = inner._prove(goal.body, ROOT, depth - 1, False)
        if derivation is None:
            if inner._exhausted:
                self._note(inner._exhausted)
            return None
        if derivation.rule == RuleId.HYP:
            derivation = Proof(goal.body, RuleId.REIT, (derivation,))
        side = (f"order:{pretty(goal.time)} <= {pretty(goal.time)}", "inner")
        return Proof(goal, rule, tuple(premises) + (derivation,), side)

    def _inner_prover(self, contents) -> "Prover":
        key = tuple(alpha_key(c) for c in contents)
        if key not in self._inner:
            base = KnowledgeBase(self.kb.signature)
            for i, formula in enumerate(contents, 1):
                base.add(formula, f"c{i}")
            self._inner[key] = Prover(base, self.budget)
        return self._inner[key]

    def _i13(self, goal: Perceives, ctx) -> Optional[Proof]:
        for formula, proof in self._known_items(ctx, Intends):
            if formula.agent != goal.agent or alpha_key(formula.body) != alpha_key(goal.body):
                continue
            if self.order.lt(formula.time, goal.time):
                return Proof(goal, RuleId.I13, (proof,),
                             (f"order:{pretty(formula.time)} < {pretty(goal.time)}",))
        return None

    def _i14(self, goal: Knows, ctx, depth) -> Optional[Proof]:
        intention = goal.body
        if not isinstance(intention, Intends):
            return None
        if (intention.agent, intention.time) != (goal.agent, goal.time):
            return None
        for formula, proof in self._known_items(ctx, Ought):
            if (formula.agent, formula.time) != (goal.agent, goal.time):
                continue
            if alpha_key(formula.action) != alpha_key(intention.body):
                continue
            condition = self._prove(Believes(goal.agent, goal.time, formula.condition), ctx, depth - 1, False)
            if condition is None:
                continue
            belief = self._prove(Believes(goal.agent, goal.time, formula), ctx, depth - 1, False)
            if belief is None:
                continue
            return Proof(goal, RuleId.I14, (condition, belief, proof))
        return None

    # --- elimination splits and classical reasoning ------------------------

    def _split(self, goal: Formula, ctx: Context, depth: int) -> Optional[Proof]:
        tried = 0
        for view in self._views_of(ctx):
            for formula, proof in view.items:
                if not isinstance(formula, (Or, Exists)):
                    continue
                key = alpha_key(formula)
                if key in ctx.split:
                    continue
                if tried >= MAX_SPLITS:
                    return None
                tried += 1
                marked = ctx.mark_split(key)
                if isinstance(formula, Or):
                    cases = []
                    for part in formula.parts:
                        case = self._prove(goal, marked.assume(part), depth - 1, False)
                        if case is None:
                            break
                        cases.append(case)
                    else:
                        side = tuple(f"discharge:{pretty(p)}" for p in formula.parts)
                        return Proof(goal, RuleId.OR_E, (proof,) + tuple(cases), side)
                else:
                    eigen = fresh_variable(formula.var, self._avoid(ctx, goal) | {
                        v.name for v in free_variables(formula)})
                    case_ctx = marked.assume(instantiate(formula, eigen)).with_eigen(eigen)
                    case = self._prove(goal, case_ctx, depth - 1, False)
                    if case is not None:
                        return Proof(goal, RuleId.EX_E, (proof, case),
                                     (f"eigen:{eigen.name}:{eigen.sort.name}",))
        return None

    def _has_disjunction(self, ctx: Context) -> bool:
        return any(isinstance(f, (Or, Exists)) and alpha_key(f) not in ctx.split
                   for view in self._views_of(ctx) for f, _ in view.items)

    def _reductio(self, goal: Formula, ctx: Context, depth: int) -> Optional[Proof]:
        if depth < 3 or isinstance(goal, (Not, Bottom)):
            return None
        if not isinstance(goal, (Or, Exists)):
            if not (isinstance(goal, Atom) and self._has_disjunction(ctx)):
                return None
        denial = Not(goal)
        if any(alpha_key(a) == alpha_key(denial) for a in ctx.assumptions):
            return None
        absurd = self._prove(BOTTOM, ctx.assume(denial), depth - 1, False)
        if absurd is None:
            return None
        double = Proof(Not(denial), RuleId.NOT_I, (absurd,), (f"discharge:{pretty(denial)}",))
        return Proof(goal, RuleId.DNE, (double,))

    def _refute(self, ctx: Context, depth: int, focus: Optional[Tuple[Formula, ...]],
                shallow: bool = False) -> Optional[Proof]:
        views = self._views_of(ctx)

        # 1. complementary pairs already known
        for view in views:
            for formula, proof in view.items:
                if isinstance(formula, Not):
                    positive = self._lookup_only(formula.body, ctx)
                    if positive is not None:
                        return Proof(BOTTOM, RuleId.NOT_E, (positive, proof))
                else:
                    negative = self._lookup_only(Not(formula), ctx)
                    if negative is not None:
                        return Proof(BOTTOM, RuleId.NOT_E, (proof, negative))

        # 2. a rule whose head is ⊥
        if depth > 0:
            proof = self._chain(BOTTOM, ctx, depth, True)
            if proof is not None:
                return proof

        # 3. derive the complement of a focused literal
        if focus is None:
            local = self._view(ctx)
            source = local.items if local else self.world.items
        else:
            source = build_view([(f, hyp(f, "gamma")) for f in focus]).items
        if depth <= 1:
            self._note("depth")
            return None
        for formula, _ in source:
            if not _is_literal(formula):
                continue
            proof = self._known(formula, ctx)
            if proof is None:
                continue
            complement = self._prove(negate(formula), ctx, depth - 1, True)
            if complement is None:
                continue
            if isinstance(formula, Not):
                return Proof(BOTTOM, RuleId.NOT_E, (complement, proof))
            return Proof(BOTTOM, RuleId.NOT_E, (proof, complement))

        # 4. a negated assumption whose body is provable
        if shallow:
            return None
        for assumption in ctx.assumptions:
            if not isinstance(assumption, Not) or _is_literal(assumption):
                continue
            body = self._prove(assumption.body, ctx, depth - 1, False)
            if body is not None:
                return Proof(BOTTOM, RuleId.NOT_E, (body, self._known(assumption, ctx)))
        for assumption in ctx.assumptions:
            if isinstance(assumption, Not) and _is_literal(assumption):
                body = self._prove(assumption.body, ctx, depth - 1, False)
                if body is not None:
                    return Proof(BOTTOM, RuleId.NOT_E, (body, self._known(assumption, ctx)))
        return None

    def _lookup_only(self, goal: Formula, ctx: Context) -> Optional[Proof]:
        key = alpha_key(goal)
        for view in self._views_of(ctx):
            if key in view.index:
                return view.index[key]
        return None


def prove(gamma: KnowledgeBase, goal: Formula, budget: Budget = Budget()):
    """Proof of `goal` from `gamma`, or NoProofWithinBudget."""
    return Prover(gamma, budget).prove(goal)


def consistent(gamma: KnowledgeBase, extra=(), budget: Budget = Budget()):
    """
    Bounded consistency check of gamma ∪ extra.
    Returns Inconsistent with a refutation that checks against the extended
    base, or Consistent (as far as checked).
    """
    extra = tuple(extra)
    base = gamma.extend(extra, prefix="extra") if extra else gamma
    prover = Prover(base, budget)
    refutation = prover.refute(extra)
    if refutation is not None:
        logger.debug("[Prover] refutation found with %d nodes", refutation.size)
        return Inconsistent(refutation, base)
    return Consistent(budget, prover._exhausted)
