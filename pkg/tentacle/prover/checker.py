"""
Independent proof checker.

Shares nothing with the search beyond the kernel: every node is re-validated
as an instance of its rule, side strings are re-parsed, order conditions are
re-decided, and discharged assumptions are recomputed from the formulas.
The first failing node in pre-order is reported.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from tentacle.errors import InputError
from tentacle.kernel.formulas import (
    And, Atom, Believes, Bottom, Exists, ForAll, Formula, Implies,
    Intends, Knows, Not, Or, Ought, Perceives, free_variables,
)
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.moments import MomentOrder
from tentacle.kernel.parser import parse_term
from tentacle.kernel.substitution import alpha_key, check_formula, instantiate
from tentacle.kernel.terms import Variable
from tentacle.prover.rules import Proof, RuleId

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Accept:
    nodes: int

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Reject:
    node: Proof
    reason: str
    path: str = "root"

    def __bool__(self):
        return False


class _Failure(Exception):
    def __init__(self, node, reason, path):
        self.node, self.reason, self.path = node, reason, path


@dataclass(frozen=True)
class _Base:
    keys: frozenset
    order: MomentOrder

    @classmethod
    def of(cls, formulas):
        formulas = tuple(formulas)
        return cls(frozenset(alpha_key(f) for f in formulas), MomentOrder(formulas))


def _same(left: Formula, right: Formula) -> bool:
    return alpha_key(left) == alpha_key(right)


class Checker:
    def __init__(self, kb: KnowledgeBase):
        self.signature = kb.signature
        self.world = _Base.of(kb.formulas)
        self.count = 0

    def check(self, proof: Proof):
        try:
            self._node(proof, self.world, (), "root")
        except _Failure as failure:
            logger.debug("[Checker] reject at %s: %s", failure.path, failure.reason)
            return Reject(failure.node, failure.reason, failure.path)
        return Accept(self.count)

    # --- helpers ------------------------------------------------------------

    def _term(self, node, text, path):
        try:
            return parse_term(text, self.signature)
        except InputError as exc:
            raise _Failure(node, f"unreadable side term '{text}': {exc}", path)

    def _side(self, node, prefix, path) -> str:
        value = node.side_value(prefix)
        if value is None:
            raise _Failure(node, f"missing '{prefix}' side entry", path)
        return value

    def _eigen(self, node, path) -> Variable:
        value = self._side(node, "eigen", path)
        name, _, sort_name = value.rpartition(":")
        if not name or sort_name not in self.signature.sorts:
            raise _Failure(node, f"malformed eigenvariable '{value}'", path)
        return Variable(name, self.signature.sorts[sort_name])

    def _order(self, node, base: _Base, earlier, later, strict: bool, path):
        value = self._side(node, "order", path)
        operator = " < " if strict else " <= "
        left_text, sep, right_text = value.partition(operator)
        if not sep:
            raise _Failure(node, f"order side entry '{value}' lacks '{operator.strip()}'", path)
        left, right = self._term(node, left_text, path), self._term(node, right_text, path)
        if left != earlier or right != later:
            raise _Failure(node, "order side entry does not name the rule's moments", path)
        holds = base.order.lt(left, right) if strict else base.order.leq(left, right)
        if not holds:
            raise _Failure(node, f"time condition {value} does not hold", path)

    def _premises(self, node, count, path):
        if len(node.premises) != count:
            raise _Failure(node, f"{node.rule.value} needs {count} premises, has {len(node.premises)}", path)

    @staticmethod
    def _need(condition, node, reason, path):
        if not condition:
            raise _Failure(node, reason, path)

    # --- rules --------------------------------------------------------------

    def _node(self, node: Proof, base: _Base, live: Tuple, path: str):
        self.count += 1
        if not isinstance(node, Proof) or not isinstance(node.rule, RuleId):
            raise _Failure(node, "not a proof node", path)
        try:
            check_formula(node.conclusion, self.signature)
        except InputError as exc:
            raise _Failure(node, f"ill-formed conclusion: {exc}", path)

        c = node.conclusion
        p = node.premises
        need = lambda cond, reason: self._need(cond, node, reason, path)  # noqa: E731
        sub = lambda i, extra=(): self._node(p[i], base, live + extra, f"{path}.{i}")  # noqa: E731
        rule = node.rule

        if rule == RuleId.HYP:
            self._premises(node, 0, path)
            origin = node.side[0] if node.side else ""
            if origin == "gamma":
                need(alpha_key(c) in base.keys, "hypothesis is not in the knowledge base")
            elif origin == "assumption":
                need(alpha_key(c) in {alpha_key(a) for a in live}, "assumption is not live here")
            elif origin == "order":
                self._order_fact(node, base, path)
            else:
                raise _Failure(node, f"unknown hypothesis origin '{origin}'", path)
            return

        if rule == RuleId.REIT:
            self._premises(node, 1, path)
            need(_same(p[0].conclusion, c), "reiteration changes the formula")
        elif rule == RuleId.AND_I:
            need(isinstance(c, And) and len(c.parts) == len(p), "conjunction does not match its premises")
            need(all(_same(part, q.conclusion) for part, q in zip(c.parts, p)), "conjunct mismatch")
        elif rule == RuleId.AND_E:
            self._premises(node, 1, path)
            need(isinstance(p[0].conclusion, And), "premise is not a conjunction")
            need(any(_same(part, c) for part in p[0].conclusion.parts), "conclusion is not a conjunct")
        elif rule == RuleId.OR_I:
            self._premises(node, 1, path)
            need(isinstance(c, Or), "conclusion is not a disjunction")
            need(any(_same(part, p[0].conclusion) for part in c.parts), "premise is not a disjunct")
        elif rule == RuleId.OR_E:
            need(len(p) >= 3 and isinstance(p[0].conclusion, Or), "first premise is not a disjunction")
            parts = p[0].conclusion.parts
            self._premises(node, len(parts) + 1, path)
            sub(0)
            for i, part in enumerate(parts, 1):
                need(_same(p[i].conclusion, c), f"case {i} proves a different formula")
                sub(i, (part,))
            return
        elif rule == RuleId.IMP_I:
            self._premises(node, 1, path)
            need(isinstance(c, Implies), "conclusion is not an implication")
            need(_same(p[0].conclusion, c.consequent), "premise is not the consequent")
            sub(0, (c.antecedent,))
            return
        elif rule == RuleId.IMP_E:
            self._premises(node, 2, path)
            major = p[0].conclusion
            need(isinstance(major, Implies), "major premise is not an implication")
            need(_same(major.antecedent, p[1].conclusion), "minor premise is not the antecedent")
            need(_same(major.consequent, c), "conclusion is not the consequent")
        elif rule == RuleId.NOT_I:
            self._premises(node, 1, path)
            need(isinstance(c, Not), "conclusion is not a negation")
            need(isinstance(p[0].conclusion, Bottom), "premise is not falsum")
            sub(0, (c.body,))
            return
        elif rule == RuleId.NOT_E:
            self._premises(node, 2, path)
            need(isinstance(c, Bottom), "conclusion is not falsum")
            need(_same(Not(p[0].conclusion), p[1].conclusion), "premises are not complementary")
        elif rule == RuleId.BOT_E:
            self._premises(node, 1, path)
            need(isinstance(p[0].conclusion, Bottom), "premise is not falsum")
        elif rule == RuleId.DNE:
            self._premises(node, 1, path)
            prem = p[0].conclusion
            need(isinstance(prem, Not) and isinstance(prem.body, Not), "premise is not a double negation")
            need(_same(prem.body.body, c), "conclusion does not drop the double negation")
        elif rule == RuleId.ALL_I:
            self._premises(node, 1, path)
            need(isinstance(c, ForAll), "conclusion is not universal")
            eigen = self._eigen(node, path)
            need(eigen.sort == c.var.sort, "eigenvariable has the wrong sort")
            need(eigen not in free_variables(c), "eigenvariable occurs in the conclusion")
            need(all(eigen not in free_variables(a) for a in live), "eigenvariable occurs in a live assumption")
            need(_same(p[0].conclusion, instantiate(c, eigen)), "premise is not the eigen instance")
        elif rule == RuleId.ALL_E:
            self._premises(node, 1, path)
            major = p[0].conclusion
            need(isinstance(major, ForAll), "premise is not universal")
            term = self._term(node, self._side(node, "term", path), path)
            need(term.sort.is_subsort_of(major.var.sort), "instance term has the wrong sort")
            need(_same(instantiate(major, term), c), "conclusion is not the instance")
        elif rule == RuleId.EX_I:
            self._premises(node, 1, path)
            need(isinstance(c, Exists), "conclusion is not existential")
            term = self._term(node, self._side(node, "term", path), path)
            need(term.sort.is_subsort_of(c.var.sort), "witness has the wrong sort")
            need(_same(instantiate(c, term), p[0].conclusion), "premise is not the witness instance")
        elif rule == RuleId.EX_E:
            self._premises(node, 2, path)
            major = p[0].conclusion
            need(isinstance(major, Exists), "first premise is not existential")
            eigen = self._eigen(node, path)
            need(eigen.sort == major.var.sort, "eigenvariable has the wrong sort")
            need(eigen not in free_variables(c), "eigenvariable occurs in the conclusion")
            need(eigen not in free_variables(major), "eigenvariable occurs in the existential")
            need(all(eigen not in free_variables(a) for a in live), "eigenvariable occurs in a live assumption")
            need(_same(p[1].conclusion, c), "case proves a different formula")
            sub(0)
            sub(1, (instantiate(major, eigen),))
            return
        elif rule in (RuleId.IK, RuleId.IB):
            self._closure(node, base, live, path)
            return
        elif rule == RuleId.I4:
            self._premises(node, 1, path)
            need(isinstance(p[0].conclusion, Knows), "premise is not a knowledge formula")
            need(_same(p[0].conclusion.body, c), "conclusion is not the known content")
        elif rule == RuleId.I13:
            self._premises(node, 1, path)
            prem = p[0].conclusion
            need(isinstance(prem, Intends) and isinstance(c, Perceives), "I13 links an intention to a perception")
            need(prem.agent == c.agent, "agents differ")
            need(_same(prem.body, c.body), "intended and perceived contents differ")
            self._order(node, base, prem.time, c.time, True, path)
        elif rule == RuleId.I14:
            self._premises(node, 3, path)
            ought = p[2].conclusion
            need(isinstance(ought, Ought), "third premise is not an obligation")
            agent, time = ought.agent, ought.time
            need(_same(p[0].conclusion, Believes(agent, time, ought.condition)), "first premise is not B(a,t,φ)")
            need(_same(p[1].conclusion, Believes(agent, time, ought)), "second premise is not B(a,t,O(...))")
            need(_same(c, Knows(agent, time, Intends(agent, time, ought.action))), "conclusion is not K(a,t,I(a,t,χ))")
        else:  # pragma: no cover
            raise _Failure(node, f"unknown rule {rule}", path)

        for i in range(len(p)):
            sub(i)

    def _order_fact(self, node, base: _Base, path):
        c = node.conclusion
        positive = not isinstance(c, Not)
        atom = c if positive else c.body
        if not isinstance(atom, Atom) or atom.predicate != "prior" or not atom.term.is_ground:
            raise _Failure(node, "order hypothesis is not a ground prior literal", path)
        verdict = base.order.decide_prior(*atom.term.args)
        if verdict is None or verdict != positive:
            raise _Failure(node, "order hypothesis is not decided true", path)

    def _closure(self, node: Proof, base: _Base, live, path):
        cls = Knows if node.rule == RuleId.IK else Believes
        c = node.conclusion
        need = lambda cond, reason: self._need(cond, node, reason, path)  # noqa: E731
        need(isinstance(c, cls), f"{node.rule.value} concludes a {cls.__name__} formula")
        inner = "inner" in node.side
        modal = node.premises[:-1] if inner else node.premises
        need(len(modal) >= 1 and (not inner or len(node.premises) >= 2), "missing modal premises")
        if not inner:
            need(len(modal) == 1, "persistence takes exactly one premise")
        t1 = modal[0].conclusion.time if isinstance(modal[0].conclusion, cls) else None
        for premise in modal:
            prem = premise.conclusion
            need(isinstance(prem, cls), "premise has the wrong modality")
            need(prem.agent == c.agent, "premise agent differs from the conclusion")
            need(prem.time == t1, "premises do not share one moment")
        self._order(node, base, t1, c.time, False, path)
        for i, premise in enumerate(modal):
            self._node(premise, base, live, f"{path}.{i}")
        if not inner:
            need(_same(modal[0].conclusion.body, c.body), "persistence changes the content")
            return
        derivation = node.premises[-1]
        need(_same(derivation.conclusion, c.body), "inner derivation proves a different content")
        contents = tuple(q.conclusion.body for q in modal)
        need(all(not free_variables(f) for f in contents), "inner premises must be closed")
        self._node(derivation, _Base.of(contents), (), f"{path}.{len(modal)}")


def check(proof: Proof, gamma: KnowledgeBase):
    """accept, or reject(node, reason) for the first failing node."""
    return Checker(gamma).check(proof)


def check_refutation(proof: Proof, gamma: KnowledgeBase):
    verdict = check(proof, gamma)
    if verdict and not isinstance(proof.conclusion, Bottom):
        return Reject(proof, "refutation does not conclude falsum")
    return verdict

