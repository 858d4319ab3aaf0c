"""
One-way matching of formula patterns against formulas.

Pattern variables are the ∀-prefix of a rule; other variables must match
themselves. Bound variables inside the pattern correspond positionally to
bound variables in the target. `(+ x k)` with an integer k matches an integer
literal n by binding x to n - k.
"""

from typing import Dict, FrozenSet, Optional

from tentacle.kernel.formulas import (
    Atom, Bottom, Exists, ForAll, Formula, Not, Ought, Says,
)
from tentacle.kernel.terms import Application, Constant, Term, Variable, int_value, moment

Binding = Dict[Variable, Term]


def match_term(pattern: Term, target: Term, free: FrozenSet[Variable], binding: Binding,
               pairs: Dict[Variable, Variable]) -> Optional[Binding]:
    if isinstance(pattern, Variable):
        if pattern in pairs:
            return binding if target == pairs[pattern] else None
        if pattern in free:
            if pattern in binding:
                return binding if binding[pattern] == target else None
            if not target.sort.is_subsort_of(pattern.sort):
                return None
            bound_targets = set(pairs.values())
            if any(v in bound_targets for v in target.variables()):
                return None
            extended = dict(binding)
            extended[pattern] = target
            return extended
        return binding if pattern == target else None
    if isinstance(pattern, Application):
        value = target.integer if isinstance(target, Constant) else None
        if pattern.symbol.name == "+" and value is not None:
            left, right = pattern.args
            for var_side, const_side in ((left, right), (right, left)):
                k = int_value(const_side)
                if k is not None:
                    if value - k < 0:
                        return None
                    return match_term(var_side, moment(value - k), free, binding, pairs)
        if isinstance(target, Application) and target.symbol == pattern.symbol:
            for p_arg, t_arg in zip(pattern.args, target.args):
                binding = match_term(p_arg, t_arg, free, binding, pairs)
                if binding is None:
                    return None
            return binding
        return None
    return binding if pattern == target else None


def match(pattern: Formula, target: Formula, free: FrozenSet[Variable],
          binding: Optional[Binding] = None, pairs: Optional[Dict[Variable, Variable]] = None
          ) -> Optional[Binding]:
    binding = {} if binding is None else binding
    pairs = {} if pairs is None else pairs
    if type(pattern) is not type(target):
        return None
    if isinstance(pattern, Bottom):
        return binding
    if isinstance(pattern, Atom):
        return match_term(pattern.term, target.term, free, binding, pairs)
    if isinstance(pattern, (ForAll, Exists)):
        if pattern.var.sort != target.var.sort:
            return None
        inner = dict(pairs)
        inner[pattern.var] = target.var
        return match(pattern.body, target.body, free, binding, inner)
    if isinstance(pattern, Says) and (pattern.audience is None) != (target.audience is None):
        return None
    if isinstance(pattern, Ought) and pattern.flavor != target.flavor:
        return None
    p_terms, t_terms = pattern.terms(), target.terms()
    p_kids, t_kids = pattern.children(), target.children()
    if len(p_terms) != len(t_terms) or len(p_kids) != len(t_kids):
        return None
    for p, t in zip(p_terms, t_terms):
        binding = match_term(p, t, free, binding, pairs)
        if binding is None:
            return None
    for p, t in zip(p_kids, t_kids):
        binding = match(p, t, free, binding, pairs)
        if binding is None:
            return None
    return binding


def shape(formula: Formula):
    """Coarse index key: connective plus predicate name for atoms."""
    if isinstance(formula, Atom):
        return ("atom", formula.predicate)
    if isinstance(formula, Not) and isinstance(formula.body, Atom):
        return ("not", formula.body.predicate)
    return (type(formula).__name__,)
