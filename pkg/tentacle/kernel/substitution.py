"""
Capture-avoiding substitution, alpha-equivalence and sort re-checking.

`alpha_key` maps a formula to a hashable nameless form (bound variables are
replaced by de Bruijn indices), so two formulas are alpha-equivalent exactly
when their keys are equal. The prover uses the key for lookups and memo tables.
"""

import re
from typing import Iterable, Mapping, Tuple

from tentacle.errors import SortError, UnknownSymbol
from tentacle.kernel.formulas import (
    AgentModal, Atom, Bottom, Common, Exists, ForAll, Formula, Ought, Says,
    free_variables, term_occurrences,
)
from tentacle.kernel.sorts import Sort
from tentacle.kernel.terms import Application, Constant, Term, Variable, map_term

_SUFFIX = re.compile(r"_\d+$")


def fresh_variable(var: Variable, avoid: Iterable[str]) -> Variable:
    """Deterministic fresh name: base_1, base_2, ... skipping names in `avoid`."""
    taken = set(avoid)
    base = _SUFFIX.sub("", var.name) or var.name
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    return Variable(f"{base}_{k}", var.sort)


def _check_binding(binding: Mapping[Variable, Term]):
    for var, term in binding.items():
        if not term.sort.is_subsort_of(var.sort):
            raise SortError(var.sort.name, term.sort.name, detail=f"binding for {var.name}")


def substitute_term(term: Term, binding: Mapping[Variable, Term]) -> Term:
    return map_term(term, lambda v: binding.get(v, v))


def substitute(formula: Formula, binding: Mapping[Variable, Term]) -> Formula:
    _check_binding(binding)
    return _subst(formula, dict(binding))


def _subst(formula: Formula, binding) -> Formula:
    if not binding:
        return formula
    if isinstance(formula, (ForAll, Exists)):
        var = formula.var
        inner = {v: t for v, t in binding.items() if v != var}
        live = tuple(v for v in free_variables(formula.body) if v in inner)
        if not live:
            return formula
        incoming = {u.name for v in live for u in inner[v].variables()}
        if var.name in incoming or any(u == var for v in live for u in inner[v].variables()):
            avoid = incoming | {v.name for v in free_variables(formula.body)} | {
                t.name for t in term_occurrences(formula.body) if isinstance(t, Variable)}
            renamed = fresh_variable(var, avoid)
            body = _subst(formula.body, {var: renamed})
            return type(formula)(renamed, _subst(body, inner))
        return type(formula)(var, _subst(formula.body, inner))
    return formula.map(lambda t: substitute_term(t, binding), lambda f: _subst(f, binding))


def instantiate(quantified: Formula, term: Term) -> Formula:
    """Body of a ForAll/Exists with its bound variable replaced by `term`."""
    return substitute(quantified.body, {quantified.var: term})


# --- alpha-equivalence --------------------------------------------------

def _term_key(term: Term, env: Tuple[Variable, ...]):
    if isinstance(term, Variable):
        for depth, bound in enumerate(reversed(env)):
            if bound == term:
                return ("#", depth)
        return ("?", term.name, term.sort.name)
    if isinstance(term, Application):
        return (term.symbol.name,) + tuple(_term_key(a, env) for a in term.args)
    return ("c", term.name, term.sort.name)


def _key(formula: Formula, env):
    if isinstance(formula, (ForAll, Exists)):
        return (formula.keyword, formula.var.sort.name, _key(formula.body, env + (formula.var,)))
    if isinstance(formula, Atom):
        return ("atom", _term_key(formula.term, env))
    if isinstance(formula, Bottom):
        return ("false",)
    name = getattr(formula, "keyword", type(formula).__name__)
    if isinstance(formula, Says):
        name = "S2" if formula.audience is not None else "S"
    return ((name,) + tuple(_term_key(t, env) for t in formula.terms())
            + tuple(_key(c, env) for c in formula.children()))


def alpha_key(formula: Formula):
    return _key(formula, ())


def alpha_equivalent(left: Formula, right: Formula) -> bool:
    return alpha_key(left) == alpha_key(right)


# --- sort re-checking ---------------------------------------------------

def sort_of(term: Term) -> Sort:
    """Recompute the sort of `term` bottom-up, re-validating every application."""
    if isinstance(term, Application):
        for expected, arg in zip(term.symbol.arg_sorts, term.args):
            found = sort_of(arg)
            if not found.is_subsort_of(expected):
                raise SortError(expected.name, found.name, detail=f"argument of {term.symbol.name}")
        return term.symbol.result
    return term.sort


def check_formula(formula: Formula, signature=None) -> Formula:
    """
    Re-run sort checking over every term of `formula`.
    With a signature, also require every symbol to be declared in it.
    """
    for node in formula.walk():
        for term in node.terms():
            sort_of(term)
            if signature is None:
                continue
            for sub in term.subterms():
                _check_declared(sub, signature)
        if isinstance(node, (ForAll, Exists)) and signature is not None:
            if node.var.sort.name not in signature.sorts:
                raise UnknownSymbol(node.var.sort.name)
        if isinstance(node, (AgentModal, Common, Says, Ought)):
            node.__post_init__()
    return formula


def _check_declared(term: Term, signature):
    if isinstance(term, Application):
        if signature.functions.get(term.symbol.name) != term.symbol:
            raise UnknownSymbol(term.symbol.name)
    elif isinstance(term, Constant):
        if term.integer is None and signature.constants.get(term.name) != term:
            raise UnknownSymbol(term.name)
    elif isinstance(term, Variable):
        if term.sort.name not in signature.sorts:
            raise UnknownSymbol(term.sort.name)

