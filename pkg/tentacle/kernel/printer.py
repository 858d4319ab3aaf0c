"""Pretty printer producing the concrete syntax the parser reads back."""

from typing import Dict

from tentacle.kernel.formulas import (
    AgentModal, And, Atom, Bottom, Common, Exists, ForAll, Formula, Implies,
    Not, Or, Ought, Says,
)
from tentacle.kernel.terms import Application, Term, Variable


def pretty_term(term: Term, names: Dict[Variable, str] = None) -> str:
    names = names or {}
    if isinstance(term, Variable):
        if term in names:
            return names[term]
        return f"?{term.name}:{term.sort.name}"
    if isinstance(term, Application):
        args = " ".join(pretty_term(a, names) for a in term.args)
        return f"({term.symbol.name} {args})"
    return term.name


def pretty(item, names: Dict[Variable, str] = None) -> str:
    if isinstance(item, Term):
        return pretty_term(item, names)
    return _formula(item, dict(names or {}))


def _binder_name(var: Variable, names: Dict[Variable, str]) -> str:
    taken = {shown for bound, shown in names.items() if bound != var}
    if var.name not in taken:
        return var.name
    k = 1
    while f"{var.name}_{k}" in taken:
        k += 1
    return f"{var.name}_{k}"


def _formula(f: Formula, names: Dict[Variable, str]) -> str:
    t = lambda term: pretty_term(term, names)  # noqa: E731
    if isinstance(f, Atom):
        return t(f.term)
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        return f"(not {_formula(f.body, names)})"
    if isinstance(f, (And, Or)):
        head = "and" if isinstance(f, And) else "or"
        return f"({head} {' '.join(_formula(p, names) for p in f.parts)})"
    if isinstance(f, Implies):
        return f"(implies {_formula(f.antecedent, names)} {_formula(f.consequent, names)})"
    if isinstance(f, (ForAll, Exists)):
        inner = dict(names)
        inner[f.var] = _binder_name(f.var, names)
        return f"({f.keyword} ({inner[f.var]} {f.var.sort.name}) {_formula(f.body, inner)})"
    if isinstance(f, AgentModal):
        return f"({f.keyword} {t(f.agent)} {t(f.time)} {_formula(f.body, names)})"
    if isinstance(f, Common):
        return f"(C {t(f.time)} {_formula(f.body, names)})"
    if isinstance(f, Says):
        if f.audience is None:
            return f"(S {t(f.agent)} {t(f.time)} {_formula(f.body, names)})"
        return f"(S {t(f.agent)} {t(f.audience)} {t(f.time)} {_formula(f.body, names)})"
    if isinstance(f, Ought):
        return (f"({f.keyword} {t(f.agent)} {t(f.time)} "
                f"{_formula(f.condition, names)} {_formula(f.action, names)})")
    raise TypeError(f"Cannot print {type(f).__name__}")
