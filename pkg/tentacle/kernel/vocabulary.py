"""Constructors for atoms over the built-in symbols."""

from tentacle.kernel.formulas import Atom, Not
from tentacle.kernel.signature import (
    ACTION_FN, CAN, CLIPPED, HAPPENS, HOLDS, INITIALLY, INITIATES, PLUS, PRIOR,
    TERMINATES,
)
from tentacle.kernel.terms import Term, apply, moment


def _t(value):
    return moment(value) if isinstance(value, int) else value


def action(agent: Term, action_type: Term) -> Term:
    return apply(ACTION_FN, (agent, action_type))


def happens(event: Term, time) -> Atom:
    return Atom(apply(HAPPENS, (event, _t(time))))


def does(agent: Term, action_type: Term, time) -> Atom:
    """happens(action(agent, action_type), time)"""
    return happens(action(agent, action_type), time)


def holds(fluent: Term, time) -> Atom:
    return Atom(apply(HOLDS, (fluent, _t(time))))


def initially(fluent: Term) -> Atom:
    return Atom(apply(INITIALLY, (fluent,)))


def initiates(event: Term, fluent: Term, time) -> Atom:
    return Atom(apply(INITIATES, (event, fluent, _t(time))))


def terminates(event: Term, fluent: Term, time) -> Atom:
    return Atom(apply(TERMINATES, (event, fluent, _t(time))))


def clipped(start, fluent: Term, end) -> Atom:
    return Atom(apply(CLIPPED, (_t(start), fluent, _t(end))))


def prior(earlier, later) -> Atom:
    return Atom(apply(PRIOR, (_t(earlier), _t(later))))


def can(agent: Term, action_type: Term, time) -> Atom:
    return Atom(apply(CAN, (agent, action_type, _t(time))))


def plus(time, offset) -> Term:
    return apply(PLUS, (_t(time), _t(offset)))


def negate(formula):
    """Complement of a literal: strips one negation or adds one."""
    return formula.body if isinstance(formula, Not) else Not(formula)
